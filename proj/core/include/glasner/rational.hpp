#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace glasner {

using QVec = std::vector<mpq_class>;
using ZVec = std::vector<mpz_class>;

// Reduces t into [0, 1).
mpq_class mod1(const mpq_class& t);

// Signed representative of t mod 1 in [-1/2, 1/2].
mpq_class centered_mod1(const mpq_class& t);

mpz_class lcm(const mpz_class& a, const mpz_class& b);
mpz_class gcd(const mpz_class& a, const mpz_class& b);

// gcd of all entries together with q (gcd(0, q) = q).
mpz_class gcd_with(const ZVec& v, const mpz_class& q);

double to_double(const mpq_class& q);

std::string to_string(const mpz_class& z);
std::string to_string(const mpq_class& q);

mpq_class parse_rational(const std::string& s);  // "p/q" or "p"

}  // namespace glasner
