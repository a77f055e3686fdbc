#include "glasner/rational.hpp"

#include <stdexcept>

namespace glasner {

mpq_class mod1(const mpq_class& t) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
  mpq_class r = t - mpq_class(fl);
  r.canonicalize();
  return r;
}

mpq_class centered_mod1(const mpq_class& t) {
  mpq_class r = mod1(t);
  if (r * 2 > 1) r -= 1;
  return r;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

mpz_class gcd_with(const ZVec& v, const mpz_class& q) {
  mpz_class g = abs(q);
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

double to_double(const mpq_class& q) { return q.get_d(); }

std::string to_string(const mpz_class& z) { return z.get_str(); }

std::string to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

}  // namespace glasner
