#pragma once

#include <cstdint>
#include <vector>

#include "glasner/matrix.hpp"

namespace glasner {

// T0 = L * D * Rp with L, Rp unimodular and D diagonal with a
// divisibility chain D_1 | D_2 | ... | D_k, D_i = 0 for i > k.
struct SnfFactorization {
  IntMat L;            // r x r
  IntMat D;            // r x d
  IntMat Rp;           // d x d
  ZVec divisors;       // length min(r, d), nonnegative
  int k = 0;           // index count of nonzero divisors
};

SnfFactorization smith_normal_form(const IntMat& T0);

// T0 = T * R with T injective (r x k), R surjective (k x d), and
// gcd(T w, q) <= Q for every w coprime to q.
struct GcdBoundFactorization {
  IntMat T;
  IntMat R;
  mpz_class Q;
  int dprime = 0;  // k
};

GcdBoundFactorization gcd_bound_factorize(const IntMat& T0);

// Random (w, q) sampling with gcd(w, q) = 1; true iff gcd(Tw, q) <= Q always.
bool gcd_bound_fuzz(const GcdBoundFactorization& f, int trials, long long q_max, uint64_t seed);

}  // namespace glasner
