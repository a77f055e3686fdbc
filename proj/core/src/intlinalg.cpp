#include "glasner/intlinalg.hpp"

#include <random>
#include <stdexcept>

namespace glasner {

namespace {

struct SnfState {
  IntMat A, L, Rp;

  // A <- EA updates keep T0 = L * A * Rp by applying E^-1 to L on the right.
  void swap_rows(int i, int j) {
    for (int c = 0; c < A.cols(); ++c) std::swap(A(i, c), A(j, c));
    for (int r = 0; r < L.rows(); ++r) std::swap(L(r, i), L(r, j));
  }
  void add_row(int dst, int src, const mpz_class& c) {  // row_dst += c * row_src
    for (int col = 0; col < A.cols(); ++col) A(dst, col) += c * A(src, col);
    for (int r = 0; r < L.rows(); ++r) L(r, src) -= c * L(r, dst);
  }
  void negate_row(int i) {
    for (int c = 0; c < A.cols(); ++c) A(i, c) = -A(i, c);
    for (int r = 0; r < L.rows(); ++r) L(r, i) = -L(r, i);
  }
  void swap_cols(int i, int j) {
    for (int r = 0; r < A.rows(); ++r) std::swap(A(r, i), A(r, j));
    for (int c = 0; c < Rp.cols(); ++c) std::swap(Rp(i, c), Rp(j, c));
  }
  void add_col(int dst, int src, const mpz_class& c) {  // col_dst += c * col_src
    for (int r = 0; r < A.rows(); ++r) A(r, dst) += c * A(r, src);
    for (int col = 0; col < Rp.cols(); ++col) Rp(src, col) -= c * Rp(dst, col);
  }
};

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SnfFactorization smith_normal_form(const IntMat& T0) {
  const int r = T0.rows(), d = T0.cols();
  SnfState s{T0, IntMat::identity(r), IntMat::identity(d)};
  const int rank_bound = std::min(r, d);

  for (int t = 0; t < rank_bound; ++t) {
    while (true) {
      // Minimal nonzero entry of the trailing submatrix to the pivot slot.
      int pi = -1, pj = -1;
      mpz_class best;
      for (int i = t; i < r; ++i)
        for (int j = t; j < d; ++j) {
          if (s.A(i, j) == 0) continue;
          mpz_class a = abs(s.A(i, j));
          if (pi < 0 || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) goto finished;  // trailing submatrix is zero
      if (pi != t) s.swap_rows(t, pi);
      if (pj != t) s.swap_cols(t, pj);

      bool clean = true;
      for (int i = t + 1; i < r; ++i) {
        if (s.A(i, t) == 0) continue;
        s.add_row(i, t, -floor_div(s.A(i, t), s.A(t, t)));
        if (s.A(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < d; ++j) {
        if (s.A(t, j) == 0) continue;
        s.add_col(j, t, -floor_div(s.A(t, j), s.A(t, t)));
        if (s.A(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility fix-up: drag a non-multiple into the pivot row.
      bool fixed = false;
      for (int i = t + 1; i < r && !fixed; ++i)
        for (int j = t + 1; j < d && !fixed; ++j)
          if (s.A(i, j) % s.A(t, t) != 0) {
            s.add_row(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
  }
finished:
  for (int t = 0; t < rank_bound; ++t)
    if (s.A(t, t) < 0) s.negate_row(t);

  SnfFactorization out;
  out.L = s.L;
  out.D = s.A;
  out.Rp = s.Rp;
  out.divisors.resize(rank_bound);
  for (int t = 0; t < rank_bound; ++t) {
    out.divisors[t] = s.A(t, t);
    if (out.divisors[t] != 0) out.k = t + 1;
  }
  return out;
}

GcdBoundFactorization gcd_bound_factorize(const IntMat& T0) {
  if (T0.is_zero()) throw std::domain_error("gcd_bound_factorize: zero map has no factorization");
  SnfFactorization snf = smith_normal_form(T0);
  const int r = T0.rows(), d = T0.cols(), k = snf.k;

  GcdBoundFactorization out;
  out.dprime = k;
  out.Q = snf.divisors[k - 1];
  // T = (L D) restricted to span(e_1..e_k); column j is D_j times column j of L.
  out.T = IntMat(r, k);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < k; ++j) out.T(i, j) = snf.L(i, j) * snf.divisors[j];
  // R = P_W Rp: the first k rows of Rp.
  out.R = IntMat(k, d);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < d; ++j) out.R(i, j) = snf.Rp(i, j);
  return out;
}

bool gcd_bound_fuzz(const GcdBoundFactorization& f, int trials, long long q_max, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> q_dist(2, q_max);
  std::uniform_int_distribution<long> w_dist(-50, 50);
  for (int t = 0; t < trials; ++t) {
    mpz_class q(static_cast<long>(q_dist(rng)));
    ZVec w(f.dprime);
    mpz_class g;
    do {
      g = q;
      for (auto& x : w) {
        x = w_dist(rng);
        g = gcd(g, x);
      }
    } while (g != 1);
    if (gcd_with(f.T.apply(w), q) > f.Q) return false;
  }
  return true;
}

}  // namespace glasner
