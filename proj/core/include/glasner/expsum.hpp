#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "glasner/matrix.hpp"
#include "glasner/torus.hpp"

namespace glasner {

using cdouble = std::complex<double>;

// e(t) = exp(2 pi i t).
cdouble unit_phase(double t);
// Exact-rational angle, reduced mod 1 before trig.
cdouble unit_phase(const mpq_class& t);

// B(M) = { m in Z^d : m != 0, ||m||_inf <= M }.
struct FreqBox {
  int dim;
  long M;
  long long size() const;  // (2M+1)^d - 1
  // Visits every m in a fixed canonical (odometer) order; stop early by
  // returning false from the callback.
  void for_each(const std::function<bool(const std::vector<long>&)>& fn) const;
};

long freq_window(int d, double eps);  // M = ceil(d / eps)

struct PairBoundCheck {
  bool verified = false;
  double lhs = 0;  // k/3
  double rhs = 0;  // sum over B(M) of |sum_i e(m.u_i)| (lower bound if early-exited)
  long long terms = 0;
};

// Pair-correlation lower bound: k/3 <= sum_{m in B(M)} |sum_i e(m.u_i)|
// for points all at torus norm > eps, M = ceil(d/eps). Theorem-backed:
// verified=false signals a code bug, not a mathematical event.
// With early_exit the summation stops once the bound is met and rhs is
// only a lower bound for the full sum.
PairBoundCheck pair_correlation_bound(const std::vector<TorusPoint>& u, double eps,
                                      bool early_exit = false);

struct NonDensityCertificate {
  bool applicable = false;
  DensityVerdict verdict;
  double raw_lhs = 0;    // k^2/9
  double raw_rhs = 0;    // |B(M)| * sum_m |sum_i e(m.(alpha - g x_i))|^2
  double pair_sum = 0;   // sum_m sum_{i,j} e(m.g(x_i - x_j)), real part
};

// Proof-level inequality behind the non-density certificate: when gY is
// certified not eps-dense with witness alpha,
//   k^2/9 <= |B(M)| * sum_{m in B(M)} |sum_i e(m.(alpha - g x_i))|^2.
NonDensityCertificate non_density_certificate(const TorusPointSet& Y, const IntMat& g,
                                              double eps, int max_refinements = 10,
                                              bool early_exit = false);

struct TorsionHistogram {
  std::map<mpz_class, long long> counts;  // q -> h_q, ordered pairs i != j
  int k = 0;
};

TorsionHistogram torsion_histogram(const TorusPointSet& Y);

struct HqSum {
  double sum = 0;  // sum_q h_q q^{-r}
  int k = 0;
};

HqSum hq_sum_scaling(const TorusPointSet& Y, double r);

struct CompleteSumSpec {
  long long modulus = 1;                  // q >= 1
  std::vector<mpz_class> coefficients;    // b_1..b_r of (1/q) sum e(sum b_j n^j / q)
  double phase_offset = 0;                // theta in [0,1)
};

// (1/q) sum_{n=1}^{q} e(theta + P(n)/q), exact rational angles.
// Budget: q <= 10^6.
cdouble complete_rational_sum(const CompleteSumSpec& spec);

struct HuaRow {
  long long q = 0;
  double max_abs = 0;   // max |S| over sampled coefficient tuples
  double scaled = 0;    // max_abs * q^{1/D - delta}, delta = 0.05
};

// Samples random degree-D coefficient tuples with gcd(b_1..b_D, q) = 1 and
// tabulates the largest normalized complete sum per modulus.
std::vector<HuaRow> hua_decay_check(int D, const std::vector<long long>& q_list, int trials,
                                    uint64_t seed);

// (1/N) sum_{n=1}^{N} e(c_1 n + ... + c_D n^D).
cdouble weyl_average(const std::vector<double>& coeffs, long long N);

}  // namespace glasner
