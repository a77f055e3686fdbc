#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "glasner/matrix.hpp"

namespace glasner {

// Square matrix with polynomial entries A(x) = sum_j C_j x^j. Coefficients
// are rational: integer matrices cover A(x) in M_dxd(Z[x]), while powers of
// unipotent matrices need integer-valued polynomials with rational
// coefficients (binomials).
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int dim, std::vector<QMat> coeffs);
  static PolyMatrix constant(const IntMat& c);
  static PolyMatrix from_int_coeffs(const std::vector<IntMat>& coeffs);

  int dim() const { return dim_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const QMat& coeff(int j) const { return coeffs_[j]; }
  const std::vector<QMat>& coeffs() const { return coeffs_; }
  bool integer_coeffs() const;

  QMat eval(const mpq_class& x) const;        // Horner
  IntMat eval_int(const mpz_class& n) const;  // throws on non-integer values

  PolyMatrix operator*(const PolyMatrix& o) const;

 private:
  void trim();
  int dim_ = 0;
  std::vector<QMat> coeffs_;  // at least the constant term
};

// Coefficient rows of u -> m.(A(x) - A(0))u: row j-1 is m^T C_j, j = 1..D.
struct FreqMapMatrix {
  std::vector<long> m;
  QMat rows;  // D x d
};

FreqMapMatrix freq_map(const PolyMatrix& A, const std::vector<long>& m);

// True iff no nonzero integer v has v.C_j a = 0 for all j >= 1; decided by
// the exact rank of [C_1 a | ... | C_D a] (rank d). Rank deficiency yields a
// rational orthogonal vector which scales to an integer one, so the real and
// integer quantifications agree.
bool check_nondegenerate_pair(const PolyMatrix& A, const QVec& a);

// Heuristic Float-mode variant: double-precision rank with a pivot
// threshold; `confident` is false near the threshold.
struct FloatHypothesisVerdict {
  bool ok = false;
  bool confident = false;
};
FloatHypothesisVerdict check_nondegenerate_pair_float(const PolyMatrix& A,
                                                      const std::vector<double>& a);

struct SetHypothesisResult {
  bool ok = true;
  std::optional<std::pair<int, int>> bad_pair;
};

// Applies the pair check to every difference of distinct exact lifts.
SetHypothesisResult check_set_hypothesis(const PolyMatrix& A, const std::vector<QVec>& lifts);

}  // namespace glasner
