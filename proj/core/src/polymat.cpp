#include "glasner/polymat.hpp"

#include <cmath>
#include <stdexcept>

namespace glasner {

PolyMatrix::PolyMatrix(int dim, std::vector<QMat> coeffs) : dim_(dim), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back(dim, dim);
  for (const auto& c : coeffs_)
    if (c.rows() != dim_ || c.cols() != dim_) throw std::invalid_argument("PolyMatrix: coeff shape mismatch");
  trim();
}

PolyMatrix PolyMatrix::constant(const IntMat& c) {
  if (c.rows() != c.cols()) throw std::invalid_argument("PolyMatrix: square matrices only");
  return PolyMatrix(c.rows(), {QMat(c)});
}

PolyMatrix PolyMatrix::from_int_coeffs(const std::vector<IntMat>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("PolyMatrix: empty coefficient list");
  std::vector<QMat> qs;
  qs.reserve(coeffs.size());
  for (const auto& c : coeffs) qs.emplace_back(c);
  return PolyMatrix(coeffs.front().rows(), std::move(qs));
}

void PolyMatrix::trim() {
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool PolyMatrix::integer_coeffs() const {
  for (const auto& c : coeffs_)
    if (!c.is_integer()) return false;
  return true;
}

QMat PolyMatrix::eval(const mpq_class& x) const {
  QMat acc = coeffs_.back();
  for (int j = degree() - 1; j >= 0; --j) acc = acc * x + coeffs_[j];
  return acc;
}

IntMat PolyMatrix::eval_int(const mpz_class& n) const { return eval(mpq_class(n)).to_int(); }

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("PolyMatrix::*: dim mismatch");
  std::vector<QMat> out(static_cast<size_t>(degree() + o.degree()) + 1, QMat(dim_, dim_));
  for (int i = 0; i <= degree(); ++i)
    for (int j = 0; j <= o.degree(); ++j) out[i + j] = out[i + j] + coeffs_[i] * o.coeffs_[j];
  return PolyMatrix(dim_, std::move(out));
}

FreqMapMatrix freq_map(const PolyMatrix& A, const std::vector<long>& m) {
  if (static_cast<int>(m.size()) != A.dim()) throw std::invalid_argument("freq_map: dim mismatch");
  bool zero = true;
  for (long c : m)
    if (c != 0) zero = false;
  if (zero) throw std::invalid_argument("freq_map: m must be nonzero");

  const int d = A.dim(), D = A.degree();
  FreqMapMatrix out;
  out.m = m;
  out.rows = QMat(std::max(D, 0), d);
  for (int j = 1; j <= D; ++j)
    for (int col = 0; col < d; ++col) {
      mpq_class s = 0;
      for (int i = 0; i < d; ++i) s += mpq_class(m[i]) * A.coeff(j)(i, col);
      out.rows(j - 1, col) = s;
    }
  return out;
}

bool check_nondegenerate_pair(const PolyMatrix& A, const QVec& a) {
  if (static_cast<int>(a.size()) != A.dim()) throw std::invalid_argument("check_nondegenerate_pair: dim mismatch");
  bool zero = true;
  for (const auto& c : a)
    if (c != 0) zero = false;
  if (zero) throw std::invalid_argument("check_nondegenerate_pair: a must be nonzero");

  const int d = A.dim(), D = A.degree();
  if (D < 1) return false;
  QMat cols(d, D);
  for (int j = 1; j <= D; ++j) {
    QVec v = A.coeff(j).apply(a);
    for (int i = 0; i < d; ++i) cols(i, j - 1) = v[i];
  }
  return cols.rank() == d;
}

FloatHypothesisVerdict check_nondegenerate_pair_float(const PolyMatrix& A,
                                                      const std::vector<double>& a) {
  const int d = A.dim(), D = A.degree();
  FloatHypothesisVerdict out;
  if (D < 1) return out;
  // Gaussian elimination with partial pivoting on [C_1 a | ... | C_D a].
  std::vector<std::vector<double>> m(d, std::vector<double>(D, 0.0));
  for (int j = 1; j <= D; ++j)
    for (int i = 0; i < d; ++i)
      for (int c = 0; c < d; ++c) m[i][j - 1] += A.coeff(j)(i, c).get_d() * a[c];

  constexpr double kCondThreshold = 1e8;
  double max_pivot = 0, min_pivot = 0;
  int rank = 0;
  for (int col = 0; col < D && rank < d; ++col) {
    int p = rank;
    for (int i = rank + 1; i < d; ++i)
      if (std::fabs(m[i][col]) > std::fabs(m[p][col])) p = i;
    double piv = std::fabs(m[p][col]);
    if (piv < 1e-14) continue;
    std::swap(m[rank], m[p]);
    for (int i = rank + 1; i < d; ++i) {
      double f = m[i][col] / m[rank][col];
      for (int j = col; j < D; ++j) m[i][j] -= f * m[rank][j];
    }
    max_pivot = std::max(max_pivot, piv);
    min_pivot = rank == 0 ? piv : std::min(min_pivot, piv);
    ++rank;
  }
  out.ok = rank == d;
  out.confident = !out.ok || (min_pivot > 0 && max_pivot / min_pivot < kCondThreshold);
  return out;
}

SetHypothesisResult check_set_hypothesis(const PolyMatrix& A, const std::vector<QVec>& lifts) {
  const int n = static_cast<int>(lifts.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (lifts[i] == lifts[j]) throw std::invalid_argument("check_set_hypothesis: duplicate lifts");
  SetHypothesisResult out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      QVec a(lifts[i].size());
      for (size_t c = 0; c < a.size(); ++c) a[c] = lifts[i][c] - lifts[j][c];
      if (!check_nondegenerate_pair(A, a)) {
        out.ok = false;
        out.bad_pair = {i, j};
        return out;
      }
    }
  return out;
}

}  // namespace glasner
