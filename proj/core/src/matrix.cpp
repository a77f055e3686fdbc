#include "glasner/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace glasner {

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> entries) {
  rows_ = static_cast<int>(entries.size());
  cols_ = rows_ ? static_cast<int>(entries.begin()->size()) : 0;
  a_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& row : entries) {
    if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long x : row) a_.emplace_back(x);
  }
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("IntMat::*: shape mismatch");
  IntMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const mpz_class& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
    }
  return r;
}

IntMat IntMat::operator+(const IntMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMat::+: shape mismatch");
  IntMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

IntMat IntMat::operator-(const IntMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMat::-: shape mismatch");
  IntMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

ZVec IntMat::apply(const ZVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("IntMat::apply: dim mismatch");
  ZVec r(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

QVec IntMat::apply(const QVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("IntMat::apply: dim mismatch");
  QVec r(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += mpq_class((*this)(i, j)) * v[j];
  return r;
}

IntMat IntMat::transpose() const {
  IntMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool IntMat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

mpz_class IntMat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  int n = rows_;
  if (n == 0) return 1;
  IntMat m = *this;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        mpz_class num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

std::string IntMat::key() const {
  std::ostringstream ss;
  ss << rows_ << 'x' << cols_;
  for (const auto& x : a_) ss << ';' << x.get_str();
  return ss.str();
}

QMat::QMat(const IntMat& m) : QMat(m.rows(), m.cols()) {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = mpq_class(m(i, j));
}

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMat QMat::operator*(const QMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("QMat::*: shape mismatch");
  QMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const mpq_class& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
    }
  return r;
}

QMat QMat::operator+(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMat::+: shape mismatch");
  QMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

QMat QMat::operator*(const mpq_class& c) const {
  QMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

QVec QMat::apply(const QVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("QMat::apply: dim mismatch");
  QVec r(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

bool QMat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool QMat::is_integer() const {
  for (const auto& x : a_)
    if (x.get_den() != 1) return false;
  return true;
}

IntMat QMat::to_int() const {
  IntMat r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const mpq_class& x = (*this)(i, j);
      if (x.get_den() != 1) throw std::domain_error("QMat::to_int: non-integer entry");
      r(i, j) = x.get_num();
    }
  return r;
}

int QMat::rank() const {
  QMat m = *this;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int p = -1;
    for (int i = rank; i < rows_; ++i)
      if (m(i, col) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != rank)
      for (int j = 0; j < cols_; ++j) std::swap(m(rank, j), m(p, j));
    mpq_class inv = 1 / m(rank, col);
    for (int j = col; j < cols_; ++j) m(rank, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == rank || m(i, col) == 0) continue;
      mpq_class f = m(i, col);
      for (int j = col; j < cols_; ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

bool RowSpace::insert(QVec v) {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("RowSpace::insert: dim mismatch");
  for (size_t r = 0; r < basis_.size(); ++r) {
    int p = pivots_[r];
    if (v[p] != 0) {
      mpq_class f = v[p];
      for (int j = 0; j < dim_; ++j) v[j] -= f * basis_[r][j];
    }
  }
  int pivot = -1;
  for (int j = 0; j < dim_; ++j)
    if (v[j] != 0) { pivot = j; break; }
  if (pivot < 0) return false;
  mpq_class inv = 1 / v[pivot];
  for (int j = 0; j < dim_; ++j) v[j] *= inv;
  for (size_t r = 0; r < basis_.size(); ++r) {
    mpq_class f = basis_[r][pivot];
    if (f != 0)
      for (int j = 0; j < dim_; ++j) basis_[r][j] -= f * v[j];
  }
  basis_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool RowSpace::contains(QVec v) const {
  for (size_t r = 0; r < basis_.size(); ++r) {
    int p = pivots_[r];
    if (v[p] != 0) {
      mpq_class f = v[p];
      for (int j = 0; j < dim_; ++j) v[j] -= f * basis_[r][j];
    }
  }
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace glasner
