#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "glasner/rational.hpp"

namespace glasner {

// Dense integer matrix with arbitrary-precision entries.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
  IntMat(std::initializer_list<std::initializer_list<long>> entries);

  static IntMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  mpz_class& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const mpz_class& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const IntMat& o) const { return !(*this == o); }

  IntMat operator*(const IntMat& o) const;
  IntMat operator+(const IntMat& o) const;
  IntMat operator-(const IntMat& o) const;

  ZVec apply(const ZVec& v) const;
  QVec apply(const QVec& v) const;

  IntMat transpose() const;
  bool is_zero() const;

  // Exact determinant (square only), Bareiss fraction-free elimination.
  mpz_class det() const;

  // Canonical string key for hashing/deduplication.
  std::string key() const;

 private:
  int rows_, cols_;
  std::vector<mpz_class> a_;
};

// Dense rational matrix.
class QMat {
 public:
  QMat() : rows_(0), cols_(0) {}
  QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
  explicit QMat(const IntMat& m);

  static QMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  mpq_class& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const mpq_class& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  QMat operator*(const QMat& o) const;
  QMat operator+(const QMat& o) const;
  QMat operator*(const mpq_class& c) const;

  QVec apply(const QVec& v) const;
  bool is_zero() const;
  bool is_integer() const;
  IntMat to_int() const;  // throws if any denominator != 1

  int rank() const;

 private:
  int rows_, cols_;
  std::vector<mpq_class> a_;
};

// Incremental row-space basis over Q, kept in reduced echelon form.
// Used for affine-span traces where vectors arrive one at a time.
class RowSpace {
 public:
  explicit RowSpace(int dim) : dim_(dim) {}

  // Returns true if v enlarged the span.
  bool insert(QVec v);
  int dim() const { return static_cast<int>(basis_.size()); }
  int ambient_dim() const { return dim_; }
  const std::vector<QVec>& basis() const { return basis_; }
  bool contains(QVec v) const;

 private:
  int dim_;
  std::vector<QVec> basis_;   // echelon rows
  std::vector<int> pivots_;   // pivot column per row
};

}  // namespace glasner
