#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "oddq/scalar.hpp"

namespace oddq {

using Vec = std::vector<Scalar>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);
bool is_zero(const Vec& v);

/// Dense matrix over the exact scalar field. Row-major.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  Mat mul(const Mat& o) const;
  Vec apply(const Vec& x) const;  // matrix * column vector
  Mat transpose() const;

  /// In-place reduction to reduced row echelon form. Returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  /// RREF basis of the right null space, one row per basis vector.
  Mat kernel() const;
  Scalar det() const;
  std::optional<Mat> inverse() const;

  void append_row(const Vec& r);
  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

/// Subspace of a coordinate space, held in reduced echelon form so that two
/// subspaces are equal exactly when their matrices are.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  Vec basis_row(std::size_t i) const { return basis_.row(i); }
  std::vector<std::size_t> pivots() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

 private:
  std::size_t ambient_;
  Mat basis_;
};

}  // namespace oddq
