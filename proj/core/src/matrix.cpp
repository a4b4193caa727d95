#include "oddq/matrix.hpp"

#include <algorithm>

namespace oddq {

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("vector size mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("vector size mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec operator*(const Scalar& s, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Mat::row(std::size_t i) const {
  Vec out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
  return out;
}

Vec Mat::col(std::size_t j) const {
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
  return out;
}

Mat Mat::mul(const Mat& o) const {
  if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
  Mat out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        out.at(i, j) += at(i, k) * o.at(k, j);
    }
  return out;
}

Vec Mat::apply(const Vec& x) const {
  if (x.size() != cols_) throw Error("matrix apply shape mismatch");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) out[i] += at(i, j) * x[j];
  return out;
}

Mat Mat::transpose() const {
  Mat out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

std::vector<std::size_t> Mat::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = r;
    while (sel < rows_ && at(sel, c).is_zero()) ++sel;
    if (sel == rows_) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(r, j));
    Scalar inv = Scalar(1) / at(r, c);
    for (std::size_t j = c; j < cols_; ++j) at(r, j) = inv * at(r, j);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c).is_zero()) continue;
      Scalar f = at(i, c);
      for (std::size_t j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t Mat::rank() const {
  Mat copy = *this;
  return copy.rref().size();
}

Mat Mat::kernel() const {
  Mat red = *this;
  std::vector<std::size_t> pivots = red.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    Vec v(cols_);
    v[c] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red.at(r, c);
    basis.push_back(v);
  }
  Mat out = Mat::from_rows(basis, cols_);
  out.rref();
  return out;
}

Scalar Mat::det() const {
  if (rows_ != cols_) throw Error("determinant of a non-square matrix");
  Mat m = *this;
  Scalar acc(1);
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t sel = c;
    while (sel < rows_ && m.at(sel, c).is_zero()) ++sel;
    if (sel == rows_) return Scalar(0);
    if (sel != c) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(c, j));
      acc = -acc;
    }
    acc *= m.at(c, c);
    Scalar inv = Scalar(1) / m.at(c, c);
    for (std::size_t i = c + 1; i < rows_; ++i) {
      if (m.at(i, c).is_zero()) continue;
      Scalar f = inv * m.at(i, c);
      for (std::size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return acc;
}

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  Mat aug(rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = Scalar(1);
  }
  auto pivots = aug.rref();
  if (pivots.size() != rows_ || pivots.back() >= cols_) return std::nullopt;
  Mat out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = aug.at(i, cols_ + j);
  return out;
}

void Mat::append_row(const Vec& r) {
  if (r.size() != cols_) {
    if (rows_ == 0) cols_ = r.size();
    else throw Error("row length mismatch");
  }
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  Mat m = Mat::from_rows(vectors, ambient);
  auto pivots = m.rref();
  Subspace out(ambient);
  Mat basis(pivots.size(), ambient);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < ambient; ++j) basis.at(i, j) = m.at(i, j);
  out.basis_ = basis;
  return out;
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.rows(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!basis_.at(i, j).is_zero()) {
        out.push_back(j);
        break;
      }
  return out;
}

bool Subspace::contains(const Vec& v) const {
  // Reduce v against the echelon basis.
  Vec r = v;
  auto piv = pivots();
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (r[piv[i]].is_zero()) continue;
    Scalar f = r[piv[i]];
    for (std::size_t j = 0; j < ambient_; ++j) r[j] -= f * basis_.at(i, j);
  }
  return is_zero(r);
}

bool Subspace::contains(const Subspace& o) const {
  for (std::size_t i = 0; i < o.dim(); ++i)
    if (!contains(o.basis_row(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw Error("subspace ambient mismatch");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < dim(); ++i) rows.push_back(basis_row(i));
  for (std::size_t i = 0; i < o.dim(); ++i) rows.push_back(o.basis_row(i));
  return span(ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw Error("subspace ambient mismatch");
  // x in both spans: x = y^T A = z^T B; solve [A^T | -B^T] (y,z)^T = 0.
  std::size_t da = dim(), db = o.dim();
  if (da == 0 || db == 0) return Subspace(ambient_);
  Mat sys(ambient_, da + db);
  for (std::size_t j = 0; j < da; ++j)
    for (std::size_t i = 0; i < ambient_; ++i) sys.at(i, j) = basis_.at(j, i);
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t i = 0; i < ambient_; ++i) sys.at(i, da + j) = -o.basis_.at(j, i);
  Mat ker = sys.kernel();
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < ker.rows(); ++k) {
    Vec x(ambient_);
    for (std::size_t j = 0; j < da; ++j)
      if (!ker.at(k, j).is_zero())
        for (std::size_t i = 0; i < ambient_; ++i)
          x[i] += ker.at(k, j) * basis_.at(j, i);
    rows.push_back(x);
  }
  return span(ambient_, rows);
}

}  // namespace oddq
