#include "oddq/superalgebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace oddq {

SuperAlgebra::SuperAlgebra(std::vector<std::string> even_names,
                           std::vector<std::string> odd_names)
    : n_even_(even_names.size()) {
  names_ = std::move(even_names);
  names_.insert(names_.end(), odd_names.begin(), odd_names.end());
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw Error("duplicate basis names");
}

std::optional<std::size_t> SuperAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

void SuperAlgebra::check_grading(std::size_t i, std::size_t j, const Vec& value) const {
  int target = (parity(i) + parity(j)) % 2;
  for (std::size_t k = 0; k < value.size(); ++k) {
    if (!value[k].is_zero() && parity(k) != target)
      throw Error("grading violation in [" + names_[i] + "," + names_[j] +
                  "]: component " + names_[k] + " has the wrong parity");
  }
}

void SuperAlgebra::set_bracket(std::size_t i, std::size_t j, const Vec& value) {
  if (i >= dim() || j >= dim() || value.size() != dim())
    throw Error("bracket index/size out of range");
  Vec v = value;
  std::size_t a = i, b = j;
  if (i > j) {
    std::swap(a, b);
    // [x_j, x_i] = -(-1)^{|i||j|} [x_i, x_j]
    Scalar sign = (parity(i) && parity(j)) ? Scalar(1) : Scalar(-1);
    v = sign * v;
  }
  if (a == b && !is_odd(a) && !is_zero(v))
    throw Error("nonzero bracket [" + names_[a] + "," + names_[a] + "] on an even vector");
  check_grading(a, b, v);
  if (is_zero(v)) {
    table_.erase({a, b});
    return;
  }
  if (table_.count({a, b}))
    throw Error("duplicate bracket entry for (" + names_[a] + "," + names_[b] + ")");
  table_[{a, b}] = v;
}

void SuperAlgebra::set_bracket(const std::string& x, const std::string& y,
                               const std::vector<std::pair<std::string, Scalar>>& value) {
  auto i = index_of(x), j = index_of(y);
  if (!i || !j) throw Error("unknown basis name in bracket (" + x + "," + y + ")");
  Vec v(dim());
  for (const auto& [name, coeff] : value) {
    auto k = index_of(name);
    if (!k) throw Error("unknown basis name '" + name + "' in bracket value");
    v[*k] += coeff;
  }
  set_bracket(*i, *j, v);
}

Vec SuperAlgebra::structure(std::size_t i, std::size_t j) const {
  std::size_t a = std::min(i, j), b = std::max(i, j);
  auto it = table_.find({a, b});
  if (it == table_.end()) return Vec(dim());
  if (i <= j) return it->second;
  Scalar sign = (parity(i) && parity(j)) ? Scalar(1) : Scalar(-1);
  return sign * it->second;
}

Vec SuperAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim() || y.size() != dim()) throw Error("bracket operand dimension mismatch");
  Vec out(dim());
  for (const auto& [pair, value] : table_) {
    auto [i, j] = pair;
    // contribution of [x_i, x_j] and, for i != j, of [x_j, x_i]
    Scalar c = x[i] * y[j];
    if (i != j) {
      Scalar sign = (parity(i) && parity(j)) ? Scalar(1) : Scalar(-1);
      c += sign * (x[j] * y[i]);
    }
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < dim(); ++k)
      if (!value[k].is_zero()) out[k] += c * value[k];
  }
  return out;
}

std::vector<JacobiViolation> SuperAlgebra::super_jacobi_violations() const {
  std::vector<JacobiViolation> out;
  std::size_t n = dim();
  std::vector<std::vector<Vec>> S(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) S[i][j] = structure(i, j);
  auto nest = [&](std::size_t a, std::size_t b, std::size_t c) {
    Vec acc(n);
    const Vec& w = S[b][c];
    for (std::size_t k = 0; k < n; ++k) {
      if (w[k].is_zero()) continue;
      const Vec& s = S[a][k];
      for (std::size_t t = 0; t < n; ++t)
        if (!s[t].is_zero()) acc[t] += w[k] * s[t];
    }
    return acc;
  };
  auto sgn = [](int a, int b) { return (a && b) ? Scalar(-1) : Scalar(1); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        int pi = parity(i), pj = parity(j), pk = parity(k);
        Vec residual = sgn(pi, pk) * nest(i, j, k) + sgn(pi, pj) * nest(j, k, i) +
                       sgn(pj, pk) * nest(k, i, j);
        if (!is_zero(residual)) out.push_back({{i, j, k}, residual});
      }
  return out;
}

Subspace SuperAlgebra::center() const {
  // kernel of x -> ([x, b_0], ..., [x, b_{n-1}]) stacked
  std::size_t n = dim();
  Mat sys(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      Vec v = structure(i, j);
      for (std::size_t k = 0; k < n; ++k) sys.at(j * n + k, i) = v[k];
    }
  Mat ker = sys.kernel();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < ker.rows(); ++i) rows.push_back(ker.row(i));
  return Subspace::span(n, rows);
}

std::vector<Subspace> SuperAlgebra::lower_central_series(bool restrict_to_even) const {
  std::size_t n = dim();
  std::vector<Vec> gens;
  std::size_t limit = restrict_to_even ? n_even_ : n;
  for (std::size_t i = 0; i < limit; ++i) {
    Vec e(n);
    e[i] = Scalar(1);
    gens.push_back(e);
  }
  std::vector<Subspace> series{Subspace::span(n, gens)};
  while (true) {
    const Subspace& prev = series.back();
    std::vector<Vec> next;
    for (std::size_t r = 0; r < prev.dim(); ++r)
      for (std::size_t i = 0; i < limit; ++i) {
        Vec e(n);
        e[i] = Scalar(1);
        next.push_back(bracket(prev.basis_row(r), e));
      }
    Subspace ns = Subspace::span(n, next);
    if (ns.dim() == prev.dim()) break;  // stabilized without reaching zero
    series.push_back(ns);
    if (ns.dim() == 0) break;
  }
  return series;
}

std::vector<std::size_t> SuperAlgebra::lower_central_dims(bool restrict_to_even) const {
  std::vector<std::size_t> dims;
  for (const Subspace& s : lower_central_series(restrict_to_even)) dims.push_back(s.dim());
  return dims;
}

bool SuperAlgebra::is_nilpotent(bool restrict_to_even) const {
  auto series = lower_central_series(restrict_to_even);
  return series.back().dim() == 0;
}

SuperAlgebra SuperAlgebra::change_basis(const Mat& P) const {
  std::size_t n = dim();
  if (P.rows() != n || P.cols() != n) throw Error("change of basis has the wrong shape");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (parity(i) != parity(j) && !P.at(i, j).is_zero())
        throw Error("change of basis mixes parities");
  auto inv = P.inverse();
  if (!inv) throw Error("change of basis is not invertible");
  std::vector<std::string> even(names_.begin(), names_.begin() + n_even_);
  std::vector<std::string> odd(names_.begin() + n_even_, names_.end());
  SuperAlgebra out(even, odd);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (!is_odd(j) && i == j) continue;
      Vec value = inv->apply(bracket(P.col(i), P.col(j)));
      if (!is_zero(value)) out.set_bracket(i, j, value);
    }
  return out;
}

bool SuperAlgebra::same_table(const SuperAlgebra& o) const {
  if (n_even_ != o.n_even_ || dim() != o.dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i; j < dim(); ++j)
      if (structure(i, j) != o.structure(i, j)) return false;
  return true;
}

Subspace SuperAlgebra::even_subspace() const {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n_even_; ++i) {
    Vec e(dim());
    e[i] = Scalar(1);
    rows.push_back(e);
  }
  return Subspace::span(dim(), rows);
}

Subspace SuperAlgebra::odd_subspace() const {
  std::vector<Vec> rows;
  for (std::size_t i = n_even_; i < dim(); ++i) {
    Vec e(dim());
    e[i] = Scalar(1);
    rows.push_back(e);
  }
  return Subspace::span(dim(), rows);
}

std::pair<Subspace, Subspace> SuperAlgebra::graded_parts(const Subspace& s) const {
  return {s.intersect(even_subspace()), s.intersect(odd_subspace())};
}

std::string SuperAlgebra::format_vector(const Vec& v) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!first) os << " + ";
    if (v[i] == Scalar(1)) os << names_[i];
    else os << "(" << v[i].str() << ")*" << names_[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace oddq
