#include "oddq/param_algebra.hpp"

#include <functional>

namespace oddq {

ParamAlgebra::ParamAlgebra(std::vector<std::string> even_names,
                           std::vector<std::string> odd_names,
                           std::vector<std::string> vars)
    : n_even_(even_names.size()), vars_(std::move(vars)) {
  names_ = std::move(even_names);
  names_.insert(names_.end(), odd_names.begin(), odd_names.end());
}

std::size_t ParamAlgebra::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  throw Error("unknown indeterminate '" + name + "'");
}

void ParamAlgebra::set_bracket(std::size_t i, std::size_t j, const PolyVec& value) {
  if (i > j) throw Error("parametric brackets must be set on canonical pairs");
  if (value.size() != dim()) throw Error("parametric bracket size mismatch");
  int target = (parity(i) + parity(j)) % 2;
  for (std::size_t k = 0; k < dim(); ++k)
    if (!value[k].is_zero() && parity(k) != target)
      throw Error("parametric grading violation at [" + names_[i] + "," + names_[j] + "]");
  table_[{i, j}] = value;
}

PolyVec ParamAlgebra::structure(std::size_t i, std::size_t j) const {
  std::size_t a = std::min(i, j), b = std::max(i, j);
  auto it = table_.find({a, b});
  if (it == table_.end()) return PolyVec(dim(), Poly(nvars()));
  if (i <= j) return it->second;
  Rational sign = (parity(i) && parity(j)) ? 1 : -1;
  PolyVec out;
  out.reserve(dim());
  for (const Poly& p : it->second) out.push_back(p.scaled(sign));
  return out;
}

void ParamAlgebra::substitute(std::size_t var, const Poly& replacement) {
  for (auto& [key, value] : table_)
    for (Poly& p : value) p = p.substituted(var, replacement);
}

PolyVec basis_polyvec(const ParamAlgebra& alg, std::size_t i) {
  PolyVec v(alg.dim(), Poly(alg.nvars()));
  v[i] = Poly::constant(alg.nvars(), 1);
  return v;
}

namespace {

PolyVec bracket_basis_with(const ParamAlgebra& alg, std::size_t a, const PolyVec& w) {
  // [x_a, w] for a coefficient vector w of polynomials
  PolyVec out(alg.dim(), Poly(alg.nvars()));
  for (std::size_t k = 0; k < alg.dim(); ++k) {
    if (w[k].is_zero()) continue;
    PolyVec s = alg.structure(a, k);
    for (std::size_t t = 0; t < alg.dim(); ++t)
      if (!s[t].is_zero()) out[t] = out[t] + w[k] * s[t];
  }
  return out;
}

}  // namespace

PolyVec ParamAlgebra::jacobi_residual(std::size_t i, std::size_t j, std::size_t k) const {
  auto sgn = [&](std::size_t a, std::size_t b) {
    return (parity(a) && parity(b)) ? Rational(-1) : Rational(1);
  };
  PolyVec t1 = bracket_basis_with(*this, i, structure(j, k));
  PolyVec t2 = bracket_basis_with(*this, j, structure(k, i));
  PolyVec t3 = bracket_basis_with(*this, k, structure(i, j));
  PolyVec out(dim(), Poly(nvars()));
  Rational s1 = sgn(i, k), s2 = sgn(i, j), s3 = sgn(j, k);
  for (std::size_t t = 0; t < dim(); ++t)
    out[t] = t1[t].scaled(s1) + t2[t].scaled(s2) + t3[t].scaled(s3);
  return out;
}

SuperAlgebra ParamAlgebra::instantiate(const std::vector<Rational>& point) const {
  std::vector<std::string> even(names_.begin(), names_.begin() + n_even_);
  std::vector<std::string> odd(names_.begin() + n_even_, names_.end());
  SuperAlgebra out(even, odd);
  for (const auto& [key, value] : table_) {
    Vec v(dim());
    for (std::size_t k = 0; k < dim(); ++k) v[k] = Scalar(value[k].eval(point));
    if (!is_zero(v)) out.set_bracket(key.first, key.second, v);
  }
  return out;
}

void ParamForm::substitute(std::size_t var, const Poly& replacement) {
  for (Poly& p : entries_) p = p.substituted(var, replacement);
}

Poly ParamForm::eval(const PolyVec& x, const PolyVec& y) const {
  Poly out(entries_.empty() ? 0 : entries_[0].nvars());
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < m_; ++j) {
      if (at(i, j).is_zero()) continue;
      out = out + at(i, j) * (x[i] * y[n_ + j] + x[n_ + j] * y[i]);
    }
  return out;
}

Poly ParamForm::invariance_residual(const ParamAlgebra& alg, std::size_t i, std::size_t j,
                                    std::size_t k) const {
  Poly lhs = eval(alg.structure(i, j), basis_polyvec(alg, k));
  Poly rhs = eval(basis_polyvec(alg, i), alg.structure(j, k));
  return lhs - rhs;
}

Poly ParamForm::det() const {
  if (n_ != m_) throw Error("parametric determinant needs a square block");
  // Laplace expansion; blocks stay tiny (n <= 4).
  std::vector<std::size_t> cols(m_);
  for (std::size_t j = 0; j < m_; ++j) cols[j] = j;
  std::function<Poly(std::size_t, std::vector<std::size_t>)> go =
      [&](std::size_t row, std::vector<std::size_t> remaining) -> Poly {
    if (remaining.empty()) return Poly::constant(entries_[0].nvars(), 1);
    Poly acc(entries_[0].nvars());
    for (std::size_t idx = 0; idx < remaining.size(); ++idx) {
      const Poly& entry = at(row, remaining[idx]);
      if (entry.is_zero()) continue;
      std::vector<std::size_t> rest = remaining;
      rest.erase(rest.begin() + idx);
      Poly sub = go(row + 1, rest);
      Poly term = entry * sub;
      acc = (idx % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  return go(0, cols);
}

OddForm ParamForm::instantiate(const std::vector<Rational>& point) const {
  OddForm out(n_, m_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < m_; ++j) out.pairing().at(i, j) = Scalar(at(i, j).eval(point));
  return out;
}

std::vector<Poly> jacobi_constraints(const ParamAlgebra& p) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = i; j < p.dim(); ++j)
      for (std::size_t k = j; k < p.dim(); ++k)
        for (const Poly& q : p.jacobi_residual(i, j, k))
          if (!q.is_zero()) out.push_back(q);
  return out;
}

std::vector<Poly> invariance_constraints(const ParamAlgebra& p, const ParamForm& form) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j)
      for (std::size_t k = 0; k < p.dim(); ++k) {
        Poly q = form.invariance_residual(p, i, j, k);
        if (!q.is_zero()) out.push_back(q);
      }
  return out;
}

}  // namespace oddq
