#pragma once

#include <map>
#include <string>
#include <vector>

#include "oddq/form.hpp"
#include "oddq/poly.hpp"

namespace oddq {

using PolyVec = std::vector<Poly>;

/// Structure-constant skeleton whose coefficients are polynomials in a
/// shared set of named indeterminates. Same grading and storage rules as
/// the numeric algebra: canonical pairs i <= j, sign completion on read.
class ParamAlgebra {
 public:
  ParamAlgebra(std::vector<std::string> even_names, std::vector<std::string> odd_names,
               std::vector<std::string> vars);

  std::size_t n_even() const { return n_even_; }
  std::size_t m_odd() const { return names_.size() - n_even_; }
  std::size_t dim() const { return names_.size(); }
  int parity(std::size_t i) const { return i >= n_even_ ? 1 : 0; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  std::size_t var_index(const std::string& name) const;

  Poly zero() const { return Poly(nvars()); }
  Poly constant(const Rational& c) const { return Poly::constant(nvars(), c); }
  Poly var(const std::string& name) const { return Poly::variable(nvars(), var_index(name)); }

  void set_bracket(std::size_t i, std::size_t j, const PolyVec& value);
  PolyVec structure(std::size_t i, std::size_t j) const;

  /// Substitute a variable throughout the table.
  void substitute(std::size_t var, const Poly& replacement);

  /// Super Jacobi residual of the basis triple, one polynomial per basis
  /// coordinate (zero polys included; caller filters).
  PolyVec jacobi_residual(std::size_t i, std::size_t j, std::size_t k) const;

  /// Evaluate the table at a point to get a numeric algebra.
  SuperAlgebra instantiate(const std::vector<Rational>& point) const;

 private:
  std::size_t n_even_;
  std::vector<std::string> names_;
  std::vector<std::string> vars_;
  std::map<std::pair<std::size_t, std::size_t>, PolyVec> table_;
};

/// Parametric odd form: mixed pairing block of polynomials.
class ParamForm {
 public:
  ParamForm(std::size_t n_even, std::size_t m_odd, std::size_t nvars)
      : n_(n_even), m_(m_odd), entries_(n_even * m_odd, Poly(nvars)) {}

  Poly& at(std::size_t i, std::size_t j) { return entries_[i * m_ + j]; }
  const Poly& at(std::size_t i, std::size_t j) const { return entries_[i * m_ + j]; }

  void substitute(std::size_t var, const Poly& replacement);

  /// B(x, y) for coordinate vectors of polynomials.
  Poly eval(const PolyVec& x, const PolyVec& y) const;

  /// Invariance residual B([x_i,x_j],x_k) - B(x_i,[x_j,x_k]) for an ordered
  /// basis triple.
  Poly invariance_residual(const ParamAlgebra& alg, std::size_t i, std::size_t j,
                           std::size_t k) const;

  Poly det() const;
  OddForm instantiate(const std::vector<Rational>& point) const;

 private:
  std::size_t n_, m_;
  std::vector<Poly> entries_;
};

PolyVec basis_polyvec(const ParamAlgebra& alg, std::size_t i);

/// All nonzero super Jacobi constraint polynomials over homogeneous basis
/// triples i <= j <= k.
std::vector<Poly> jacobi_constraints(const ParamAlgebra& p);
/// All nonzero invariance constraint polynomials over ordered basis triples.
std::vector<Poly> invariance_constraints(const ParamAlgebra& p, const ParamForm& form);

}  // namespace oddq
