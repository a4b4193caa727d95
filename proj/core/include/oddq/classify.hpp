#pragma once

#include <array>
#include <string>
#include <vector>

#include "oddq/catalog.hpp"
#include "oddq/eliminate.hpp"
#include "oddq/flags.hpp"
#include "oddq/param_algebra.hpp"

namespace oddq {

/// Isomorphism-invariant signature: dimensions and ranks of canonically
/// attached spaces. Distinct fingerprints certify non-isomorphism.
struct Fingerprint {
  std::size_t center_total = 0, center_even = 0, center_odd = 0;
  std::vector<std::size_t> series_full, series_even;
  std::size_t odd_odd_rank = 0;
  std::vector<std::size_t> chain_dims;

  bool operator==(const Fingerprint& o) const {
    return center_total == o.center_total && center_even == o.center_even &&
           center_odd == o.center_odd && series_full == o.series_full &&
           series_even == o.series_even && odd_odd_rank == o.odd_odd_rank &&
           chain_dims == o.chain_dims;
  }
  bool operator!=(const Fingerprint& o) const { return !(*this == o); }
  std::string str() const;
};

Fingerprint fingerprint(const SuperAlgebra& alg);

/// change_basis(a, P) has exactly b's structure constants.
bool verify_witness_isomorphism(const SuperAlgebra& a, const SuperAlgebra& b, const Mat& P);

struct AuditRow {
  std::array<std::string, 3> triple;
  /// Nonzero constraint polynomials of this row, with all substitutions
  /// derived from earlier rows applied, in basis-coordinate order.
  std::vector<Poly> constraints;
};

struct ClassifiedAlgebra {
  std::string label;
  SuperAlgebra algebra;
  OddForm form;
  Fingerprint fp;
};

struct ClassifyResult {
  std::vector<ClassifiedAlgebra> classes;
  std::vector<AuditRow> jacobi_rows;
  std::vector<AuditRow> invariance_rows;
  std::vector<Poly> jacobi_residual_products;  // carried until the form stage resolves them
  std::vector<std::string> var_names;
  std::vector<std::string> log;
};

/// Reproduces the constraint-table classification for total dimension 6 or
/// 8: fixed even part and flag normal form, parametric odd-odd brackets and
/// pairing, table-ordered elimination with case splits, scale and shear
/// normalizations, fingerprinted representatives at lambda = 1,
/// alpha = beta = 0.
ClassifyResult classify_dimension(int dimension);

}  // namespace oddq
