#pragma once

#include <string>
#include <vector>

#include "oddq/form.hpp"

namespace oddq {

struct SearchHit {
  SuperAlgebra algebra;
  OddForm form;
  bool abelian;
  std::string description;
};

struct SearchReport {
  std::size_t assignments_scanned = 0;
  std::size_t action_survivors = 0;
  std::vector<SearchHit> hits;
  bool all_hits_abelian2() const {
    if (hits.empty()) return false;
    for (const auto& h : hits)
      if (!h.abelian || h.algebra.dim() != 2) return false;
    return true;
  }
};

/// Exhaustive grid search for odd-quadratic structures whose odd part is a
/// filiform module, over dimension pairs (n_even, n_even) for n_even in
/// {1,2,3}. The ansatz fixes the flag coordinates (V_i spanned by the first
/// i odd vectors, action lowering by at least one level), enumerates the
/// remaining action constants and the even bracket constants over the grid
/// (the 3-dimensional even part is pinned to [X1,X2] = X3), and solves for
/// the pairing: surviving pairings are enumerated over the grid. Odd-odd
/// brackets stay zero unless include_odd_odd is set; the incompatibility
/// obstruction lives entirely in the action/pairing data, but the extended
/// mode documents what the full constant space adds.
SearchReport small_search_nonexistence(std::size_t n_even, const std::vector<Rational>& grid,
                                       bool include_odd_odd = false);

}  // namespace oddq
