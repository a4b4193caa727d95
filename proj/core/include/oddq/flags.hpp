#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oddq/form.hpp"

namespace oddq {

/// Flag of odd subspaces V_m > ... > V_2 > V_1 = 0 with [even, V_i] = V_{i-1}.
/// Subspaces live in odd coordinates (dimension m_odd of the ambient
/// algebra). Representatives follow echelon pivot order: u2, v2 span V_2 and
/// rep(i) is the new echelon vector of V_i past V_{i-1}, for i >= 3.
struct Flag {
  std::size_t m = 0;
  std::vector<Subspace> chain;  // chain[i-2] = V_i for i = 2..m
  Vec u2, v2;                   // odd coordinates
  std::vector<Vec> reps;        // reps[i-3] = e_i for i = 3..m

  const Subspace& V(std::size_t i) const { return chain.at(i - 2); }
  Vec rep(std::size_t i) const { return reps.at(i - 3); }
  Vec top_rep() const { return reps.back(); }  // e_m, defined for m >= 3
};

struct WeakFiliformResult {
  std::optional<Flag> flag;
  std::vector<std::size_t> chain_dims;
  bool found() const { return flag.has_value(); }
};

/// Dimensions of W0 = odd part, W(k+1) = [even part, Wk], until zero or
/// stabilization.
std::vector<std::size_t> bracket_chain_dims(const SuperAlgebra& alg);

/// Canonical flag V_i := W^(m-i) when the chain dims are [m, m-1, ..., 2, 0];
/// otherwise a negative verdict carrying the offending chain dims.
WeakFiliformResult detect_weak_filiform(const SuperAlgebra& alg);

/// True iff the chain dims are [m, m-1, ..., 1, 0].
bool detect_filiform(const SuperAlgebra& alg);

/// Matrices of the dual action on (odd part)*: for each even basis vector a,
/// minus the transpose of ad(a) restricted to the odd part.
std::vector<Mat> dual_action(const SuperAlgebra& alg);

/// Generic module-chain helper: dims of W0 = full space, W(k+1) = sum of
/// images of Wk under the action matrices.
std::vector<std::size_t> module_chain_dims(const std::vector<Mat>& action, std::size_t dim);
bool module_is_filiform(const std::vector<Mat>& action, std::size_t dim);

struct NonexistenceCertificate {
  enum class Verdict { UniqueCase, NotApplicable, ContradictionWitnessed };
  Verdict verdict;
  std::string detail;
  // Chain facts, filled when the contradiction chain runs (filiform, n >= 2):
  bool dual_filiform = false;
  bool even_adjoint_filiform = false;
  std::size_t derived_dim = 0;     // dim [even, even]
  bool even_nilpotent = false;
  std::string failed_fact;         // the arithmetic fact that broke
};

/// The incompatibility pipeline for a filiform odd module over an
/// odd-quadratic algebra with n_even >= 2; reports the unique surviving
/// 2-dimensional case and "not applicable" otherwise.
NonexistenceCertificate nonexistence_certificate(const SuperAlgebra& alg, const OddForm& B);

struct FlagReport {
  struct Item {
    std::string check;
    bool ok;
    std::string witness;
  };
  std::vector<Item> items;
  bool passed() const {
    for (const auto& it : items)
      if (!it.ok) return false;
    return true;
  }
};

/// Structural assertions tying the center, the pairing and the descending
/// central sequence to the flag: center location and size, pairing of u2/v2
/// against vectors outside the derived even algebra, B(center generator,
/// top representative) != 0, and [C^j even, V_i] inside V_{i-j-1}.
FlagReport flag_structure_report(const SuperAlgebra& alg, const OddForm& B, const Flag& flag);

/// Lift a vector from odd coordinates to full coordinates.
Vec lift_odd(const SuperAlgebra& alg, const Vec& odd_vec);
/// Lift a subspace of odd coordinates to the full coordinate space.
Subspace lift_odd(const SuperAlgebra& alg, const Subspace& odd_space);

}  // namespace oddq
