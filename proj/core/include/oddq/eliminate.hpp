#pragma once

#include <vector>

#include "oddq/poly.hpp"

namespace oddq {

struct Elimination {
  /// Fully composed substitutions, in the order they were found; each value
  /// polynomial is free of every substituted variable.
  std::vector<std::pair<std::size_t, Poly>> substitutions;
  /// What is left after substitution and inter-reduction.
  std::vector<Poly> residuals;
  /// A nonzero constant survived: the branch has no solutions.
  bool inconsistent = false;
};

/// Repeatedly absorbs constraints of the form c*x + rest (c a nonzero
/// rational, rest free of x) as substitutions, then inter-reduces what
/// remains. Terminates because every substitution removes one variable.
Elimination eliminate(std::vector<Poly> constraints);

/// Branch constraints for one residual equation p = 0: one branch per
/// distinct variable of its content monomial, plus the primitive remainder
/// when it is non-constant. Example: a*b splits into {a, b}.
std::vector<Poly> split_cases(const Poly& residual);

}  // namespace oddq
