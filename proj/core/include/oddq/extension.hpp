#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oddq/derivation.hpp"

namespace oddq {

/// Records how the pieces of a double extension sit inside its output (or,
/// for a decomposition, inside its input): the embedding of the base
/// algebra and the vectors playing e and e*. The optional identification is
/// a parity-preserving basis change onto a named target presentation.
struct ExtensionWitness {
  Mat embedding;  // row r = image of the base algebra's r-th basis vector
  Vec e_image;
  Vec estar_image;
  std::optional<Mat> identification;
};

struct ExtensionResult {
  SuperAlgebra algebra;
  OddForm form;
  Flag flag;
  ExtensionWitness witness;
};

/// Generalized odd double extension of (g, B) by a one-dimensional odd line
/// spanned by e, with dual generator e*:
///   [e,e] = X0 + lambda0 e*
///   [e,X] = D(X) - (-1)^|X| B(X, X0) e*
///   [X,Y] = [X,Y]_g + B(D(X), Y) e*
///   [e*, t] = 0
/// extended form: B on g, B(e,e*) = 1, B(g,e) = B(g,e*) = 0. The new basis
/// order puts e* last in the even block and e last in the odd block. Output
/// is re-verified (graded Jacobi and odd-quadratic axioms) before returning.
ExtensionResult generalized_odd_double_extension(const SuperAlgebra& g, const OddForm& B,
                                                 const ExtensionData& data);

struct DecompositionResult {
  SuperAlgebra base;
  OddForm base_form;
  ExtensionData data;
  ExtensionWitness witness;  // embedding of base into the input algebra
};

/// Inverse of the generalized extension: e* spans the even center (rescaled
/// so it pairs to 1 with the top flag representative e_m), the base is the
/// orthogonal of span{e*, e_m}, and D, X0, lambda0 are read off the brackets
/// of e_m. Requires dim > 1 and flag length >= 3.
DecompositionResult decompose_weak_filiform(const SuperAlgebra& g, const OddForm& B,
                                            const Flag& flag);

/// General odd double extension of (g, B) by a Lie superalgebra h through a
/// morphism psi into the B-skew derivations of g and an odd supersymmetric
/// invariant form gamma on h (possibly degenerate). psi[k] is the full
/// matrix of the derivation attached to h's k-th basis vector, with the
/// parity of that vector. gamma is h's mixed pairing block.
std::pair<SuperAlgebra, OddForm> odd_double_extension(const SuperAlgebra& g, const OddForm& B,
                                                      const SuperAlgebra& h,
                                                      const std::vector<Mat>& psi,
                                                      const Mat& gamma);

}  // namespace oddq
