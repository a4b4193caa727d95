#pragma once

#include <string>
#include <vector>

#include "oddq/superalgebra.hpp"

namespace oddq {

/// Odd supersymmetric bilinear form, stored as its only possibly nonzero
/// block: pairing(i, j) = B(even_i, odd_j). Both same-parity blocks vanish
/// structurally, so oddness cannot be violated by construction.
class OddForm {
 public:
  OddForm(std::size_t n_even, std::size_t m_odd) : pairing_(n_even, m_odd) {}
  explicit OddForm(Mat pairing) : pairing_(std::move(pairing)) {}

  const Mat& pairing() const { return pairing_; }
  Mat& pairing() { return pairing_; }

  /// B on full coordinate vectors (bilinear, supersymmetric by structure).
  Scalar eval(const SuperAlgebra& alg, const Vec& x, const Vec& y) const;

  bool nondegenerate() const;

 private:
  Mat pairing_;
};

struct InvarianceViolation {
  std::array<std::size_t, 3> triple;
  Scalar lhs, rhs;
};

struct QuadraticCertificate {
  bool invariant = false;
  bool nondegenerate = false;
  std::size_t violation_count = 0;
  std::vector<InvarianceViolation> sample;  // at most 16
  bool passed() const { return invariant && nondegenerate; }
};

/// Checks invariance B([x,y],z) = B(x,[y,z]) on all ordered basis triples
/// and non-degeneracy of the mixed pairing block.
QuadraticCertificate verify_odd_quadratic(const SuperAlgebra& alg, const OddForm& B);

struct OrthogonalComplement {
  Subspace complement;
  bool isotropic;  // I subset of I-perp
};

OrthogonalComplement orthogonal_complement(const SuperAlgebra& alg, const OddForm& B,
                                           const Subspace& ideal);

struct PhiCertificate {
  bool dims_match = false;
  bool invertible = false;
  bool equivariant = false;
  bool symmetric = false;  // B([X,Y],Z) = B([Y,Z],X) on odd triples
  std::string detail;
  bool passed() const { return dims_match && invertible && equivariant && symmetric; }
};

/// The module isomorphism Phi: even part -> (odd part)*, Phi(X) = B(X,.),
/// with the dual action (X.f)(v) = -f([X,v]).
PhiCertificate phi_module_check(const SuperAlgebra& alg, const OddForm& B);

/// Orthogonal direct sum of two odd-quadratic algebras; block brackets and
/// block pairing. Throws if either summand fails verify_odd_quadratic.
std::pair<SuperAlgebra, OddForm> direct_sum(const SuperAlgebra& a, const SuperAlgebra& b,
                                            const OddForm& Ba, const OddForm& Bb);

}  // namespace oddq
