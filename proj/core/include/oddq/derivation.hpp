#pragma once

#include <string>
#include <vector>

#include "oddq/flags.hpp"

namespace oddq {

/// Parity-reversing linear map on a superalgebra: even vectors land in odd
/// coordinates and vice versa. The two anti-diagonal blocks are all there is.
class OddDerivation {
 public:
  OddDerivation(std::size_t n_even, std::size_t m_odd)
      : even_to_odd_(m_odd, n_even), odd_to_even_(n_even, m_odd) {}

  Mat& even_to_odd() { return even_to_odd_; }
  Mat& odd_to_even() { return odd_to_even_; }
  const Mat& even_to_odd() const { return even_to_odd_; }
  const Mat& odd_to_even() const { return odd_to_even_; }

  std::size_t n_even() const { return odd_to_even_.rows(); }
  std::size_t m_odd() const { return even_to_odd_.rows(); }

  /// Image of a full coordinate vector.
  Vec apply(const Vec& x) const;
  /// Image of the i-th basis vector, full coordinates.
  Vec apply_basis(std::size_t i) const;

  /// Flattened coordinates, one slot per matrix entry; the inverse of
  /// from_coordinates.
  Vec coordinates() const;
  static OddDerivation from_coordinates(std::size_t n_even, std::size_t m_odd, const Vec& c);
  static std::size_t coordinate_count(std::size_t n_even, std::size_t m_odd) {
    return 2 * n_even * m_odd;
  }

  bool operator==(const OddDerivation& o) const {
    return even_to_odd_ == o.even_to_odd_ && odd_to_even_ == o.odd_to_even_;
  }

 private:
  Mat even_to_odd_;  // m x n, column i = odd coords of D(even_i)
  Mat odd_to_even_;  // n x m, column j = even coords of D(odd_j)
};

/// Residual of the graded Leibniz rule on a basis pair; zero when D is a
/// superderivation on that pair.
Vec leibniz_residual(const SuperAlgebra& alg, const OddDerivation& D, std::size_t i,
                     std::size_t j);
/// Residual of skewness B(D x, y) + (-1)^|x| B(x, D y) on a basis pair.
Scalar skew_residual(const SuperAlgebra& alg, const OddForm& B, const OddDerivation& D,
                     std::size_t i, std::size_t j);

/// Echelon basis of the space of odd superderivations of (alg, B) that are
/// skew with respect to B.
std::vector<OddDerivation> solve_odd_skew_derivations(const SuperAlgebra& alg, const OddForm& B);

/// Datum for a generalized odd double extension.
struct ExtensionData {
  OddDerivation D;
  Vec X0;          // full coordinates, odd part must vanish
  Scalar lambda0;
};

struct DataCertificate {
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

/// Checks that D is an odd skew derivation, D(X0) = 0, D^2 = (1/2) ad(X0),
/// and that the image D(even part) reaches the top flag layer: together
/// with V_{m-1} it spans V_m.
DataCertificate validate_extension_data(const SuperAlgebra& alg, const OddForm& B,
                                        const ExtensionData& data, const Flag& flag);

}  // namespace oddq
