#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oddq/matrix.hpp"

namespace oddq {

struct JacobiViolation {
  std::array<std::size_t, 3> triple;
  Vec residual;
};

/// Z2-graded algebra given by structure constants on a named basis, even
/// block first. Constants are stored only for index pairs i <= j; the
/// graded skew/symmetry completion is applied at read time, so the table
/// can never hold contradictory data. Immutable once populated.
class SuperAlgebra {
 public:
  SuperAlgebra(std::vector<std::string> even_names, std::vector<std::string> odd_names);

  std::size_t n_even() const { return n_even_; }
  std::size_t m_odd() const { return names_.size() - n_even_; }
  std::size_t dim() const { return names_.size(); }
  bool is_odd(std::size_t i) const { return i >= n_even_; }
  int parity(std::size_t i) const { return i >= n_even_ ? 1 : 0; }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Sets [x_i, x_j] = value. The pair is canonicalized to i <= j with the
  /// graded sign; value must respect the parity grading of the bracket.
  void set_bracket(std::size_t i, std::size_t j, const Vec& value);
  void set_bracket(const std::string& x, const std::string& y,
                   const std::vector<std::pair<std::string, Scalar>>& value);

  /// Structure vector [x_i, x_j] with sign completion for i > j.
  Vec structure(std::size_t i, std::size_t j) const;
  /// Bilinear extension of the bracket to arbitrary coordinate vectors.
  Vec bracket(const Vec& x, const Vec& y) const;

  std::vector<JacobiViolation> super_jacobi_violations() const;
  Subspace center() const;
  std::vector<Subspace> lower_central_series(bool restrict_to_even) const;
  std::vector<std::size_t> lower_central_dims(bool restrict_to_even) const;
  bool is_nilpotent(bool restrict_to_even) const;

  /// Presentation in the basis whose vectors are the columns of P (written
  /// in the current basis). P must be invertible and parity-preserving.
  /// Composition runs left to right: rebasing by P then Q equals rebasing
  /// by P*Q.
  SuperAlgebra change_basis(const Mat& P) const;

  /// Exact equality of structure constants (names ignored).
  bool same_table(const SuperAlgebra& o) const;

  const std::map<std::pair<std::size_t, std::size_t>, Vec>& table() const { return table_; }

  Subspace even_subspace() const;
  Subspace odd_subspace() const;
  /// Splits a graded subspace into its even and odd parts.
  std::pair<Subspace, Subspace> graded_parts(const Subspace& s) const;

  std::string format_vector(const Vec& v) const;

 private:
  void check_grading(std::size_t i, std::size_t j, const Vec& value) const;

  std::size_t n_even_;
  std::vector<std::string> names_;
  std::map<std::pair<std::size_t, std::size_t>, Vec> table_;
};

}  // namespace oddq
