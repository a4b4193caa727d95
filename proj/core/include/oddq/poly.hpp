#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oddq/rational.hpp"

namespace oddq {

/// Exponent vector; all polynomials of one computation share a variable
/// count and a name table kept by the caller.
using Mono = std::vector<std::uint32_t>;

struct GrlexLess {
  bool operator()(const Mono& a, const Mono& b) const;
};

/// Sparse multivariate polynomial over the rationals, terms kept in graded
/// lexicographic order with no zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}
  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && degree() == 0); }
  Rational constant_value() const;
  std::size_t degree() const;
  std::size_t term_count() const { return terms_.size(); }

  const std::map<Mono, Rational, GrlexLess>& terms() const { return terms_; }
  std::pair<Mono, Rational> leading() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Rational& c) const;
  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  /// Leading coefficient made 1; zero stays zero.
  Poly monic() const;
  /// p and q are nonzero rational multiples of one another (or both zero).
  static bool proportional(const Poly& p, const Poly& q);

  /// Replace one variable by a polynomial.
  Poly substituted(std::size_t var, const Poly& replacement) const;
  Rational eval(const std::vector<Rational>& point) const;
  bool depends_on(std::size_t var) const;

  /// If the polynomial is c*var + rest with c a nonzero rational and rest
  /// free of var, returns (var, -rest/c), scanning vars in index order.
  std::optional<std::pair<std::size_t, Poly>> solve_linear() const;

  /// Greatest common monomial divisor of all terms.
  Mono content_monomial() const;
  /// The polynomial divided by its content monomial and made monic.
  Poly primitive_part() const;

  /// One pass of multivariate division: eliminates every term divisible by
  /// the leading term of q. Returns the remainder.
  Poly reduced_by(const Poly& q) const;

  std::string str(const std::vector<std::string>& names) const;

  void add_term(const Mono& m, const Rational& c);

 private:
  std::size_t nvars_ = 0;
  std::map<Mono, Rational, GrlexLess> terms_;
};

}  // namespace oddq
