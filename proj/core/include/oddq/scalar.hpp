#pragma once

#include <string>

#include "oddq/rational.hpp"

namespace oddq {

/// Element of Q or of a single quadratic extension Q(sqrt(d)).
///
/// Value is base + rad * sqrt(radicand). The radicand is kept as a
/// square-free integer (negative allowed, never 0 or 1 when a radical part
/// is present); a pure rational always has rad == 0 and radicand == 0, so
/// equality is plain componentwise comparison. Scalars are immutable values.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Rational& value) : base_(value) {}  // NOLINT: implicit by design
  Scalar(int value) : base_(value) {}              // NOLINT
  Scalar(const Rational& base, const Rational& rad, const Rational& radicand);

  const Rational& base() const { return base_; }
  const Rational& rad() const { return rad_; }
  const Rational& radicand() const { return radicand_; }

  bool is_zero() const { return base_ == 0 && rad_ == 0; }
  bool is_rational() const { return rad_ == 0; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const {
    return base_ == o.base_ && rad_ == o.rad_ && radicand_ == o.radicand_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Rational base_{0};
  Rational rad_{0};
  Rational radicand_{0};
};

/// Exact square root of a nonzero rational. Returns s/q when c is a perfect
/// square of a rational, otherwise a scalar with a square-free radicand;
/// downstream arithmetic stays inside the extension Q(sqrt(radicand)).
/// Throws on c == 0.
Scalar adjoin_sqrt(const Rational& c);

/// Square-free part extraction: n = s^2 * r with r square-free (sign kept
/// in r). Returns {s, r}.
std::pair<Integer, Integer> square_free_part(const Integer& n);

}  // namespace oddq
