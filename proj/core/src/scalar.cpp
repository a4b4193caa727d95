#include "oddq/scalar.hpp"

#include <cctype>
#include <utility>

namespace oddq {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/' || c == '+'))
      throw ParseError("bad rational literal: '" + text + "'");
  }
  try {
    Rational q(text);
    return q;
  } catch (const std::exception&) {
    throw ParseError("bad rational literal: '" + text + "'");
  }
}

std::string to_string(const Rational& q) { return q.str(); }

std::pair<Integer, Integer> square_free_part(const Integer& n) {
  if (n == 0) return {0, 0};
  Integer rest = n < 0 ? Integer(-n) : n;
  Integer sign = n < 0 ? -1 : 1;
  Integer square(1);
  Integer free(1);
  for (Integer p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    unsigned mult = 0;
    while (rest % p == 0) {
      rest /= p;
      ++mult;
    }
    for (unsigned i = 0; i + 1 < mult; i += 2) square *= p;
    if (mult % 2 == 1) free *= p;
  }
  free *= rest;  // leftover is prime
  return {square, sign * free};
}

Scalar::Scalar(const Rational& base, const Rational& rad, const Rational& radicand)
    : base_(base) {
  if (rad == 0 || radicand == 0) {
    if (rad != 0) throw Error("radical coefficient with zero radicand");
    return;
  }
  // Pull rational squares out of the radicand so that equal values have
  // equal components: p/q = (p*q)/q^2, then strip the square part of p*q.
  Integer t = numerator(radicand) * denominator(radicand);
  auto [s, r] = square_free_part(t);
  Rational factor(s, denominator(radicand));
  if (r == 1) {
    base_ += rad * factor;
    return;
  }
  rad_ = rad * factor;
  radicand_ = Rational(r);
}

Scalar Scalar::operator-() const {
  Scalar out;
  out.base_ = -base_;
  out.rad_ = -rad_;
  out.radicand_ = radicand_;
  return out;
}

namespace {

// The shared radicand of two operands; pure rationals live in every context.
Rational merged_radicand(const Scalar& a, const Scalar& b) {
  if (a.radicand() == b.radicand()) return a.radicand();
  if (a.is_rational()) return b.radicand();
  if (b.is_rational()) return a.radicand();
  throw Error("mixed-radicand operands: sqrt(" + to_string(a.radicand()) +
              ") vs sqrt(" + to_string(b.radicand()) + ")");
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  Rational d = merged_radicand(*this, o);
  return Scalar(base_ + o.base_, rad_ + o.rad_, d);
}

Scalar Scalar::operator-(const Scalar& o) const {
  Rational d = merged_radicand(*this, o);
  return Scalar(base_ - o.base_, rad_ - o.rad_, d);
}

Scalar Scalar::operator*(const Scalar& o) const {
  Rational d = merged_radicand(*this, o);
  return Scalar(base_ * o.base_ + rad_ * o.rad_ * d,
                base_ * o.rad_ + rad_ * o.base_, d);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw Error("division by zero");
  Rational d = merged_radicand(*this, o);
  // Conjugate rationalization; the norm cannot vanish for a nonzero element
  // since the radicand is never a rational square.
  Rational norm = o.base_ * o.base_ - o.rad_ * o.rad_ * d;
  if (norm == 0) throw InternalError("vanishing norm in quadratic division");
  Scalar conj;
  conj.base_ = o.base_ / norm;
  conj.rad_ = -o.rad_ / norm;
  conj.radicand_ = o.rad_ == 0 ? Rational(0) : d;
  return *this * conj;
}

std::string Scalar::str() const {
  if (is_rational()) return to_string(base_);
  std::string out;
  if (base_ != 0) out += to_string(base_) + " + ";
  out += to_string(rad_) + "*sqrt(" + to_string(radicand_) + ")";
  return out;
}

Scalar adjoin_sqrt(const Rational& c) {
  if (c == 0) throw Error("adjoin_sqrt(0)");
  // sqrt(p/q) = sqrt(p*q) / q
  Integer t = numerator(c) * denominator(c);
  auto [s, r] = square_free_part(t);
  Rational coeff(s, denominator(c));
  if (r == 1) return Scalar(coeff);
  return Scalar(Rational(0), coeff, Rational(r));
}

}  // namespace oddq
