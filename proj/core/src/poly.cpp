#include "oddq/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace oddq {

bool GrlexLess::operator()(const Mono& a, const Mono& b) const {
  std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da < db;
  // graded lex: same degree, earlier variable with larger exponent is bigger
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](std::uint32_t x, std::uint32_t y) { return x > y; });
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  if (c != 0) p.terms_[Mono(nvars, 0)] = c;
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  Poly p(nvars);
  Mono m(nvars, 0);
  m.at(index) = 1;
  p.terms_[m] = 1;
  return p;
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw Error("polynomial is not constant");
  return terms_.begin()->second;
}

std::size_t Poly::degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_)
    d = std::max<std::size_t>(d, std::accumulate(m.begin(), m.end(), std::uint32_t{0}));
  return d;
}

std::pair<Mono, Rational> Poly::leading() const {
  if (terms_.empty()) throw Error("leading term of zero");
  auto it = terms_.rbegin();
  return {it->first, it->second};
}

void Poly::add_term(const Mono& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  Poly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

Poly Poly::operator-() const { return scaled(-1); }

Poly Poly::scaled(const Rational& c) const {
  Poly out(nvars_);
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_[m] = c * coeff;
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  Poly out(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Mono m(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(Rational(1) / leading().second);
}

bool Poly::proportional(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  return p.monic() == q.monic();
}

Poly Poly::substituted(std::size_t var, const Poly& replacement) const {
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) {
    std::uint32_t k = m[var];
    if (k == 0) {
      out.add_term(m, c);
      continue;
    }
    Mono rest = m;
    rest[var] = 0;
    Poly piece(nvars_);
    piece.terms_[rest] = c;
    for (std::uint32_t i = 0; i < k; ++i) piece = piece * replacement;
    out = out + piece;
  }
  return out;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
  Rational out = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::uint32_t k = 0; k < m[i]; ++k) term *= point[i];
    out += term;
  }
  return out;
}

bool Poly::depends_on(std::size_t var) const {
  for (const auto& [m, c] : terms_)
    if (m[var] > 0) return true;
  return false;
}

std::optional<std::pair<std::size_t, Poly>> Poly::solve_linear() const {
  for (std::size_t v = 0; v < nvars_; ++v) {
    std::optional<Rational> coeff;
    bool usable = true;
    for (const auto& [m, c] : terms_) {
      if (m[v] == 0) continue;
      Mono alone(nvars_, 0);
      alone[v] = 1;
      if (m == alone && !coeff) coeff = c;
      else usable = false;
      if (!usable) break;
    }
    if (usable && coeff) {
      Poly rest = *this;
      Mono alone(nvars_, 0);
      alone[v] = 1;
      rest.add_term(alone, -*coeff);
      return std::make_pair(v, rest.scaled(Rational(-1) / *coeff));
    }
  }
  return std::nullopt;
}

Mono Poly::content_monomial() const {
  Mono g(nvars_, 0);
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first) {
      g = m;
      first = false;
    } else {
      for (std::size_t i = 0; i < nvars_; ++i) g[i] = std::min(g[i], m[i]);
    }
  }
  return g;
}

Poly Poly::primitive_part() const {
  if (terms_.empty()) return *this;
  Mono g = content_monomial();
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) {
    Mono r(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) r[i] = m[i] - g[i];
    out.terms_[r] = c;
  }
  return out.monic();
}

Poly Poly::reduced_by(const Poly& q) const {
  if (q.is_zero()) return *this;
  auto [lm, lc] = q.leading();
  Poly r = *this;
  bool changed = true;
  while (changed && !r.is_zero()) {
    changed = false;
    for (const auto& [m, c] : r.terms_) {
      bool divisible = true;
      for (std::size_t i = 0; i < nvars_; ++i)
        if (m[i] < lm[i]) {
          divisible = false;
          break;
        }
      if (!divisible) continue;
      Mono quot(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) quot[i] = m[i] - lm[i];
      Poly mult(nvars_);
      mult.terms_[quot] = c / lc;
      r = r - mult * q;
      changed = true;
      break;
    }
  }
  return r;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print leading terms first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational abs = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool any_var = false;
    std::ostringstream vars;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (any_var) vars << "*";
      vars << names[i];
      if (m[i] > 1) vars << "^" << m[i];
      any_var = true;
    }
    if (!any_var) os << to_string(abs);
    else if (abs == 1) os << vars.str();
    else os << to_string(abs) << "*" << vars.str();
  }
  return os.str();
}

}  // namespace oddq
