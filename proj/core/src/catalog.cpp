#include "oddq/catalog.hpp"

#include <sstream>

namespace oddq {

std::string CatalogKey::str() const {
  std::ostringstream os;
  switch (family) {
    case Family::Abelian2: return "abelian2";
    case Family::ModelFiliform: os << "model_filiform:" << m; break;
    case Family::DualPair: os << "dualpair:" << m; break;
    case Family::Coadjoint: os << "coadjoint:" << m; break;
    case Family::G6: os << "g6:" << variant; break;
    case Family::G8: os << "g8:" << variant; break;
  }
  if ((family == Family::G6 || family == Family::G8) &&
      (lambda != 1 || alpha != 0 || beta != 0))
    os << ":" << to_string(lambda) << "," << to_string(alpha) << "," << to_string(beta);
  return os.str();
}

CatalogKey CatalogKey::parse(const std::string& text) {
  CatalogKey key;
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  const std::string& head = parts[0];
  auto arg = [&](std::size_t i) -> std::string {
    if (parts.size() <= i) throw ParseError("catalog key '" + text + "' needs a parameter");
    return parts[i];
  };
  if (head == "abelian2") {
    key.family = Family::Abelian2;
  } else if (head == "model_filiform" || head == "model") {
    key.family = Family::ModelFiliform;
    key.m = std::stoul(arg(1));
  } else if (head == "dualpair") {
    key.family = Family::DualPair;
    key.m = std::stoul(arg(1));
  } else if (head == "coadjoint") {
    key.family = Family::Coadjoint;
    key.m = std::stoul(arg(1));
  } else if (head == "g6" || head == "g8") {
    key.family = head == "g6" ? Family::G6 : Family::G8;
    key.variant = std::stoi(arg(1));
    if (parts.size() > 2) {
      std::vector<std::string> nums;
      std::string c2;
      for (char c : parts[2]) {
        if (c == ',') {
          nums.push_back(c2);
          c2.clear();
        } else {
          c2 += c;
        }
      }
      nums.push_back(c2);
      if (nums.size() != 3) throw ParseError("expected lambda,alpha,beta in '" + text + "'");
      key.lambda = parse_rational(nums[0]);
      key.alpha = parse_rational(nums[1]);
      key.beta = parse_rational(nums[2]);
    }
  } else {
    throw ParseError("unknown catalog key '" + text + "'");
  }
  return key;
}

std::vector<std::string> catalog_keys() {
  return {"abelian2",      "model_filiform:<m>", "dualpair:<m>", "coadjoint:<m>",
          "g6:<delta>",    "g8:<variant>",       "g6:<delta>:<lambda>,<alpha>,<beta>",
          "g8:<variant>:<lambda>,<alpha>,<beta>"};
}

namespace {

CatalogEntry build_abelian2() {
  SuperAlgebra alg({"X"}, {"e"});
  OddForm B(1, 1);
  B.pairing().at(0, 0) = Scalar(1);
  ExpectedProperties ex;
  ex.center_even = 1;
  ex.center_odd = 1;
  ex.chain_dims = {1, 0};
  ex.odd_quadratic = true;
  ex.weak_filiform = false;  // m = 1 has no flag
  return {CatalogKey{CatalogKey::Family::Abelian2}, std::move(alg), std::move(B), ex};
}

CatalogEntry build_model_filiform(std::size_t m) {
  if (m < 3) throw Error("model filiform family needs m >= 3");
  std::vector<std::string> odd;
  for (std::size_t i = 1; i <= m; ++i) odd.push_back("e" + std::to_string(i));
  SuperAlgebra alg({"X1"}, odd);
  for (std::size_t i = 2; i <= m; ++i) {
    Vec v(alg.dim());
    v[1 + (i - 2)] = Scalar(1);  // e_{i-1}
    alg.set_bracket(0, 1 + (i - 1), v);
  }
  ExpectedProperties ex;
  ex.center_even = 0;
  ex.center_odd = 1;  // e1
  for (std::size_t d = m; d > 0; --d) ex.chain_dims.push_back(d);
  ex.chain_dims.push_back(0);
  ex.odd_quadratic = false;
  ex.weak_filiform = false;
  return {CatalogKey{CatalogKey::Family::ModelFiliform, m}, std::move(alg), std::nullopt, ex};
}

// Raising filiform even part with its parity-flipped dual module and the
// evaluation pairing. Brackets are entered from the closed form and then
// cross-checked against the defining action f -> -f(ad(X) .).
CatalogEntry build_dualpair(std::size_t m) {
  if (m < 3) throw Error("dual pair family needs m >= 3");
  std::vector<std::string> even, odd;
  for (std::size_t i = 1; i <= m; ++i) even.push_back("X" + std::to_string(i));
  for (std::size_t i = 1; i <= m; ++i) odd.push_back("X" + std::to_string(i) + "*");
  SuperAlgebra alg(even, odd);
  auto E = [&](std::size_t i) { return i - 1; };       // X_i
  auto F = [&](std::size_t i) { return m + i - 1; };   // X_i*
  auto unit = [&](std::size_t k) {
    Vec v(alg.dim());
    v[k] = Scalar(1);
    return v;
  };
  for (std::size_t i = 2; i + 1 <= m; ++i) alg.set_bracket(E(1), E(i), unit(E(i + 1)));
  for (std::size_t i = 3; i <= m; ++i) alg.set_bracket(E(1), F(i), Scalar(-1) * unit(F(i - 1)));
  for (std::size_t i = 2; i + 1 <= m; ++i) alg.set_bracket(E(i), F(i + 1), unit(F(1)));

  // cross-check against [X_i, f] = -f(ad(X_i) .)
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j) {
      Vec expect(alg.dim());
      for (std::size_t k = 1; k <= m; ++k) {
        Vec br = alg.bracket(unit(E(i)), unit(E(k)));  // [X_i, X_k]
        expect[F(k)] = -br[E(j)];
      }
      if (alg.structure(E(i), F(j)) != expect)
        throw InternalError("dual pair table disagrees with the defining action");
    }

  OddForm B(m, m);
  for (std::size_t i = 0; i < m; ++i) B.pairing().at(i, i) = Scalar(1);

  ExpectedProperties ex;
  ex.center_even = 1;  // X_m
  ex.center_odd = 2;   // X1*, X2*
  for (std::size_t d = m; d >= 2; --d) ex.chain_dims.push_back(d);
  ex.chain_dims.push_back(0);
  ex.odd_quadratic = true;
  ex.weak_filiform = true;
  return {CatalogKey{CatalogKey::Family::DualPair, m}, std::move(alg), std::move(B), ex};
}

// Lowering filiform even part acting on its dual by the coadjoint-style
// action; evaluation pairing.
CatalogEntry build_coadjoint(std::size_t m) {
  if (m < 3) throw Error("coadjoint family needs m >= 3");
  std::vector<std::string> even, odd;
  for (std::size_t i = 1; i <= m; ++i) even.push_back("e" + std::to_string(i));
  for (std::size_t i = 1; i <= m; ++i) odd.push_back("e" + std::to_string(i) + "*");
  SuperAlgebra alg(even, odd);
  auto E = [&](std::size_t i) { return i - 1; };
  auto F = [&](std::size_t i) { return m + i - 1; };
  auto unit = [&](std::size_t k) {
    Vec v(alg.dim());
    v[k] = Scalar(1);
    return v;
  };
  for (std::size_t i = 3; i <= m; ++i) alg.set_bracket(E(1), E(i), unit(E(i - 1)));
  for (std::size_t i = 2; i + 1 <= m; ++i) alg.set_bracket(E(1), F(i), Scalar(-1) * unit(F(i + 1)));
  for (std::size_t i = 3; i <= m; ++i) alg.set_bracket(E(i), F(i - 1), unit(F(1)));

  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j) {
      Vec expect(alg.dim());
      for (std::size_t k = 1; k <= m; ++k) {
        Vec br = alg.bracket(unit(E(i)), unit(E(k)));
        expect[F(k)] = -br[E(j)];
      }
      if (alg.structure(E(i), F(j)) != expect)
        throw InternalError("coadjoint table disagrees with the defining action");
    }

  OddForm B(m, m);
  for (std::size_t i = 0; i < m; ++i) B.pairing().at(i, i) = Scalar(1);

  ExpectedProperties ex;
  ex.center_even = 1;  // e2
  ex.center_odd = 2;   // e1*, em*
  for (std::size_t d = m; d >= 2; --d) ex.chain_dims.push_back(d);
  ex.chain_dims.push_back(0);
  ex.odd_quadratic = true;
  ex.weak_filiform = true;
  return {CatalogKey{CatalogKey::Family::Coadjoint, m}, std::move(alg), std::move(B), ex};
}

CatalogEntry build_g6(const CatalogKey& key) {
  if (key.variant != 0 && key.variant != 1) throw Error("g6 delta must be 0 or 1");
  if (key.lambda == 0) throw Error("g6 needs lambda != 0");
  SuperAlgebra alg({"X1", "X2", "X3"}, {"e3", "u2", "v2"});
  auto unit = [&](std::size_t k) {
    Vec v(6);
    v[k] = Scalar(1);
    return v;
  };
  alg.set_bracket(0, 1, unit(2));          // [X1,X2] = X3
  alg.set_bracket(0, 3, unit(4));          // [X1,e3] = u2
  alg.set_bracket(1, 3, unit(5));          // [X2,e3] = v2
  if (key.variant == 1) alg.set_bracket(3, 3, unit(2));  // [e3,e3] = X3

  OddForm B(3, 3);
  B.pairing().at(0, 2) = Scalar(key.lambda);   // B(X1, v2)
  B.pairing().at(1, 1) = Scalar(-key.lambda);  // B(X2, u2)
  B.pairing().at(2, 0) = Scalar(key.lambda);   // B(X3, e3)
  B.pairing().at(0, 0) = Scalar(key.alpha);    // B(X1, e3)
  B.pairing().at(1, 0) = Scalar(key.beta);     // B(X2, e3)

  ExpectedProperties ex;
  ex.center_even = 1;
  ex.center_odd = 2;
  ex.chain_dims = {3, 2, 0};
  ex.odd_quadratic = true;
  ex.weak_filiform = true;
  return {key, std::move(alg), std::move(B), ex};
}

CatalogEntry build_g8(const CatalogKey& key) {
  if (key.variant < 0 || key.variant > 2) throw Error("g8 variant must be 0, 1 or 2");
  if (key.lambda == 0) throw Error("g8 needs lambda != 0");
  SuperAlgebra alg({"X1", "X2", "X3", "X4"}, {"e4", "e3", "u2", "v2"});
  auto unit = [&](std::size_t k) {
    Vec v(8);
    v[k] = Scalar(1);
    return v;
  };
  alg.set_bracket(0, 1, unit(2));               // [X1,X2] = X3
  alg.set_bracket(0, 2, unit(3));               // [X1,X3] = X4
  alg.set_bracket(0, 5, unit(6));               // [X1,e3] = u2
  alg.set_bracket(1, 5, unit(7));               // [X2,e3] = v2
  alg.set_bracket(0, 4, unit(5));               // [X1,e4] = e3
  alg.set_bracket(2, 4, Scalar(-1) * unit(7));  // [X3,e4] = -v2
  if (key.variant == 1) alg.set_bracket(4, 4, unit(3));  // [e4,e4] = X4
  if (key.variant == 2) {
    alg.set_bracket(4, 4, unit(1));                            // [e4,e4] = X2
    alg.set_bracket(5, 4, Scalar(Rational(1, 2)) * unit(2));   // [e3,e4] = X3/2
    alg.set_bracket(5, 5, Scalar(Rational(-1, 2)) * unit(3));  // [e3,e3] = -X4/2
    alg.set_bracket(6, 4, unit(3));                            // [u2,e4] = X4
  }

  OddForm B(4, 4);
  B.pairing().at(0, 3) = Scalar(key.lambda);   // B(X1, v2)
  B.pairing().at(1, 2) = Scalar(-key.lambda);  // B(X2, u2)
  B.pairing().at(2, 1) = Scalar(key.lambda);   // B(X3, e3)
  B.pairing().at(3, 0) = Scalar(-key.lambda);  // B(X4, e4)
  B.pairing().at(0, 0) = Scalar(key.alpha);    // B(X1, e4)
  B.pairing().at(1, 0) = Scalar(key.beta);     // B(X2, e4)

  ExpectedProperties ex;
  ex.center_even = 1;
  ex.center_odd = key.variant == 2 ? 1 : 2;
  ex.chain_dims = {4, 3, 2, 0};
  ex.odd_quadratic = true;
  ex.weak_filiform = true;
  return {key, std::move(alg), std::move(B), ex};
}

}  // namespace

CatalogEntry build(const CatalogKey& key) {
  switch (key.family) {
    case CatalogKey::Family::Abelian2: return build_abelian2();
    case CatalogKey::Family::ModelFiliform: return build_model_filiform(key.m);
    case CatalogKey::Family::DualPair: return build_dualpair(key.m);
    case CatalogKey::Family::Coadjoint: return build_coadjoint(key.m);
    case CatalogKey::Family::G6: return build_g6(key);
    case CatalogKey::Family::G8: return build_g8(key);
  }
  throw Error("unhandled catalog key");
}

}  // namespace oddq
