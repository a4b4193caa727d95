#include "oddq/derivation.hpp"

namespace oddq {

Vec OddDerivation::apply_basis(std::size_t i) const {
  std::size_t n = n_even(), m = m_odd();
  Vec out(n + m);
  if (i < n) {
    for (std::size_t k = 0; k < m; ++k) out[n + k] = even_to_odd_.at(k, i);
  } else {
    for (std::size_t k = 0; k < n; ++k) out[k] = odd_to_even_.at(k, i - n);
  }
  return out;
}

Vec OddDerivation::apply(const Vec& x) const {
  std::size_t n = n_even(), m = m_odd();
  if (x.size() != n + m) throw Error("derivation operand dimension mismatch");
  Vec out(n + m);
  for (std::size_t i = 0; i < n + m; ++i) {
    if (x[i].is_zero()) continue;
    Vec img = apply_basis(i);
    for (std::size_t k = 0; k < n + m; ++k)
      if (!img[k].is_zero()) out[k] += x[i] * img[k];
  }
  return out;
}

Vec OddDerivation::coordinates() const {
  std::size_t n = n_even(), m = m_odd();
  Vec c;
  c.reserve(coordinate_count(n, m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k) c.push_back(even_to_odd_.at(k, i));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < n; ++k) c.push_back(odd_to_even_.at(k, j));
  return c;
}

OddDerivation OddDerivation::from_coordinates(std::size_t n, std::size_t m, const Vec& c) {
  if (c.size() != coordinate_count(n, m)) throw Error("derivation coordinate count mismatch");
  OddDerivation D(n, m);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k) D.even_to_odd_.at(k, i) = c[pos++];
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < n; ++k) D.odd_to_even_.at(k, j) = c[pos++];
  return D;
}

Vec leibniz_residual(const SuperAlgebra& alg, const OddDerivation& D, std::size_t i,
                     std::size_t j) {
  std::size_t d = alg.dim();
  Vec ei(d), ej(d);
  ei[i] = Scalar(1);
  ej[j] = Scalar(1);
  Vec lhs = D.apply(alg.structure(i, j));
  Vec rhs = alg.bracket(D.apply_basis(i), ej);
  Vec third = alg.bracket(ei, D.apply_basis(j));
  Scalar sign = alg.parity(i) ? Scalar(-1) : Scalar(1);
  return lhs - rhs - sign * third;
}

Scalar skew_residual(const SuperAlgebra& alg, const OddForm& B, const OddDerivation& D,
                     std::size_t i, std::size_t j) {
  std::size_t d = alg.dim();
  Vec ei(d), ej(d);
  ei[i] = Scalar(1);
  ej[j] = Scalar(1);
  Scalar sign = alg.parity(i) ? Scalar(-1) : Scalar(1);
  return B.eval(alg, D.apply_basis(i), ej) + sign * B.eval(alg, ei, D.apply_basis(j));
}

std::vector<OddDerivation> solve_odd_skew_derivations(const SuperAlgebra& alg,
                                                      const OddForm& B) {
  std::size_t n = alg.n_even(), m = alg.m_odd(), d = n + m;
  std::size_t unknowns = OddDerivation::coordinate_count(n, m);

  // One unit derivation per unknown; conditions are linear, so residuals of
  // the units assemble the system's columns.
  std::vector<OddDerivation> units;
  for (std::size_t u = 0; u < unknowns; ++u) {
    Vec c(unknowns);
    c[u] = Scalar(1);
    units.push_back(OddDerivation::from_coordinates(n, m, c));
  }

  Mat sys(0, unknowns);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      // Leibniz rows (vector equation, d scalar rows)
      std::vector<Vec> cols;
      cols.reserve(unknowns);
      for (std::size_t u = 0; u < unknowns; ++u)
        cols.push_back(leibniz_residual(alg, units[u], i, j));
      for (std::size_t k = 0; k < d; ++k) {
        Vec row(unknowns);
        bool nonzero = false;
        for (std::size_t u = 0; u < unknowns; ++u) {
          row[u] = cols[u][k];
          nonzero = nonzero || !row[u].is_zero();
        }
        if (nonzero) sys.append_row(row);
      }
      // Skewness row (scalar equation)
      Vec row(unknowns);
      bool nonzero = false;
      for (std::size_t u = 0; u < unknowns; ++u) {
        row[u] = skew_residual(alg, B, units[u], i, j);
        nonzero = nonzero || !row[u].is_zero();
      }
      if (nonzero) sys.append_row(row);
    }

  Mat ker = sys.rows() == 0 ? Mat::identity(unknowns) : sys.kernel();
  std::vector<OddDerivation> basis;
  for (std::size_t r = 0; r < ker.rows(); ++r)
    basis.push_back(OddDerivation::from_coordinates(n, m, ker.row(r)));
  return basis;
}

DataCertificate validate_extension_data(const SuperAlgebra& alg, const OddForm& B,
                                        const ExtensionData& data, const Flag& flag) {
  DataCertificate cert;
  std::size_t n = alg.n_even(), m = alg.m_odd(), d = n + m;
  const OddDerivation& D = data.D;

  {
    bool ok = true;
    std::string witness = "holds on every basis pair";
    for (std::size_t i = 0; i < d && ok; ++i)
      for (std::size_t j = i; j < d; ++j) {
        Vec r = leibniz_residual(alg, D, i, j);
        if (!is_zero(r)) {
          ok = false;
          witness = "Leibniz fails on (" + alg.name(i) + "," + alg.name(j) +
                    "): residual " + alg.format_vector(r);
          break;
        }
      }
    cert.items.push_back({"D satisfies the graded Leibniz rule", ok, witness});
  }
  {
    bool ok = true;
    std::string witness = "holds on every basis pair";
    for (std::size_t i = 0; i < d && ok; ++i)
      for (std::size_t j = i; j < d; ++j) {
        Scalar r = skew_residual(alg, B, D, i, j);
        if (!r.is_zero()) {
          ok = false;
          witness = "skewness fails on (" + alg.name(i) + "," + alg.name(j) + ")";
          break;
        }
      }
    cert.items.push_back({"D is skew with respect to B", ok, witness});
  }
  {
    bool odd_part_zero = true;
    for (std::size_t k = n; k < d; ++k)
      if (!data.X0[k].is_zero()) odd_part_zero = false;
    Vec img = D.apply(data.X0);
    bool ok = odd_part_zero && is_zero(img);
    cert.items.push_back({"X0 is even and D(X0) = 0", ok,
                          ok ? "" : "D(X0) = " + alg.format_vector(img)});
  }
  {
    bool ok = true;
    std::string witness = "D^2 matches (1/2) ad(X0) on every basis vector";
    for (std::size_t i = 0; i < d; ++i) {
      Vec ei(d);
      ei[i] = Scalar(1);
      Vec lhs = D.apply(D.apply_basis(i));
      Vec rhs = Scalar(Rational(1, 2)) * alg.bracket(data.X0, ei);
      if (lhs != rhs) {
        ok = false;
        witness = "D^2 differs from (1/2) ad(X0) on " + alg.name(i);
        break;
      }
    }
    cert.items.push_back({"D^2 = (1/2) ad(X0)", ok, witness});
  }
  {
    // D(even part) together with V_{m-1} must span V_m.
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(D.apply_basis(i));
    Subspace image = Subspace::span(d, gens);
    Subspace low = flag.m >= 3 ? lift_odd(alg, flag.V(flag.m - 1)) : Subspace(d);
    Subspace total = image.sum(low);
    bool ok = total == lift_odd(alg, flag.V(flag.m));
    cert.items.push_back({"the top flag layer lies in D(even part) modulo V_{m-1}", ok,
                          ok ? "" : "image + V_{m-1} has dimension " +
                                        std::to_string(total.dim())});
  }
  return cert;
}

}  // namespace oddq
