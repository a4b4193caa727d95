#include "oddq/form.hpp"

namespace oddq {

Scalar OddForm::eval(const SuperAlgebra& alg, const Vec& x, const Vec& y) const {
  std::size_t n = alg.n_even(), m = alg.m_odd();
  if (x.size() != n + m || y.size() != n + m) throw Error("form operand dimension mismatch");
  Scalar out(0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (pairing_.at(i, j).is_zero()) continue;
      // B(even_i, odd_j) contributes from both parity arrangements.
      out += pairing_.at(i, j) * (x[i] * y[n + j] + x[n + j] * y[i]);
    }
  return out;
}

bool OddForm::nondegenerate() const {
  if (pairing_.rows() != pairing_.cols()) return false;
  return !pairing_.det().is_zero();
}

QuadraticCertificate verify_odd_quadratic(const SuperAlgebra& alg, const OddForm& B) {
  QuadraticCertificate cert;
  std::size_t n = alg.n_even(), d = alg.dim();
  // Gram matrix on basis pairs and the full structure table, precomputed so
  // the triple scan only touches nonzero entries.
  Mat G(d, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d - n; ++j) {
      G.at(i, n + j) = B.pairing().at(i, j);
      G.at(n + j, i) = B.pairing().at(i, j);
    }
  std::vector<std::vector<Vec>> S(d, std::vector<Vec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) S[i][j] = alg.structure(i, j);

  cert.invariant = true;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Scalar lhs(0), rhs(0);
        const Vec& sij = S[i][j];
        for (std::size_t t = 0; t < d; ++t)
          if (!sij[t].is_zero() && !G.at(t, k).is_zero()) lhs += sij[t] * G.at(t, k);
        const Vec& sjk = S[j][k];
        for (std::size_t t = 0; t < d; ++t)
          if (!G.at(i, t).is_zero() && !sjk[t].is_zero()) rhs += G.at(i, t) * sjk[t];
        if (lhs != rhs) {
          cert.invariant = false;
          ++cert.violation_count;
          if (cert.sample.size() < 16) cert.sample.push_back({{i, j, k}, lhs, rhs});
        }
      }
  cert.nondegenerate = alg.n_even() == alg.m_odd() && B.nondegenerate();
  return cert;
}

OrthogonalComplement orthogonal_complement(const SuperAlgebra& alg, const OddForm& B,
                                           const Subspace& ideal) {
  if (!B.nondegenerate()) throw Error("orthogonal complement requires a non-degenerate form");
  std::size_t n = alg.n_even(), m = alg.m_odd(), d = n + m;
  const Mat& M = B.pairing();
  Mat sys(ideal.dim(), d);
  for (std::size_t r = 0; r < ideal.dim(); ++r) {
    Vec v = ideal.basis_row(r);
    // B(x, v) = sum_i x_i * M(i,.) . v_odd + sum_j x_{n+j} * M(.,j)^T . v_even
    for (std::size_t i = 0; i < n; ++i) {
      Scalar c(0);
      for (std::size_t j = 0; j < m; ++j) c += M.at(i, j) * v[n + j];
      sys.at(r, i) = c;
    }
    for (std::size_t j = 0; j < m; ++j) {
      Scalar c(0);
      for (std::size_t i = 0; i < n; ++i) c += M.at(i, j) * v[i];
      sys.at(r, n + j) = c;
    }
  }
  Mat ker = sys.kernel();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < ker.rows(); ++i) rows.push_back(ker.row(i));
  OrthogonalComplement out{Subspace::span(d, rows), false};
  out.isotropic = out.complement.contains(ideal);
  return out;
}

PhiCertificate phi_module_check(const SuperAlgebra& alg, const OddForm& B) {
  PhiCertificate cert;
  std::size_t n = alg.n_even(), m = alg.m_odd();
  cert.dims_match = n == m;
  if (!cert.dims_match) {
    cert.detail = "even/odd dimensions differ";
    return cert;
  }
  const Mat& M = B.pairing();
  cert.invertible = !M.det().is_zero();
  if (!cert.invertible) {
    cert.detail = "pairing block is singular";
    return cert;
  }

  // Phi(x) = M^T x in dual coordinates. Equivariance against each even
  // generator a: M^T ad0(a) = -ad1(a)^T M^T.
  cert.equivariant = true;
  Mat Mt = M.transpose();
  for (std::size_t a = 0; a < n && cert.equivariant; ++a) {
    Mat ad0(n, n), ad1(m, m);
    for (std::size_t x = 0; x < n; ++x) {
      Vec v = alg.structure(a, x);
      for (std::size_t k = 0; k < n; ++k) ad0.at(k, x) = v[k];
    }
    for (std::size_t x = 0; x < m; ++x) {
      Vec v = alg.structure(a, n + x);
      for (std::size_t k = 0; k < m; ++k) ad1.at(k, x) = v[n + k];
    }
    Mat lhs = Mt.mul(ad0);
    Mat rhs = ad1.transpose().mul(Mt);
    for (std::size_t i = 0; i < m && cert.equivariant; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (lhs.at(i, j) != -rhs.at(i, j)) {
          cert.equivariant = false;
          cert.detail = "equivariance fails against " + alg.name(a);
          break;
        }
  }

  cert.symmetric = true;
  for (std::size_t x = n; x < n + m && cert.symmetric; ++x)
    for (std::size_t y = n; y < n + m && cert.symmetric; ++y)
      for (std::size_t z = n; z < n + m; ++z) {
        Vec ex(n + m), ez(n + m);
        ex[x] = Scalar(1);
        ez[z] = Scalar(1);
        Scalar lhs = B.eval(alg, alg.structure(x, y), ez);
        Scalar rhs = B.eval(alg, alg.structure(y, z), ex);
        if (lhs != rhs) {
          cert.symmetric = false;
          cert.detail = "pairing symmetry fails on (" + alg.name(x) + "," + alg.name(y) +
                        "," + alg.name(z) + ")";
          break;
        }
      }
  return cert;
}

std::pair<SuperAlgebra, OddForm> direct_sum(const SuperAlgebra& a, const SuperAlgebra& b,
                                            const OddForm& Ba, const OddForm& Bb) {
  if (!verify_odd_quadratic(a, Ba).passed() || !verify_odd_quadratic(b, Bb).passed())
    throw Error("direct sum requires odd-quadratic summands");
  std::vector<std::string> even, odd;
  for (std::size_t i = 0; i < a.n_even(); ++i) even.push_back(a.name(i) + ".1");
  for (std::size_t i = 0; i < b.n_even(); ++i) even.push_back(b.name(i) + ".2");
  for (std::size_t i = a.n_even(); i < a.dim(); ++i) odd.push_back(a.name(i) + ".1");
  for (std::size_t i = b.n_even(); i < b.dim(); ++i) odd.push_back(b.name(i) + ".2");
  SuperAlgebra out(even, odd);

  std::size_t na = a.n_even(), nb = b.n_even(), ma = a.m_odd(), mb = b.m_odd();
  auto embed_a = [&](std::size_t i) { return i < na ? i : nb + i; };
  auto embed_b = [&](std::size_t i) { return i < nb ? na + i : ma + na + i; };
  auto lift_a = [&](const Vec& v) {
    Vec out_v(out.dim());
    for (std::size_t k = 0; k < v.size(); ++k) out_v[embed_a(k)] = v[k];
    return out_v;
  };
  auto lift_b = [&](const Vec& v) {
    Vec out_v(out.dim());
    for (std::size_t k = 0; k < v.size(); ++k) out_v[embed_b(k)] = v[k];
    return out_v;
  };
  for (const auto& [pair, value] : a.table())
    out.set_bracket(embed_a(pair.first), embed_a(pair.second), lift_a(value));
  for (const auto& [pair, value] : b.table())
    out.set_bracket(embed_b(pair.first), embed_b(pair.second), lift_b(value));

  OddForm B(na + nb, ma + mb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < ma; ++j) B.pairing().at(i, j) = Ba.pairing().at(i, j);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < mb; ++j) B.pairing().at(na + i, ma + j) = Bb.pairing().at(i, j);
  return {out, B};
}

}  // namespace oddq
