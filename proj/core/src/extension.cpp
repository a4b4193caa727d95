#include "oddq/extension.hpp"

#include <algorithm>

namespace oddq {

ExtensionResult generalized_odd_double_extension(const SuperAlgebra& g, const OddForm& B,
                                                 const ExtensionData& data) {
  auto wf = detect_weak_filiform(g);
  if (!wf.found()) throw Error("extension input is not of weak filiform type");
  DataCertificate cert = validate_extension_data(g, B, data, *wf.flag);
  if (!cert.passed()) {
    std::string detail;
    for (const auto& it : cert.items)
      if (!it.ok) detail += (detail.empty() ? "" : "; ") + it.check + ": " + it.witness;
    throw Error("invalid extension data: " + detail);
  }

  std::size_t n = g.n_even(), m = g.m_odd(), dg = n + m;
  std::vector<std::string> even(g.names().begin(), g.names().begin() + n);
  std::vector<std::string> odd(g.names().begin() + n, g.names().end());
  auto fresh = [&](std::string base) {
    while (g.index_of(base)) base += "'";
    return base;
  };
  std::string estar_name = fresh("e*"), e_name = fresh("e");
  even.push_back(estar_name);
  odd.push_back(e_name);
  SuperAlgebra t(even, odd);

  std::size_t dt = dg + 2;
  std::size_t estar = n;                 // index of e* in t
  std::size_t e_idx = dt - 1;            // index of e in t
  auto embed_index = [&](std::size_t i) { return i < n ? i : i + 1; };
  auto lift = [&](const Vec& v) {
    Vec out(dt);
    for (std::size_t k = 0; k < dg; ++k) out[embed_index(k)] = v[k];
    return out;
  };

  const OddDerivation& D = data.D;
  // [x_i, x_j] = [x_i, x_j]_g + B(D x_i, x_j) e*
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t j = i; j < dg; ++j) {
      if (i == j && !g.is_odd(i)) continue;
      Vec ej(dg);
      ej[j] = Scalar(1);
      Vec value = lift(g.structure(i, j));
      value[estar] += B.eval(g, D.apply_basis(i), ej);
      if (!is_zero(value)) t.set_bracket(embed_index(i), embed_index(j), value);
    }
  // [x_i, e] = -(-1)^{|i|} [e, x_i] completion is handled by set_bracket;
  // supply [x_i, e] directly from [e, x] = D(x) - (-1)^{|x|} B(x, X0) e*.
  for (std::size_t i = 0; i < dg; ++i) {
    Vec ei(dg);
    ei[i] = Scalar(1);
    Vec e_bracket = lift(D.apply_basis(i));
    Scalar sign = g.parity(i) ? Scalar(-1) : Scalar(1);
    e_bracket[estar] -= sign * B.eval(g, ei, data.X0);
    // [x_i, e] = -(-1)^{|i| * 1} [e, x_i]
    Scalar flip = g.parity(i) ? Scalar(1) : Scalar(-1);
    Vec value = flip * e_bracket;
    if (!is_zero(value)) t.set_bracket(embed_index(i), e_idx, value);
  }
  // [e, e] = X0 + lambda0 e*
  {
    Vec value = lift(data.X0);
    value[estar] += data.lambda0;
    if (!is_zero(value)) t.set_bracket(e_idx, e_idx, value);
  }

  OddForm Bt(n + 1, m + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) Bt.pairing().at(i, j) = B.pairing().at(i, j);
  Bt.pairing().at(n, m) = Scalar(1);  // B(e*, e) = 1

  if (!t.super_jacobi_violations().empty())
    throw InternalError("double extension output violates the graded Jacobi identity");
  if (!verify_odd_quadratic(t, Bt).passed())
    throw InternalError("double extension output is not odd-quadratic");
  auto wf_out = detect_weak_filiform(t);
  if (!wf_out.found() || wf_out.flag->m != m + 1)
    throw InternalError("double extension output lost the weak filiform flag");

  ExtensionWitness witness;
  witness.embedding = Mat(dg, dt);
  for (std::size_t i = 0; i < dg; ++i) witness.embedding.at(i, embed_index(i)) = Scalar(1);
  witness.e_image = Vec(dt);
  witness.e_image[e_idx] = Scalar(1);
  witness.estar_image = Vec(dt);
  witness.estar_image[estar] = Scalar(1);
  return {std::move(t), std::move(Bt), std::move(*wf_out.flag), std::move(witness)};
}

DecompositionResult decompose_weak_filiform(const SuperAlgebra& g, const OddForm& B,
                                            const Flag& flag) {
  std::size_t n = g.n_even(), d = g.dim();
  if (d <= 1) throw Error("nothing to decompose in dimension <= 1");
  if (flag.m < 3)
    throw Error("decomposition needs a flag of length >= 3 (no canonical top representative)");

  Subspace z = g.center();
  auto [z_even, z_odd] = g.graded_parts(z);
  if (z_even.dim() != 1)
    throw Error("even center is not one-dimensional (input is not weak filiform odd-quadratic)");

  Vec em = lift_odd(g, flag.top_rep());
  Vec estar = z_even.basis_row(0);
  Scalar pair_val = B.eval(g, estar, em);
  if (pair_val.is_zero())
    throw Error("center generator is orthogonal to the top flag representative");
  estar = (Scalar(1) / pair_val) * estar;  // now B(e*, e_m) = 1

  Subspace A = Subspace::span(d, {estar, em});
  OrthogonalComplement comp = orthogonal_complement(g, B, A);
  const Subspace& h_space = comp.complement;
  if (h_space.dim() != d - 2) throw InternalError("orthogonal of the extension plane has wrong size");

  // Split the complement basis by parity; rows of a graded space's echelon
  // basis are homogeneous.
  std::vector<Vec> h_even, h_odd;
  for (std::size_t r = 0; r < h_space.dim(); ++r) {
    Vec v = h_space.basis_row(r);
    bool has_even = false, has_odd = false;
    for (std::size_t k = 0; k < d; ++k)
      if (!v[k].is_zero()) (k < n ? has_even : has_odd) = true;
    if (has_even && has_odd)
      throw InternalError("orthogonal complement basis row is not homogeneous");
    (has_even ? h_even : h_odd).push_back(v);
  }

  std::vector<std::string> even_names, odd_names;
  auto name_for = [&](const Vec& v, std::size_t serial) {
    std::size_t support = 0, last = 0;
    for (std::size_t k = 0; k < d; ++k)
      if (!v[k].is_zero()) {
        ++support;
        last = k;
      }
    if (support == 1 && v[last] == Scalar(1)) return g.name(last);
    return std::string("h") + std::to_string(serial);
  };
  std::size_t serial = 1;
  for (const Vec& v : h_even) even_names.push_back(name_for(v, serial++));
  for (const Vec& v : h_odd) odd_names.push_back(name_for(v, serial++));

  std::size_t hn = h_even.size(), hm = h_odd.size(), hd = hn + hm;
  std::vector<Vec> h_rows = h_even;
  h_rows.insert(h_rows.end(), h_odd.begin(), h_odd.end());

  // Coordinates of an ambient vector in the frame (h rows, e*, e_m);
  // membership in that frame is part of the decomposition's correctness.
  Mat frame(d, hd + 2);
  for (std::size_t c = 0; c < hd; ++c)
    for (std::size_t k = 0; k < d; ++k) frame.at(k, c) = h_rows[c][k];
  for (std::size_t k = 0; k < d; ++k) frame.at(k, hd) = estar[k];
  for (std::size_t k = 0; k < d; ++k) frame.at(k, hd + 1) = em[k];
  auto frame_inv = frame.inverse();
  if (!frame_inv) throw InternalError("decomposition frame is singular");
  auto coords = [&](const Vec& v) { return frame_inv->apply(v); };

  SuperAlgebra h(even_names, odd_names);
  for (std::size_t i = 0; i < hd; ++i)
    for (std::size_t j = i; j < hd; ++j) {
      if (i == j && i < hn) continue;
      Vec c = coords(g.bracket(h_rows[i], h_rows[j]));
      if (!c[hd + 1].is_zero())
        throw InternalError("bracket of base elements has a top-representative component");
      Vec value(hd);
      for (std::size_t k = 0; k < hd; ++k) value[k] = c[k];
      if (!is_zero(value)) h.set_bracket(i, j, value);
    }

  OddForm Bh(hn, hm);
  for (std::size_t i = 0; i < hn; ++i)
    for (std::size_t j = 0; j < hm; ++j) {
      Vec x = h_rows[i], y = h_rows[hn + j];
      Bh.pairing().at(i, j) = B.eval(g, x, y);
    }

  // D and psi from [e_m, x]; X0 and lambda0 from [e_m, e_m].
  OddDerivation D(hn, hm);
  for (std::size_t i = 0; i < hd; ++i) {
    Vec c = coords(g.bracket(em, h_rows[i]));
    if (!c[hd + 1].is_zero())
      throw InternalError("bracket against e_m leaves the expected layers");
    if (i < hn)
      for (std::size_t k = 0; k < hm; ++k) D.even_to_odd().at(k, i) = c[hn + k];
    else
      for (std::size_t k = 0; k < hn; ++k) D.odd_to_even().at(k, i - hn) = c[k];
  }
  Vec c0 = coords(g.bracket(em, em));
  Vec X0(hd);
  for (std::size_t k = 0; k < hd; ++k) X0[k] = c0[k];
  Scalar lambda0 = c0[hd];

  DecompositionResult out{std::move(h), std::move(Bh),
                          ExtensionData{std::move(D), std::move(X0), lambda0},
                          ExtensionWitness{}};
  out.witness.embedding = Mat::from_rows(h_rows, d);
  out.witness.e_image = em;
  out.witness.estar_image = estar;

  // The base must again be odd-quadratic of weak filiform type, and the
  // datum must validate against its flag.
  if (!verify_odd_quadratic(out.base, out.base_form).passed())
    throw InternalError("decomposition base is not odd-quadratic");
  auto wf = detect_weak_filiform(out.base);
  if (!wf.found()) throw InternalError("decomposition base lost the weak filiform flag");
  DataCertificate cert = validate_extension_data(out.base, out.base_form, out.data, *wf.flag);
  if (!cert.passed()) throw InternalError("decomposition datum fails validation");
  return out;
}

std::pair<SuperAlgebra, OddForm> odd_double_extension(const SuperAlgebra& g, const OddForm& B,
                                                      const SuperAlgebra& h,
                                                      const std::vector<Mat>& psi,
                                                      const Mat& gamma) {
  std::size_t dg = g.dim(), dh = h.dim();
  std::size_t hn = h.n_even(), hm = h.m_odd();
  if (psi.size() != dh) throw Error("psi must assign a derivation to every basis vector of h");
  if (gamma.rows() != hn || gamma.cols() != hm) throw Error("gamma block has the wrong shape");

  // psi(Z) must be a superderivation of g of Z's parity, skew for B, and
  // psi must respect brackets.
  auto check_derivation = [&](const Mat& Dm, int p) {
    if (Dm.rows() != dg || Dm.cols() != dg) throw Error("psi entry has the wrong shape");
    for (std::size_t i = 0; i < dg; ++i)
      for (std::size_t j = 0; j < dg; ++j)
        if (!Dm.at(i, j).is_zero() && (g.parity(i) + g.parity(j)) % 2 != p)
          throw Error("psi entry does not have its basis vector's parity");
    for (std::size_t i = 0; i < dg; ++i)
      for (std::size_t j = i; j < dg; ++j) {
        Vec ei(dg), ej(dg);
        ei[i] = Scalar(1);
        ej[j] = Scalar(1);
        Vec lhs = Dm.apply(g.structure(i, j));
        Scalar sign = (p && g.parity(i)) ? Scalar(-1) : Scalar(1);
        Vec rhs = g.bracket(Dm.apply(ei), ej) + sign * g.bracket(ei, Dm.apply(ej));
        if (lhs != rhs) throw Error("psi image is not a superderivation");
        Scalar skew = B.eval(g, Dm.apply(ei), ej) + sign * B.eval(g, ei, Dm.apply(ej));
        if (!skew.is_zero()) throw Error("psi image is not skew for B");
      }
  };
  for (std::size_t z = 0; z < dh; ++z) check_derivation(psi[z], h.parity(z));
  // bracket respect: psi([Z,W]) = psi(Z)psi(W) - (-1)^{|Z||W|} psi(W)psi(Z)
  auto psi_of = [&](const Vec& v) {
    Mat out(dg, dg);
    for (std::size_t z = 0; z < dh; ++z) {
      if (v[z].is_zero()) continue;
      for (std::size_t i = 0; i < dg; ++i)
        for (std::size_t j = 0; j < dg; ++j) out.at(i, j) += v[z] * psi[z].at(i, j);
    }
    return out;
  };
  for (std::size_t z = 0; z < dh; ++z)
    for (std::size_t w = z; w < dh; ++w) {
      Mat lhs = psi_of(h.structure(z, w));
      Scalar sign = (h.parity(z) && h.parity(w)) ? Scalar(-1) : Scalar(1);
      Mat zw = psi[z].mul(psi[w]);
      Mat wz = psi[w].mul(psi[z]);
      for (std::size_t i = 0; i < dg; ++i)
        for (std::size_t j = 0; j < dg; ++j)
          if (lhs.at(i, j) != zw.at(i, j) - sign * wz.at(i, j))
            throw Error("psi does not respect brackets");
    }
  // gamma must be invariant on h (odd and supersymmetric are structural).
  for (std::size_t x = 0; x < dh; ++x)
    for (std::size_t y = 0; y < dh; ++y)
      for (std::size_t z = 0; z < dh; ++z) {
        OddForm gform(gamma);
        Vec ex(dh), ez(dh);
        ex[x] = Scalar(1);
        ez[z] = Scalar(1);
        Scalar lhs = gform.eval(h, h.structure(x, y), ez);
        Scalar rhs = gform.eval(h, ex, h.structure(y, z));
        if (lhs != rhs) throw Error("gamma is not invariant");
      }

  // Basis of t: [g even | h even | (h odd)*] ++ [g odd | h odd | (h even)*].
  std::vector<std::string> even, odd;
  for (std::size_t i = 0; i < g.n_even(); ++i) even.push_back(g.name(i));
  for (std::size_t i = 0; i < hn; ++i) even.push_back(h.name(i));
  for (std::size_t i = hn; i < dh; ++i) even.push_back(h.name(i) + "*");
  for (std::size_t i = g.n_even(); i < dg; ++i) odd.push_back(g.name(i));
  for (std::size_t i = hn; i < dh; ++i) odd.push_back(h.name(i));
  for (std::size_t i = 0; i < hn; ++i) odd.push_back(h.name(i) + "*");
  SuperAlgebra t(even, odd);
  std::size_t dt = dg + 2 * dh;

  std::size_t tn = g.n_even() + hn + hm;  // even count of t
  // index maps into t
  auto g_index = [&](std::size_t i) {
    return i < g.n_even() ? i : tn + (i - g.n_even());
  };
  auto h_index = [&](std::size_t z) {
    return z < hn ? g.n_even() + z : tn + g.m_odd() + (z - hn);
  };
  auto hdual_index = [&](std::size_t z) {  // index of (h_z)* in t
    return z < hn ? tn + g.m_odd() + hm + z : g.n_even() + hn + (z - hn);
  };

  auto lift_g = [&](const Vec& v) {
    Vec out(dt);
    for (std::size_t k = 0; k < dg; ++k) out[g_index(k)] = v[k];
    return out;
  };
  auto lift_h = [&](const Vec& v) {
    Vec out(dt);
    for (std::size_t k = 0; k < dh; ++k) out[h_index(k)] = v[k];
    return out;
  };

  // [Z, W] = [Z,W]_h for Z, W in h
  for (std::size_t z = 0; z < dh; ++z)
    for (std::size_t w = z; w < dh; ++w) {
      if (z == w && z < hn) continue;
      Vec value = lift_h(h.structure(z, w));
      if (!is_zero(value)) t.set_bracket(h_index(z), h_index(w), value);
    }
  // [Z, Y] = psi(Z)(Y) for Z in h, Y in g
  for (std::size_t z = 0; z < dh; ++z)
    for (std::size_t y = 0; y < dg; ++y) {
      Vec ey(dg);
      ey[y] = Scalar(1);
      Vec value = lift_g(psi[z].apply(ey));
      if (!is_zero(value)) t.set_bracket(h_index(z), g_index(y), value);
    }
  // [Z, f] = pi_h(Z)(f) for f = (h_w)*:
  //   pi_h(Z)(f)(Y) = -(-1)^{|Z| delta} f([Z, Y]), delta = parity of f in P(h*)
  for (std::size_t z = 0; z < dh; ++z)
    for (std::size_t w = 0; w < dh; ++w) {
      int delta = (h.parity(w) + 1) % 2;
      Scalar sign = (h.parity(z) && delta) ? Scalar(-1) : Scalar(1);
      Vec value(dt);
      for (std::size_t y = 0; y < dh; ++y) {
        Vec v = h.structure(z, y);
        // f([Z, Y]) = coefficient of h_w in [Z, Y]
        if (!v[w].is_zero()) value[hdual_index(y)] += -sign * v[w];
      }
      if (!is_zero(value)) t.set_bracket(h_index(z), hdual_index(w), value);
    }
  // [X, Y] = [X,Y]_g + phi(X,Y), phi(X,Y)(Z) = (-1)^{(|X|+|Y|)|Z|} B(psi(Z) X, Y)
  for (std::size_t x = 0; x < dg; ++x)
    for (std::size_t y = x; y < dg; ++y) {
      if (x == y && !g.is_odd(x)) continue;
      Vec value = lift_g(g.structure(x, y));
      Vec ex(dg), ey(dg);
      ex[x] = Scalar(1);
      ey[y] = Scalar(1);
      for (std::size_t z = 0; z < dh; ++z) {
        int s = (g.parity(x) + g.parity(y)) * h.parity(z);
        Scalar sign = (s % 2) ? Scalar(-1) : Scalar(1);
        value[hdual_index(z)] += sign * B.eval(g, psi[z].apply(ex), ey);
      }
      if (!is_zero(value)) t.set_bracket(g_index(x), g_index(y), value);
    }

  // Form: B on g, gamma on h, f(W) pairing between h and P(h*).
  OddForm Bt(tn, dt - tn);
  auto put = [&](std::size_t i, std::size_t j, const Scalar& v) {
    // i, j are t-indices of an even and an odd vector in either order
    std::size_t ev = t.is_odd(i) ? j : i;
    std::size_t od = t.is_odd(i) ? i : j;
    Bt.pairing().at(ev, od - tn) += v;
  };
  for (std::size_t i = 0; i < g.n_even(); ++i)
    for (std::size_t j = 0; j < g.m_odd(); ++j)
      put(g_index(i), g_index(g.n_even() + j), B.pairing().at(i, j));
  for (std::size_t i = 0; i < hn; ++i)
    for (std::size_t j = 0; j < hm; ++j)
      put(h_index(i), h_index(hn + j), gamma.at(i, j));
  // B(f, W) = f(W): pairs (h_w)* with h_w; both sit in t with opposite
  // parities, so each pair contributes one mixed entry.
  for (std::size_t w = 0; w < dh; ++w) put(hdual_index(w), h_index(w), Scalar(1));

  if (!t.super_jacobi_violations().empty())
    throw InternalError("odd double extension output violates the graded Jacobi identity");
  if (!verify_odd_quadratic(t, Bt).passed())
    throw InternalError("odd double extension output is not odd-quadratic");
  return {std::move(t), std::move(Bt)};
}

}  // namespace oddq
