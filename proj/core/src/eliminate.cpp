#include "oddq/eliminate.hpp"

#include <algorithm>

namespace oddq {

Elimination eliminate(std::vector<Poly> constraints) {
  Elimination out;
  auto apply_sub = [&](Poly p) {
    for (const auto& [v, rep] : out.substitutions) p = p.substituted(v, rep);
    return p;
  };

  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t idx = 0; idx < constraints.size(); ++idx) {
      Poly p = apply_sub(constraints[idx]);
      if (p.is_zero()) continue;
      auto solved = p.solve_linear();
      if (!solved) continue;
      auto [var, value] = *solved;
      for (auto& [v, rep] : out.substitutions) rep = rep.substituted(var, value);
      out.substitutions.emplace_back(var, value);
      progress = true;
    }
  }

  for (const Poly& c : constraints) {
    Poly p = apply_sub(c);
    if (!p.is_zero()) out.residuals.push_back(p);
  }
  // Inter-reduce: reduce each residual by the others until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < out.residuals.size(); ++i) {
      Poly r = out.residuals[i];
      for (std::size_t j = 0; j < out.residuals.size(); ++j) {
        if (i == j || out.residuals[j].is_zero()) continue;
        r = r.reduced_by(out.residuals[j]);
      }
      if (!(r == out.residuals[i])) {
        out.residuals[i] = r;
        changed = true;
      }
    }
  }
  out.residuals.erase(
      std::remove_if(out.residuals.begin(), out.residuals.end(),
                     [](const Poly& p) { return p.is_zero(); }),
      out.residuals.end());
  for (Poly& r : out.residuals) r = r.monic();
  std::sort(out.residuals.begin(), out.residuals.end(),
            [](const Poly& a, const Poly& b) {
              return GrlexLess{}(a.leading().first, b.leading().first);
            });
  for (const Poly& r : out.residuals)
    if (r.is_constant() && !r.is_zero()) out.inconsistent = true;  // empty variety branch
  return out;
}

std::vector<Poly> split_cases(const Poly& residual) {
  std::vector<Poly> out;
  if (residual.is_zero()) return out;
  std::size_t nv = residual.nvars();
  Mono content = residual.content_monomial();
  for (std::size_t v = 0; v < nv; ++v)
    if (content[v] > 0) out.push_back(Poly::variable(nv, v));
  Poly prim = residual.primitive_part();
  if (!prim.is_constant()) out.push_back(prim);
  return out;
}

}  // namespace oddq
