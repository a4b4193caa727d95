#include "oddq/search.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "oddq/flags.hpp"
#include "oddq/poly.hpp"

namespace oddq {

namespace {

bool in_grid(const std::vector<Rational>& grid, const Rational& v) {
  return std::find(grid.begin(), grid.end(), v) != grid.end();
}

// Enumerate grid^k assignments.
void enumerate(std::size_t k, const std::vector<Rational>& grid,
               const std::function<void(const std::vector<Rational>&)>& fn) {
  std::vector<Rational> point(k, 0);
  std::function<void(std::size_t)> go = [&](std::size_t pos) {
    if (pos == k) {
      fn(point);
      return;
    }
    for (const Rational& g : grid) {
      point[pos] = g;
      go(pos + 1);
    }
  };
  go(0);
}

// Pairing solutions for a fixed action: the invariance conditions on
// (even, even, odd) triples are linear in the n*n pairing entries. Returns
// the kernel basis (rows) of that system.
Mat pairing_solution_space(const SuperAlgebra& alg) {
  std::size_t n = alg.n_even();
  Mat sys(0, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        Vec row(n * n);
        Vec lhs = alg.structure(a, b);  // [X_a, X_b]
        for (std::size_t t = 0; t < n; ++t) row[t * n + k] = row[t * n + k] + lhs[t];
        Vec act = alg.structure(b, n + k);  // [X_b, e_k]
        for (std::size_t l = 0; l < n; ++l) row[a * n + l] -= act[n + l];
        bool nonzero = false;
        for (const Scalar& s : row) nonzero = nonzero || !s.is_zero();
        if (nonzero) sys.append_row(row);
      }
  return sys.rows() == 0 ? Mat::identity(n * n) : sys.kernel();
}

// Determinant of the pairing restricted to the solution space, as a
// polynomial in the space's coordinates: identically zero means no
// non-degenerate pairing exists over any field extension.
bool nondegenerate_feasible(std::size_t n, const Mat& space) {
  std::size_t s = space.rows();
  if (s == 0) return false;
  std::vector<Poly> entries(n * n, Poly(s));
  for (std::size_t r = 0; r < s; ++r)
    for (std::size_t e = 0; e < n * n; ++e) {
      const Scalar& c = space.at(r, e);
      if (!c.is_zero())
        entries[e] = entries[e] + Poly::variable(s, r).scaled(c.base());
    }
  // Laplace over the top row
  std::function<Poly(std::vector<std::size_t>, std::vector<std::size_t>)> det =
      [&](std::vector<std::size_t> rows, std::vector<std::size_t> cols) -> Poly {
    if (rows.empty()) return Poly::constant(s, 1);
    Poly acc(s);
    for (std::size_t idx = 0; idx < cols.size(); ++idx) {
      const Poly& entry = entries[rows[0] * n + cols[idx]];
      if (entry.is_zero()) continue;
      std::vector<std::size_t> rrest(rows.begin() + 1, rows.end());
      std::vector<std::size_t> crest = cols;
      crest.erase(crest.begin() + idx);
      Poly term = entry * det(rrest, crest);
      acc = (idx % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return !det(all, all).is_zero();
}

// Enumerate grid-valued pairings inside the solution space: free columns of
// the row-reduced space range over the grid, pivots follow.
void enumerate_pairings(std::size_t n, const Mat& space, const std::vector<Rational>& grid,
                        const std::function<void(const Mat&)>& fn) {
  Mat red = space;
  std::vector<std::size_t> pivots = red.rref();
  std::size_t s = red.rows();
  enumerate(s, grid, [&](const std::vector<Rational>& coeffs) {
    Vec entries(n * n);
    for (std::size_t r = 0; r < s; ++r)
      for (std::size_t e = 0; e < n * n; ++e)
        entries[e] += Scalar(coeffs[r]) * red.at(r, e);
    for (const Scalar& v : entries)
      if (!v.is_rational() || !in_grid(grid, v.base())) return;
    Mat M(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) M.at(i, j) = entries[i * n + j];
    if (M.det().is_zero()) return;
    fn(M);
  });
}

struct Ansatz {
  SuperAlgebra algebra;  // action + even brackets, odd-odd zero
  std::string description;
};

// All grid assignments of the chain-compatible action (plus even brackets
// for n = 2; the 3-dimensional even part is pinned to [X1,X2] = X3).
std::vector<Ansatz> action_assignments(std::size_t n, const std::vector<Rational>& grid,
                                       std::size_t& scanned) {
  std::vector<Ansatz> out;
  auto base_names = [&]() {
    std::vector<std::string> even, odd;
    for (std::size_t i = 1; i <= n; ++i) even.push_back("X" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) odd.push_back("e" + std::to_string(i));
    return std::make_pair(even, odd);
  };

  if (n == 1) {
    ++scanned;
    auto [even, odd] = base_names();
    SuperAlgebra alg(even, odd);
    out.push_back({std::move(alg), "zero action"});
    return out;
  }

  if (n == 2) {
    // [X1,X2] = p X1 + q X2; [Xj, e2] = c_j e1
    enumerate(4, grid, [&](const std::vector<Rational>& v) {
      ++scanned;
      const Rational &p = v[0], &q = v[1], &c1 = v[2], &c2 = v[3];
      if (c1 == 0 && c2 == 0) return;          // chain needs [g, V2] = V1
      if (p * c1 + q * c2 != 0) return;        // module axiom for [X1,X2]
      auto [even, odd] = base_names();
      SuperAlgebra alg(even, odd);
      Vec br(4);
      br[0] = Scalar(p);
      br[1] = Scalar(q);
      if (!is_zero(br)) alg.set_bracket(0, 1, br);
      for (std::size_t j = 0; j < 2; ++j) {
        Vec act(4);
        act[2] = Scalar(v[2 + j]);
        if (!is_zero(act)) alg.set_bracket(j, 3, act);
      }
      if (!alg.super_jacobi_violations().empty()) return;
      if (!detect_filiform(alg)) return;
      std::ostringstream os;
      os << "[X1,X2]=" << to_string(p) << " X1+" << to_string(q) << " X2, action ("
         << to_string(c1) << "," << to_string(c2) << ")";
      out.push_back({std::move(alg), os.str()});
    });
    return out;
  }

  if (n == 3) {
    // action slots: [Xj,e2] = r_j e1 (j=1,2), [Xj,e3] = s_j e2 + t_j e1;
    // [X3, .] is forced by the module axiom and must stay on the grid.
    enumerate(6, grid, [&](const std::vector<Rational>& v) {
      ++scanned;
      const Rational &r1 = v[0], &r2 = v[1];
      const Rational &s1 = v[2], &t1 = v[3], &s2 = v[4], &t2 = v[5];
      // A_j as 3x3 action matrices (columns e1,e2,e3)
      auto make = [&](const Rational& r, const Rational& s, const Rational& t) {
        Mat A(3, 3);
        A.at(0, 1) = Scalar(r);
        A.at(1, 2) = Scalar(s);
        A.at(0, 2) = Scalar(t);
        return A;
      };
      Mat A1 = make(r1, s1, t1), A2 = make(r2, s2, t2);
      Mat C = A1.mul(A2);
      Mat D = A2.mul(A1);
      Mat A3(3, 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) A3.at(i, j) = C.at(i, j) - D.at(i, j);
      // A3 must be a grid-valued chain action: [X3,e2] in V1, [X3,e3] in V2
      if (!A3.at(1, 1).is_zero() || !A3.at(2, 1).is_zero() || !A3.at(2, 2).is_zero() ||
          !A3.at(0, 0).is_zero() || !A3.at(1, 0).is_zero() || !A3.at(2, 0).is_zero())
        return;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          if (!A3.at(i, j).is_rational() || !in_grid(grid, A3.at(i, j).base())) return;
      auto [even, odd] = base_names();
      SuperAlgebra alg(even, odd);
      Vec h(6);
      h[2] = Scalar(1);
      alg.set_bracket(0, 1, h);  // Heisenberg even part
      std::vector<Mat> As = {A1, A2, A3};
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t col = 1; col < 3; ++col) {
          Vec act(6);
          for (std::size_t rr = 0; rr < 3; ++rr) act[3 + rr] = As[j].at(rr, col);
          if (!is_zero(act)) alg.set_bracket(j, 3 + col, act);
        }
      if (!alg.super_jacobi_violations().empty()) return;
      if (!detect_filiform(alg)) return;
      out.push_back({std::move(alg), "Heisenberg even part, action " });
    });
    return out;
  }
  throw Error("search supports n_even in {1, 2, 3}");
}

}  // namespace

SearchReport small_search_nonexistence(std::size_t n_even, const std::vector<Rational>& grid,
                                       bool include_odd_odd) {
  for (int required : {-1, 0, 1})
    if (!in_grid(grid, Rational(required)))
      throw Error("the search grid must contain -1, 0 and 1");
  SearchReport report;
  std::vector<Ansatz> actions = action_assignments(n_even, grid, report.assignments_scanned);
  report.action_survivors = actions.size();
  std::size_t n = n_even;

  for (const Ansatz& a : actions) {
    Mat space = pairing_solution_space(a.algebra);
    if (space.rows() == 0) continue;
    if (!nondegenerate_feasible(n, space)) continue;
    enumerate_pairings(n, space, grid, [&](const Mat& M) {
      OddForm B{M};
      auto record = [&](const SuperAlgebra& alg, const OddForm& form, const std::string& extra) {
        if (!alg.super_jacobi_violations().empty()) return;
        if (!verify_odd_quadratic(alg, form).passed()) return;
        if (!detect_filiform(alg)) return;
        SearchHit hit{alg, form, alg.table().empty(), a.description + extra};
        report.hits.push_back(std::move(hit));
      };
      if (!include_odd_odd) {
        record(a.algebra, B, "");
        return;
      }
      // extended mode: enumerate the symmetric odd-odd brackets too
      std::size_t pairs = n * (n + 1) / 2;
      std::size_t constants = pairs * n;
      double combos = 1;
      for (std::size_t i = 0; i < constants; ++i) combos *= static_cast<double>(grid.size());
      if (combos > 2e6) throw Error("extended odd-odd enumeration is too large here");
      enumerate(constants, grid, [&](const std::vector<Rational>& v) {
        ++report.assignments_scanned;
        SuperAlgebra alg = a.algebra;
        std::size_t pos = 0;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
          for (std::size_t j = i; j < n && ok; ++j) {
            Vec value(2 * n);
            for (std::size_t k = 0; k < n; ++k) value[k] = Scalar(v[pos++]);
            if (is_zero(value)) continue;
            try {
              alg.set_bracket(n + i, n + j, value);
            } catch (const Error&) {
              ok = false;
            }
          }
        if (ok) record(alg, B, " with odd-odd constants");
      });
    });
  }
  return report;
}

}  // namespace oddq
