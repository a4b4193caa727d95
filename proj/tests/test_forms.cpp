#include <doctest.h>

#include "oddq/catalog.hpp"

using namespace oddq;

namespace {
Vec unit(std::size_t dim, std::size_t k) {
  Vec v(dim);
  v[k] = Scalar(1);
  return v;
}
}  // namespace

TEST_CASE("verify_odd_quadratic on the classified families") {
  for (const char* key : {"g6:0", "g6:1", "g8:0", "g8:1", "g8:2"}) {
    CatalogEntry e = build(CatalogKey::parse(key));
    auto cert = verify_odd_quadratic(e.algebra, *e.form);
    CHECK(cert.passed());
    CHECK(cert.violation_count == 0);
  }
}

TEST_CASE("a vanishing top pairing makes the form degenerate") {
  CatalogEntry e = build(CatalogKey::parse("g6:0"));
  OddForm B = *e.form;
  B.pairing().at(2, 0) = Scalar(0);  // B(X3, e3) = 0
  auto cert = verify_odd_quadratic(e.algebra, B);
  CHECK_FALSE(cert.nondegenerate);
  CHECK_FALSE(cert.passed());
}

TEST_CASE("invariance violations carry witnesses") {
  CatalogEntry e = build(CatalogKey::parse("g6:0"));
  OddForm B = *e.form;
  B.pairing().at(0, 1) = Scalar(1);  // B(X1, u2) = 1 breaks invariance
  auto cert = verify_odd_quadratic(e.algebra, B);
  CHECK_FALSE(cert.invariant);
  CHECK(cert.violation_count > 0);
  CHECK(!cert.sample.empty());
  CHECK(cert.sample.size() <= 16);
}

TEST_CASE("orthogonal complements") {
  CatalogEntry e = build(CatalogKey::parse("g8:0"));
  const SuperAlgebra& a = e.algebra;
  SUBCASE("the whole algebra is orthogonal to nothing") {
    std::vector<Vec> all;
    for (std::size_t i = 0; i < 8; ++i) all.push_back(unit(8, i));
    auto oc = orthogonal_complement(a, *e.form, Subspace::span(8, all));
    CHECK(oc.complement.dim() == 0);
  }
  SUBCASE("the even center generator") {
    auto oc = orthogonal_complement(a, *e.form, Subspace::span(8, {unit(8, 3)}));  // X4
    CHECK(oc.complement.dim() == 7);
    // equals even part + [even, odd] = span of everything except e4
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < 8; ++i)
      if (i != 4) rows.push_back(unit(8, i));
    CHECK(oc.complement == Subspace::span(8, rows));
    CHECK(oc.isotropic);  // X4 pairs only with e4
  }
  SUBCASE("double complement returns the ideal") {
    Subspace I = Subspace::span(8, {unit(8, 3), unit(8, 6), unit(8, 7)});  // the center
    auto oc = orthogonal_complement(a, *e.form, I);
    auto back = orthogonal_complement(a, *e.form, oc.complement);
    CHECK(back.complement == I);
    CHECK(I.dim() + oc.complement.dim() == a.dim());
  }
}

TEST_CASE("the complement of span{e3} in the 6-dimensional class excludes X3") {
  CatalogEntry e = build(CatalogKey::parse("g6:0"));
  auto oc = orthogonal_complement(e.algebra, *e.form, Subspace::span(6, {unit(6, 3)}));
  CHECK(oc.complement.dim() == 5);
  CHECK_FALSE(oc.complement.contains(unit(6, 2)));  // B(X3, e3) = 1
}

TEST_CASE("phi module check") {
  for (const char* key : {"g6:1", "g8:2", "abelian2", "dualpair:4", "coadjoint:5"}) {
    CatalogEntry e = build(CatalogKey::parse(key));
    auto cert = phi_module_check(e.algebra, *e.form);
    CHECK(cert.passed());
  }
}

TEST_CASE("invariance is equivalent to B-skewness of every even adjoint") {
  for (const char* key : {"g6:0", "g8:1", "dualpair:4"}) {
    CatalogEntry e = build(CatalogKey::parse(key));
    const SuperAlgebra& a = e.algebra;
    std::size_t n = a.n_even(), d = a.dim();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          // B([x_a, x_i], x_j) + B(x_i, [x_a, x_j]) = 0 for even a
          Scalar lhs = e.form->eval(a, a.structure(x, i), unit(d, j));
          Scalar rhs = e.form->eval(a, unit(d, i), a.structure(x, j));
          CHECK((lhs + rhs).is_zero());
        }
  }
}

TEST_CASE("even and odd dimensions agree on every odd-quadratic entry") {
  for (const char* key : {"abelian2", "g6:0", "g6:1", "g8:0", "g8:1", "g8:2",
                          "dualpair:3", "dualpair:6", "coadjoint:3", "coadjoint:6"}) {
    CatalogEntry e = build(CatalogKey::parse(key));
    CHECK(e.algebra.n_even() == e.algebra.m_odd());
  }
}

TEST_CASE("direct sums") {
  CatalogEntry ab = build(CatalogKey::parse("abelian2"));
  SUBCASE("abelian2 + abelian2") {
    auto [sum, B] = direct_sum(ab.algebra, ab.algebra, *ab.form, *ab.form);
    CHECK(sum.dim() == 4);
    CHECK(sum.table().empty());
    CHECK(verify_odd_quadratic(sum, B).passed());
  }
  SUBCASE("g6:0 + abelian2 has center 3 + 2") {
    CatalogEntry g = build(CatalogKey::parse("g6:0"));
    auto [sum, B] = direct_sum(g.algebra, ab.algebra, *g.form, *ab.form);
    CHECK(sum.dim() == 8);
    CHECK(sum.center().dim() == 5);
    CHECK(verify_odd_quadratic(sum, B).passed());
  }
  SUBCASE("g6:0 + g6:1 is a 12-dimensional odd-quadratic algebra") {
    CatalogEntry g0 = build(CatalogKey::parse("g6:0"));
    CatalogEntry g1 = build(CatalogKey::parse("g6:1"));
    auto [sum, B] = direct_sum(g0.algebra, g1.algebra, *g0.form, *g1.form);
    CHECK(sum.dim() == 12);
    CHECK(sum.super_jacobi_violations().empty());
    CHECK(verify_odd_quadratic(sum, B).passed());
    // summands stay mutually orthogonal ideals
    Vec x1 = Vec(12);
    x1[0] = Scalar(1);
    Vec y1 = Vec(12);
    y1[9] = Scalar(1);  // an odd vector of the second summand
    CHECK(B.eval(sum, x1, y1).is_zero());
  }
  SUBCASE("summands must be odd-quadratic") {
    CatalogEntry g = build(CatalogKey::parse("g6:0"));
    OddForm degenerate(3, 3);
    CHECK_THROWS_AS(direct_sum(g.algebra, g.algebra, *g.form, degenerate), Error);
  }
}
