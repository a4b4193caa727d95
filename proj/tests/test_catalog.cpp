#include <doctest.h>

#include "oddq/catalog.hpp"
#include "oddq/flags.hpp"

using namespace oddq;

TEST_CASE("every catalog entry matches its expected record") {
  std::vector<std::string> keys = {"abelian2", "g6:0", "g6:1", "g8:0", "g8:1", "g8:2"};
  for (std::size_t m = 3; m <= 8; ++m) {
    keys.push_back("dualpair:" + std::to_string(m));
    keys.push_back("coadjoint:" + std::to_string(m));
    keys.push_back("model_filiform:" + std::to_string(m));
  }
  for (const auto& key : keys) {
    INFO("entry ", key);
    CatalogEntry e = build(CatalogKey::parse(key));
    CHECK(e.algebra.super_jacobi_violations().empty() == e.expected.jacobi_valid);
    auto [ze, zo] = e.algebra.graded_parts(e.algebra.center());
    CHECK(ze.dim() == e.expected.center_even);
    CHECK(zo.dim() == e.expected.center_odd);
    if (e.algebra.m_odd() > 0)
      CHECK(bracket_chain_dims(e.algebra) == e.expected.chain_dims);
    if (e.form) CHECK(verify_odd_quadratic(e.algebra, *e.form).passed() == e.expected.odd_quadratic);
    CHECK(detect_weak_filiform(e.algebra).found() == e.expected.weak_filiform);
  }
}

TEST_CASE("g6 brackets and pairing are exactly the classified table") {
  CatalogEntry e = build(CatalogKey::parse("g6:0"));
  const SuperAlgebra& a = e.algebra;
  auto val = [&](const char* x, const char* y) {
    return a.format_vector(a.structure(*a.index_of(x), *a.index_of(y)));
  };
  CHECK(val("X1", "X2") == "X3");
  CHECK(val("X1", "e3") == "u2");
  CHECK(val("X2", "e3") == "v2");
  CHECK(val("e3", "e3") == "0");
  CHECK(a.table().size() == 3);
  const Mat& M = e.form->pairing();
  CHECK(M.at(0, 2) == Scalar(1));   // B(X1, v2)
  CHECK(M.at(1, 1) == Scalar(-1));  // B(X2, u2)
  CHECK(M.at(2, 0) == Scalar(1));   // B(X3, e3)
  CHECK(M.at(0, 0).is_zero());      // alpha default
  CHECK(M.at(1, 0).is_zero());      // beta default
}

TEST_CASE("g8 variant 2 includes the symmetric products") {
  CatalogEntry e = build(CatalogKey::parse("g8:2"));
  const SuperAlgebra& a = e.algebra;
  auto val = [&](const char* x, const char* y) {
    return a.format_vector(a.structure(*a.index_of(x), *a.index_of(y)));
  };
  CHECK(val("e4", "e4") == "X2");
  CHECK(val("e3", "e4") == "(1/2)*X3");
  CHECK(val("e3", "e3") == "(-1/2)*X4");
  CHECK(val("u2", "e4") == "X4");
  CHECK(val("X3", "e4") == "(-1)*v2");
}

TEST_CASE("the dual pair family has the stated central elements") {
  CatalogEntry e = build(CatalogKey::parse("dualpair:4"));
  Subspace z = e.algebra.center();
  CHECK(z.dim() == 3);
  auto unit = [&](const char* name) {
    Vec v(e.algebra.dim());
    v[*e.algebra.index_of(name)] = Scalar(1);
    return v;
  };
  CHECK(z.contains(unit("X4")));
  CHECK(z.contains(unit("X1*")));
  CHECK(z.contains(unit("X2*")));
}

TEST_CASE("family parameters reach the pairing") {
  CatalogKey key = CatalogKey::parse("g6:1:3,1/2,-2");
  CHECK(key.lambda == 3);
  CHECK(key.alpha == Rational(1, 2));
  CHECK(key.beta == -2);
  CatalogEntry e = build(key);
  CHECK(e.form->pairing().at(2, 0) == Scalar(3));
  CHECK(e.form->pairing().at(0, 0) == Scalar(Rational(1, 2)));
  CHECK(e.form->pairing().at(1, 0) == Scalar(-2));
  CHECK(verify_odd_quadratic(e.algebra, *e.form).passed());
}

TEST_CASE("invalid keys are rejected") {
  CHECK_THROWS_AS(build(CatalogKey::parse("g6:7")), Error);
  CHECK_THROWS_AS(build(CatalogKey::parse("dualpair:2")), Error);
  CHECK_THROWS_AS(build(CatalogKey::parse("g6:0:0,0,0")), Error);  // lambda = 0
  CHECK_THROWS_AS(CatalogKey::parse("nonsense"), ParseError);
}
