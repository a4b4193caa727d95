#include <doctest.h>

#include "oddq/catalog.hpp"
#include "oddq/superalgebra.hpp"

using namespace oddq;

namespace {

Vec unit(std::size_t dim, std::size_t k) {
  Vec v(dim);
  v[k] = Scalar(1);
  return v;
}

SuperAlgebra g6(int delta) { return build(CatalogKey::parse("g6:" + std::to_string(delta))).algebra; }
SuperAlgebra g8(int variant) { return build(CatalogKey::parse("g8:" + std::to_string(variant))).algebra; }

}  // namespace

TEST_CASE("bracket evaluation with sign completion") {
  SuperAlgebra a = g6(0);
  // [X1, X2] = X3
  CHECK(a.bracket(unit(6, 0), unit(6, 1)) == unit(6, 2));
  // [X2, X1] = -X3
  Vec r = a.bracket(unit(6, 1), unit(6, 0));
  CHECK(r == Scalar(-1) * unit(6, 2));
  // [e3, e3] = X3 in the delta = 1 class
  SuperAlgebra b = g6(1);
  CHECK(b.bracket(unit(6, 3), unit(6, 3)) == unit(6, 2));
  // bilinear extension on mixed-parity vectors: the cross terms
  // [X1,e3] + [e3,X1] cancel, leaving [e3,e3]
  Vec x = unit(6, 0) + unit(6, 3);  // X1 + e3
  CHECK(b.bracket(x, x) == unit(6, 2));
  Vec y = unit(6, 1) + unit(6, 3);  // X2 + e3
  // [X1,X2] + [X1,e3] + [e3,X2] + [e3,e3] = 2 X3 + u2 - v2
  CHECK(b.bracket(x, y) ==
        Scalar(2) * unit(6, 2) + unit(6, 4) - Vec(unit(6, 5)));
}

TEST_CASE("grading is enforced at construction") {
  SuperAlgebra a({"X"}, {"e"});
  CHECK_THROWS_AS(a.set_bracket(0, 1, unit(2, 0)), Error);  // even x odd must be odd
  CHECK_THROWS_AS(a.set_bracket(0, 0, unit(2, 0)), Error);  // [X,X] = 0 forced
  SuperAlgebra b({"X"}, {"e"});
  b.set_bracket(1, 1, unit(2, 0));  // odd diagonal may be nonzero
  CHECK(b.structure(1, 1) == unit(2, 0));
}

TEST_CASE("super Jacobi violations") {
  CHECK(g8(2).super_jacobi_violations().empty());
  SuperAlgebra ab({"X"}, {"e"});
  CHECK(ab.super_jacobi_violations().empty());

  // adding [e3,e3] = X1 to the delta = 0 class breaks the identity at (e3,e3,e3)
  SuperAlgebra bad = g6(0);
  bad.set_bracket(3, 3, unit(6, 0));
  auto violations = bad.super_jacobi_violations();
  REQUIRE(!violations.empty());
  bool found = false;
  for (const auto& v : violations)
    if (v.triple == std::array<std::size_t, 3>{3, 3, 3}) found = true;
  CHECK(found);
}

TEST_CASE("centers") {
  {
    Subspace z = g8(2).center();
    CHECK(z.dim() == 2);  // X4 and v2
    CHECK(z.contains(unit(8, 3)));
    CHECK(z.contains(unit(8, 7)));
  }
  CHECK(g8(0).center().dim() == 3);
  CHECK(g8(1).center().dim() == 3);
  {
    Subspace z = g6(0).center();
    Subspace expected = Subspace::span(6, {unit(6, 2), unit(6, 4), unit(6, 5)});
    CHECK(z == expected);  // X3, u2, v2
  }
}

TEST_CASE("center is an ideal that brackets to zero") {
  for (const char* key : {"g6:0", "g6:1", "g8:0", "g8:1", "g8:2"}) {
    SuperAlgebra a = build(CatalogKey::parse(key)).algebra;
    Subspace z = a.center();
    for (std::size_t r = 0; r < z.dim(); ++r)
      for (std::size_t i = 0; i < a.dim(); ++i)
        CHECK(is_zero(a.bracket(z.basis_row(r), unit(a.dim(), i))));
  }
}

TEST_CASE("lower central series") {
  {
    // even part of the 8-dimensional classes: dims 4, 2, 1, 0
    auto dims = g8(0).lower_central_dims(true);
    CHECK(dims == std::vector<std::size_t>{4, 2, 1, 0});
  }
  {
    SuperAlgebra ab({"X", "Y"}, {});
    CHECK(ab.lower_central_dims(false) == std::vector<std::size_t>{2, 0});
  }
  {
    auto dims = g6(1).lower_central_dims(false);
    CHECK(dims == std::vector<std::size_t>{6, 3, 0});
  }
  {
    // series dims never increase and strictly decrease until stabilization
    for (const char* key : {"g6:0", "g8:2", "dualpair:5", "coadjoint:5"}) {
      auto dims = build(CatalogKey::parse(key)).algebra.lower_central_dims(false);
      for (std::size_t i = 1; i < dims.size(); ++i) CHECK(dims[i] < dims[i - 1]);
    }
  }
}

TEST_CASE("nilpotency") {
  CHECK(g8(2).is_nilpotent(false));
  CHECK(g8(2).is_nilpotent(true));
  SuperAlgebra solvable({"X", "Y"}, {});
  solvable.set_bracket(0, 1, unit(2, 1));  // [X,Y] = Y
  CHECK_FALSE(solvable.is_nilpotent(false));
  SuperAlgebra zero({}, {});
  CHECK(zero.is_nilpotent(false));
}

TEST_CASE("change of basis: identity and the rescaling witness") {
  SuperAlgebra a = g6(1);
  CHECK(a.change_basis(Mat::identity(6)).same_table(a));

  // [e3,e3] = 4 X3 turns into the delta = 1 class under the odd scale by 1/2
  SuperAlgebra c4({"X1", "X2", "X3"}, {"e3", "u2", "v2"});
  c4.set_bracket(0, 1, unit(6, 2));
  c4.set_bracket(0, 3, unit(6, 4));
  c4.set_bracket(1, 3, unit(6, 5));
  c4.set_bracket(3, 3, Scalar(4) * unit(6, 2));
  Mat P = Mat::identity(6);
  for (std::size_t i = 3; i < 6; ++i) P.at(i, i) = Scalar(Rational(1, 2));
  CHECK(c4.change_basis(P).same_table(a));
}

TEST_CASE("change of basis with an adjoined root") {
  // [e3,e3] = 2 X3 needs the scale by 1/sqrt(2)
  SuperAlgebra c2({"X1", "X2", "X3"}, {"e3", "u2", "v2"});
  c2.set_bracket(0, 1, unit(6, 2));
  c2.set_bracket(0, 3, unit(6, 4));
  c2.set_bracket(1, 3, unit(6, 5));
  c2.set_bracket(3, 3, Scalar(2) * unit(6, 2));
  Scalar s = Scalar(1) / adjoin_sqrt(2);
  Mat P = Mat::identity(6);
  for (std::size_t i = 3; i < 6; ++i) P.at(i, i) = s;
  CHECK(c2.change_basis(P).same_table(g6(1)));
}

TEST_CASE("change of basis: the shear that removes b24") {
  // start from the variant-0 table plus [X2,e4] = b24 v2 and the matching
  // form entries; the shear X2 -> X2 + b24 X3, X3 -> X3 + b24 X4 removes it
  Rational b24(3);
  SuperAlgebra a({"X1", "X2", "X3", "X4"}, {"e4", "e3", "u2", "v2"});
  a.set_bracket(0, 1, unit(8, 2));
  a.set_bracket(0, 2, unit(8, 3));
  a.set_bracket(0, 5, unit(8, 6));
  a.set_bracket(1, 5, unit(8, 7));
  a.set_bracket(0, 4, unit(8, 5));
  a.set_bracket(2, 4, Scalar(-1) * unit(8, 7));
  a.set_bracket(1, 4, Scalar(b24) * unit(8, 7));
  Mat P = Mat::identity(8);
  P.at(2, 1) = Scalar(b24);  // X2' = X2 + b24 X3
  P.at(3, 2) = Scalar(b24);  // X3' = X3 + b24 X4
  CHECK(a.change_basis(P).same_table(g8(0)));
}

TEST_CASE("change of basis is functorial") {
  SuperAlgebra a = g6(1);
  Mat P = Mat::identity(6), Q = Mat::identity(6);
  P.at(0, 1) = Scalar(2);   // X2' = 2 X1 + X2
  P.at(4, 5) = Scalar(-1);  // v2' = v2 - u2
  Q.at(1, 0) = Scalar(1);
  Q.at(3, 3) = Scalar(Rational(1, 3));
  CHECK(a.change_basis(P).change_basis(Q).same_table(a.change_basis(P.mul(Q))));
}

TEST_CASE("rejecting bad changes of basis") {
  SuperAlgebra a = g6(0);
  Mat singular(6, 6);
  CHECK_THROWS_AS(a.change_basis(singular), Error);
  Mat mixing = Mat::identity(6);
  mixing.at(0, 3) = Scalar(1);  // even column picks up an odd component
  CHECK_THROWS_AS(a.change_basis(mixing), Error);
}

TEST_CASE("graded skew-symmetry holds on every basis pair") {
  for (const char* key : {"g6:1", "g8:2", "dualpair:4", "coadjoint:4"}) {
    SuperAlgebra a = build(CatalogKey::parse(key)).algebra;
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) {
        Scalar sign = (a.parity(i) && a.parity(j)) ? Scalar(1) : Scalar(-1);
        CHECK(a.structure(i, j) == sign * a.structure(j, i));
      }
  }
}
