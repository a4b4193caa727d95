#include <doctest.h>

#include "oddq/catalog.hpp"
#include "oddq/classify.hpp"
#include "oddq/extension.hpp"

using namespace oddq;

namespace {

// The three extension data sets that lift the delta = 0 class in dimension
// 6 to the three 8-dimensional classes; lambda0 and X0 are expressed in the
// convention where the new dual generator maps to -X4.
ExtensionData case_data(int variant) {
  OddDerivation D(3, 3);
  D.even_to_odd().at(0, 0) = Scalar(-1);  // X1 -> -e3
  D.even_to_odd().at(2, 2) = Scalar(1);   // X3 -> v2
  Vec X0(6);
  Scalar lambda0(0);
  if (variant == 1) lambda0 = Scalar(-1);
  if (variant == 2) {
    D.odd_to_even().at(2, 0) = Scalar(Rational(1, 2));  // e3 -> X3/2
    X0[1] = Scalar(1);                                  // X2
  }
  return {D, X0, lambda0};
}

// Witness onto the catalog presentation: extension output basis
// (X1,X2,X3,e* | e3,u2,v2,e) against the target (X1,X2,X3,X4 | e4,e3,u2,v2),
// with X4 = -e* and e4 = e.
Mat catalog_witness() {
  Mat P(8, 8);
  P.at(0, 0) = Scalar(1);   // X1
  P.at(1, 1) = Scalar(1);   // X2
  P.at(2, 2) = Scalar(1);   // X3
  P.at(3, 3) = Scalar(-1);  // X4 = -e*
  P.at(7, 4) = Scalar(1);   // e4 = e   (e sits last in the odd block)
  P.at(4, 5) = Scalar(1);   // e3
  P.at(5, 6) = Scalar(1);   // u2
  P.at(6, 7) = Scalar(1);   // v2
  return P;
}

}  // namespace

TEST_CASE("the three liftings of the 6-dimensional base hit the classified families") {
  CatalogEntry base = build(CatalogKey::parse("g6:0"));
  for (int variant : {0, 1, 2}) {
    INFO("variant ", variant);
    ExtensionResult res =
        generalized_odd_double_extension(base.algebra, *base.form, case_data(variant));
    CHECK(res.algebra.dim() == 8);
    CHECK(res.algebra.super_jacobi_violations().empty());
    CHECK(verify_odd_quadratic(res.algebra, res.form).passed());
    CHECK(res.flag.m == 4);

    CatalogEntry target = build(CatalogKey::parse("g8:" + std::to_string(variant)));
    CHECK(verify_witness_isomorphism(res.algebra, target.algebra, catalog_witness()));
    // the rebased form matches the catalog pairing as well
    SuperAlgebra rebased = res.algebra.change_basis(catalog_witness());
    CHECK(rebased.same_table(target.algebra));
  }
}

TEST_CASE("extension bookkeeping") {
  CatalogEntry base = build(CatalogKey::parse("g6:0"));
  ExtensionResult res = generalized_odd_double_extension(base.algebra, *base.form, case_data(0));
  CHECK(res.algebra.n_even() == base.algebra.n_even() + 1);
  CHECK(res.algebra.m_odd() == base.algebra.m_odd() + 1);
  // e* is central
  for (std::size_t i = 0; i < 8; ++i) {
    Vec e(8);
    e[i] = Scalar(1);
    CHECK(is_zero(res.algebra.bracket(res.witness.estar_image, e)));
  }
  // the pairing restricted to the embedded copy of the base equals the base form
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      Vec ei(6), ej(6);
      ei[i] = Scalar(1);
      ej[j] = Scalar(1);
      Scalar inner = base.form->eval(base.algebra, ei, ej);
      Scalar outer = res.form.eval(res.algebra, res.witness.embedding.row(i),
                                   res.witness.embedding.row(j));
      CHECK(inner == outer);
    }
  // B(e, e*) = 1
  CHECK(res.form.eval(res.algebra, res.witness.e_image, res.witness.estar_image) == Scalar(1));
}

TEST_CASE("invalid data is rejected with a named reason") {
  CatalogEntry base = build(CatalogKey::parse("g6:0"));
  ExtensionData bad = case_data(2);
  bad.X0 = Vec(6);  // drop X0: now D^2 != (1/2) ad(X0)
  CHECK_THROWS_WITH_AS(
      generalized_odd_double_extension(base.algebra, *base.form, bad),
      doctest::Contains("invalid extension data"), Error);
}

TEST_CASE("decomposition recovers the corollary data from the 8-dimensional classes") {
  CatalogEntry g06 = build(CatalogKey::parse("g6:0"));
  for (int variant : {0, 1, 2}) {
    INFO("variant ", variant);
    CatalogEntry e = build(CatalogKey::parse("g8:" + std::to_string(variant)));
    auto wf = detect_weak_filiform(e.algebra);
    REQUIRE(wf.found());
    DecompositionResult res = decompose_weak_filiform(e.algebra, *e.form, *wf.flag);
    CHECK(res.base.dim() == e.algebra.dim() - 2);
    CHECK(res.base.same_table(g06.algebra));
    CHECK(res.base_form.pairing() == g06.form->pairing());
    ExtensionData expected = case_data(variant);
    CHECK(res.data.D == expected.D);
    CHECK(res.data.X0 == expected.X0);
    CHECK(res.data.lambda0 == expected.lambda0);
    // e* = -X4
    Vec minus_x4(8);
    minus_x4[3] = Scalar(-1);
    CHECK(res.witness.estar_image == minus_x4);
  }
}

TEST_CASE("decompose then re-extend is the identity through the witness") {
  for (const char* key : {"g8:0", "g8:1", "g8:2", "g6:0", "g6:1", "dualpair:4", "dualpair:5",
                          "coadjoint:4", "coadjoint:5"}) {
    INFO("entry ", key);
    CatalogEntry e = build(CatalogKey::parse(key));
    auto wf = detect_weak_filiform(e.algebra);
    REQUIRE(wf.found());
    DecompositionResult dec = decompose_weak_filiform(e.algebra, *e.form, *wf.flag);
    CHECK(dec.base.dim() == e.algebra.dim() - 2);
    ExtensionResult ext =
        generalized_odd_double_extension(dec.base, dec.base_form, dec.data);

    // Columns of the witness: the embedded base rows, then e* into the even
    // block and e at the end of the odd block.
    std::size_t d = e.algebra.dim(), hn = dec.base.n_even(), hd = dec.base.dim();
    Mat P(d, d);
    for (std::size_t r = 0; r < hd; ++r) {
      std::size_t col = r < hn ? r : r + 1;  // skip the e* column
      for (std::size_t k = 0; k < d; ++k) P.at(k, col) = dec.witness.embedding.at(r, k);
    }
    for (std::size_t k = 0; k < d; ++k) P.at(k, hn) = dec.witness.estar_image[k];
    for (std::size_t k = 0; k < d; ++k) P.at(k, d - 1) = dec.witness.e_image[k];
    SuperAlgebra rebased = e.algebra.change_basis(P);
    CHECK(rebased.same_table(ext.algebra));
    // and the forms agree entrywise
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Vec ei(d), ej(d);
        ei[i] = Scalar(1);
        ej[j] = Scalar(1);
        CHECK(e.form->eval(e.algebra, P.col(i), P.col(j)) ==
              ext.form.eval(ext.algebra, ei, ej));
      }
  }
}

TEST_CASE("decomposing one step below the classified range") {
  CatalogEntry e = build(CatalogKey::parse("g6:0"));
  auto wf = detect_weak_filiform(e.algebra);
  DecompositionResult dec = decompose_weak_filiform(e.algebra, *e.form, *wf.flag);
  CHECK(dec.base.dim() == 4);
  CHECK(bracket_chain_dims(dec.base) == std::vector<std::size_t>{2, 0});
  // the 4-dimensional base is abelian and cannot be decomposed further
  CHECK(dec.base.table().empty());
  auto wf_base = detect_weak_filiform(dec.base);
  REQUIRE(wf_base.found());
  CHECK_THROWS_AS(decompose_weak_filiform(dec.base, dec.base_form, *wf_base.flag), Error);
}

TEST_CASE("general odd double extension") {
  CatalogEntry g06 = build(CatalogKey::parse("g6:0"));
  SUBCASE("extension by the zero algebra returns the input") {
    SuperAlgebra h({}, {});
    auto [t, B] = odd_double_extension(g06.algebra, *g06.form, h, {}, Mat(0, 0));
    CHECK(t.same_table(g06.algebra));
    CHECK(B.pairing() == g06.form->pairing());
  }
  SUBCASE("zero structure maps give an abelian output") {
    CatalogEntry ab = build(CatalogKey::parse("abelian2"));
    SuperAlgebra h({}, {"z"});
    std::vector<Mat> psi = {Mat(2, 2)};
    auto [t, B] = odd_double_extension(ab.algebra, *ab.form, h, psi, Mat(0, 1));
    CHECK(t.dim() == 4);
    CHECK(t.table().empty());
    CHECK(verify_odd_quadratic(t, B).passed());
  }
  SUBCASE("a one-dimensional odd line with a square-zero derivation matches the generalized construction") {
    SuperAlgebra h({}, {"e"});
    Mat psi_e(6, 6);
    // the X0 = 0 case datum as a full matrix
    psi_e.at(3, 0) = Scalar(-1);  // X1 -> -e3
    psi_e.at(5, 2) = Scalar(1);   // X3 -> v2
    auto [t, B] = odd_double_extension(g06.algebra, *g06.form, h, {psi_e}, Mat(0, 1));
    ExtensionResult gen =
        generalized_odd_double_extension(g06.algebra, *g06.form, case_data(0));
    CHECK(t.same_table(gen.algebra));
    CHECK(B.pairing() == gen.form.pairing());
  }
  SUBCASE("a non-derivation psi is rejected") {
    SuperAlgebra h({}, {"e"});
    Mat bad(6, 6);
    bad.at(3, 0) = Scalar(1);  // X1 -> e3 alone violates the Leibniz rule
    bad.at(4, 1) = Scalar(7);
    CHECK_THROWS_AS(odd_double_extension(g06.algebra, *g06.form, h, {bad}, Mat(0, 1)), Error);
  }
}
