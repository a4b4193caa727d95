#include <doctest.h>

#include "oddq/catalog.hpp"
#include "oddq/search.hpp"

using namespace oddq;

namespace {
const std::vector<Rational> kGrid = {-1, 0, 1};
}

TEST_CASE("one even dimension: only the zero-product algebra, up to the scale of B") {
  SearchReport report = small_search_nonexistence(1, kGrid);
  CHECK(report.hits.size() == 2);  // the two nonzero pairing scales
  CHECK(report.all_hits_abelian2());
}

TEST_CASE("one even dimension, full constant space: a second structure appears") {
  // With the symmetric square bracket enumerated as well, [e,e] = +-X also
  // passes every axiom: a non-abelian (1|1) algebra the restricted ansatz
  // does not see. Kept here as a documented boundary of the uniqueness
  // statement for the zero-product case.
  SearchReport report = small_search_nonexistence(1, kGrid, true);
  CHECK(report.hits.size() == 6);
  std::size_t abelian = 0, nonabelian = 0;
  for (const auto& h : report.hits) (h.abelian ? abelian : nonabelian)++;
  CHECK(abelian == 2);
  CHECK(nonabelian == 4);
  for (const auto& h : report.hits) {
    if (h.abelian) continue;
    // the non-abelian hits all have [e1,e1] = +-X1 and are genuinely
    // odd-quadratic with a filiform odd part
    CHECK(h.algebra.table().size() == 1);
    CHECK(verify_odd_quadratic(h.algebra, h.form).passed());
  }
  CHECK_FALSE(report.all_hits_abelian2());
}

TEST_CASE("two even dimensions: empty") {
  SearchReport report = small_search_nonexistence(2, kGrid);
  CHECK(report.hits.empty());
  CHECK(report.action_survivors > 0);  // the pairing stage does the killing
}

TEST_CASE("two even dimensions with odd-odd constants: still empty") {
  SearchReport report = small_search_nonexistence(2, kGrid, true);
  CHECK(report.hits.empty());
}

TEST_CASE("three even dimensions over the fixed Heisenberg even part: empty") {
  SearchReport report = small_search_nonexistence(3, kGrid);
  CHECK(report.hits.empty());
  CHECK(report.action_survivors > 0);
}

TEST_CASE("a wider grid changes nothing in the excluded range") {
  std::vector<Rational> grid = {-2, -1, 0, 1, 2};
  CHECK(small_search_nonexistence(2, grid).hits.empty());
}

TEST_CASE("grids missing the required points are rejected") {
  CHECK_THROWS_AS(small_search_nonexistence(1, {Rational(0), Rational(1)}), Error);
}

TEST_CASE("nilpotent even parts of dimension at least two have a two-step generator gap") {
  for (const char* key : {"g6:0", "g6:1", "g8:0", "g8:1", "g8:2", "dualpair:3", "dualpair:4",
                          "dualpair:5", "dualpair:6", "coadjoint:3", "coadjoint:4",
                          "coadjoint:5", "coadjoint:6"}) {
    SuperAlgebra a = build(CatalogKey::parse(key)).algebra;
    REQUIRE(a.is_nilpotent(true));
    auto dims = a.lower_central_dims(true);
    REQUIRE(dims.size() > 1);
    if (dims[0] < 2) continue;
    INFO("entry ", key);
    CHECK(dims[0] - dims[1] >= 2);  // dim g0 - dim [g0, g0] >= 2
  }
}
