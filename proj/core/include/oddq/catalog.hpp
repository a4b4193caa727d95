#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oddq/form.hpp"

namespace oddq {

/// Keys for the built-in fixtures. The g6 family takes delta in {0,1}; the
/// g8 family takes variant in {0,1,2}; both carry the form parameters
/// (lambda, alpha, beta) with lambda != 0, defaulting to (1, 0, 0). The
/// dual-pair, coadjoint and model filiform families take the size m >= 3.
struct CatalogKey {
  enum class Family { Abelian2, ModelFiliform, DualPair, Coadjoint, G6, G8 };
  Family family = Family::Abelian2;
  std::size_t m = 0;
  int variant = 0;
  Rational lambda{1};
  Rational alpha{0};
  Rational beta{0};

  std::string str() const;
  static CatalogKey parse(const std::string& text);
};

struct ExpectedProperties {
  std::size_t center_even = 0, center_odd = 0;
  std::vector<std::size_t> chain_dims;
  bool jacobi_valid = true;
  bool odd_quadratic = false;
  bool weak_filiform = false;
};

struct CatalogEntry {
  CatalogKey key;
  SuperAlgebra algebra;
  std::optional<OddForm> form;
  ExpectedProperties expected;
};

CatalogEntry build(const CatalogKey& key);
std::vector<std::string> catalog_keys();

}  // namespace oddq
