#include <doctest.h>

#include "oddq/matrix.hpp"

using namespace oddq;

namespace {
Mat from(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<Vec> vv;
  std::size_t cols = rows.begin()->size();
  for (const auto& r : rows) {
    Vec v;
    for (int x : r) v.push_back(Scalar(x));
    vv.push_back(v);
  }
  return Mat::from_rows(vv, cols);
}
}  // namespace

TEST_CASE("rref, rank, kernel") {
  Mat A = from({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  CHECK(A.rank() == 2);
  Mat K = A.kernel();
  CHECK(K.rows() == 1);
  // kernel vectors solve the system
  Vec v = K.row(0);
  CHECK(is_zero(A.apply(v)));
}

TEST_CASE("determinant and inverse") {
  Mat A = from({{2, 1}, {1, 1}});
  CHECK(A.det() == Scalar(1));
  auto inv = A.inverse();
  REQUIRE(inv.has_value());
  CHECK(A.mul(*inv) == Mat::identity(2));
  Mat S = from({{1, 2}, {2, 4}});
  CHECK(S.det() == Scalar(0));
  CHECK_FALSE(S.inverse().has_value());
}

TEST_CASE("exact arithmetic with quadratic entries") {
  Scalar r = adjoin_sqrt(2);
  Mat A(2, 2);
  A.at(0, 0) = r;
  A.at(1, 1) = r;
  CHECK(A.det() == Scalar(2));
  auto inv = A.inverse();
  REQUIRE(inv.has_value());
  CHECK(inv->at(0, 0) * r == Scalar(1));
}

TEST_CASE("subspaces are canonical") {
  Subspace a = Subspace::span(3, {{Scalar(1), Scalar(1), Scalar(0)},
                                  {Scalar(0), Scalar(1), Scalar(1)}});
  Subspace b = Subspace::span(3, {{Scalar(1), Scalar(2), Scalar(1)},
                                  {Scalar(1), Scalar(0), Scalar(-1)}});
  CHECK(a == b);  // same span, same echelon matrix
  CHECK(a.contains(Vec{Scalar(2), Scalar(3), Scalar(1)}));
  CHECK_FALSE(a.contains(Vec{Scalar(0), Scalar(0), Scalar(1)}));
}

TEST_CASE("sum and intersection") {
  Subspace x = Subspace::span(3, {{Scalar(1), Scalar(0), Scalar(0)},
                                  {Scalar(0), Scalar(1), Scalar(0)}});
  Subspace y = Subspace::span(3, {{Scalar(0), Scalar(1), Scalar(0)},
                                  {Scalar(0), Scalar(0), Scalar(1)}});
  CHECK(x.sum(y).dim() == 3);
  Subspace meet = x.intersect(y);
  CHECK(meet.dim() == 1);
  CHECK(meet.contains(Vec{Scalar(0), Scalar(1), Scalar(0)}));
}
