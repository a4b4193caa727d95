#include <doctest.h>

#include <random>

#include "oddq/scalar.hpp"

using namespace oddq;

TEST_CASE("rational arithmetic is exact") {
  Scalar a(Rational(1, 2)), b(Rational(1, 3));
  CHECK((a + b) == Scalar(Rational(5, 6)));
}

TEST_CASE("the defining relation of an adjoined root") {
  Scalar r = adjoin_sqrt(2);
  CHECK(r * r == Scalar(2));
  CHECK(r.radicand() == 2);
}

TEST_CASE("conjugate rationalization") {
  Scalar r = adjoin_sqrt(2);
  Scalar x = Scalar(1) + r;           // 1 + sqrt(2)
  Scalar inv = Scalar(1) / x;
  Scalar expected = Scalar(-1) + r;   // -1 + sqrt(2)
  CHECK(inv == expected);
  // independent check of the expected value: (1+sqrt 2)(-1+sqrt 2) = 1
  CHECK(x * expected == Scalar(1));
}

TEST_CASE("adjoin_sqrt collapses perfect squares") {
  CHECK(adjoin_sqrt(4) == Scalar(2));
  CHECK(adjoin_sqrt(Rational(9, 4)) == Scalar(Rational(3, 2)));
  Scalar r = adjoin_sqrt(2);
  CHECK(r.base() == 0);
  CHECK(r.rad() == 1);
  CHECK(adjoin_sqrt(8) == Scalar(0, 2, 2));  // 2*sqrt(2)
  CHECK(adjoin_sqrt(Rational(1, 2)) * adjoin_sqrt(Rational(1, 2)) == Scalar(Rational(1, 2)));
  CHECK_THROWS_AS(adjoin_sqrt(0), Error);
}

TEST_CASE("negative radicands keep their sign square-free") {
  Scalar i2 = adjoin_sqrt(-4);  // 2*sqrt(-1)
  CHECK(i2.radicand() == -1);
  CHECK(i2 * i2 == Scalar(-4));
}

TEST_CASE("zero detection and radicand normalization") {
  CHECK(Scalar(0).is_zero());
  CHECK(Scalar(Rational(0), Rational(0), Rational(2)).is_zero());
  // a coefficient against sqrt(1) folds into the rational part
  CHECK(Scalar(Rational(1), Rational(-1), Rational(1)).is_zero());
  CHECK_FALSE(Scalar(Rational(0), Rational(1), Rational(2)).is_zero());
}

TEST_CASE("mixed radicands are rejected") {
  Scalar r2 = adjoin_sqrt(2), r3 = adjoin_sqrt(3);
  CHECK_THROWS_AS(r2 + r3, Error);
  CHECK_THROWS_AS(r2 * r3, Error);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), Error);
}

TEST_CASE("field axioms hold exactly on random inputs") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  auto rnd = [&]() { return Rational(num(rng), den(rng)); };
  for (int trial = 0; trial < 200; ++trial) {
    Rational d = trial % 2 ? Rational(2) : Rational(5);
    Scalar a(rnd(), rnd(), d), b(rnd(), rnd(), d), c(rnd(), rnd(), d);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * (Scalar(1) / a) == Scalar(1));
  }
}

TEST_CASE("squaring an adjoined root recovers the radicand") {
  for (int c : {2, 3, 5, 6, 7, 10, 12, -2, -3, 49, 50}) {
    Scalar r = adjoin_sqrt(c);
    CHECK(r * r == Scalar(c));
  }
  for (auto q : {Rational(2, 3), Rational(-5, 8), Rational(121, 4)}) {
    Scalar r = adjoin_sqrt(q);
    CHECK(r * r == Scalar(q));
  }
}
