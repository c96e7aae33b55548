#include <doctest.h>

#include "ywall/error.hpp"
#include "ywall/weight.hpp"

using namespace ywall;

TEST_CASE("pairing with simple roots gives the Cartan matrix") {
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) CHECK(pair(i, simple_root(j)) == kCartan[i][j]);
  }
  CHECK(pair(0, kAlpha1) == -4);
  CHECK(pair(1, kAlpha0) == -1);
  CHECK(pair(0, kDelta) == 0);
  CHECK(pair(1, kDelta) == 0);
}

TEST_CASE("null root and level") {
  CHECK(kDelta == 2 * kAlpha0 + kAlpha1);
  CHECK(level(kAlpha0) == 0);
  CHECK(level(kAlpha1) == 0);
  CHECK(level(kDelta) == 0);
  CHECK(level(kLambda1) == 2);
  CHECK(level(2 * kLambda0 + kLambda1) == 4);
}

TEST_CASE("level and pairing are linear") {
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      const Weight v{a, b, a - b};
      const Weight w{b, 2 * a, 5};
      CHECK(level(v + w) == level(v) + level(w));
      CHECK(level(3 * v) == 3 * level(v));
      for (int i = 0; i < 2; ++i) CHECK(pair(i, v - w) == pair(i, v) - pair(i, w));
    }
  }
}

TEST_CASE("classical projection drops the null direction") {
  const Weight w{3, -2, 7};
  CHECK(w.classical() == ClassicalWeight{3, -2});
  CHECK((w + 5 * kHalfDelta).classical() == w.classical());
  CHECK(as_weight(w.classical()) == Weight{3, -2, 0});
}

TEST_CASE("dominant weights") {
  CHECK(dominant(4, 1) == 2 * kLambda0 + kLambda1);
  CHECK(dominant(4, 0) == 4 * kLambda0);
  CHECK(dominant(4, 2) == 2 * kLambda1);
  CHECK_THROWS_AS(dominant(4, 3), DomainError);
  CHECK_THROWS_AS(dominant(0, 0), DomainError);
  CHECK_THROWS_AS(dominant(3, -1), DomainError);
  for (int l = 1; l <= 8; ++l) {
    for (int a = 0; 2 * a <= l; ++a) {
      CHECK(level(dominant(l, a)) == l);
      CHECK(is_dominant(dominant(l, a)));
    }
  }
  CHECK_THROWS_AS(simple_root(2), DomainError);
}

TEST_CASE("weight text") {
  CHECK(to_string(Weight{}) == "0");
  CHECK(to_string(2 * kLambda0 + kLambda1) == "2L0+L1");
  CHECK(to_string(kAlpha0) == "2L0-L1+d/2");
  CHECK(to_string(Weight{0, -1, -3}) == "-L1-3d/2");
  CHECK(to_string(Weight{-2, 3, -2}) == "-2L0+3L1-d");
  CHECK(to_string(Weight{0, 0, 4}) == "2d");
}
