#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "perc/masks.hpp"

using namespace perc;

TEST_CASE("direction bit layout") {
  CHECK(masks::bits(2) == 4);
  CHECK(masks::full(2) == 0b1111u);
  CHECK(masks::count(2) == 16u);
  CHECK(masks::size(0b1011u) == 3);
  CHECK(masks::contains(0b0100u, 2));
  CHECK_FALSE(masks::contains(0b0100u, 1));
  for (int dir = 0; dir < 8; ++dir) {
    CHECK(masks::opposite(masks::opposite(dir)) == dir);
    CHECK(masks::axis(dir) == dir / 2);
    CHECK(masks::is_positive(dir) == (dir % 2 == 0));
    CHECK(masks::axis(masks::opposite(dir)) == masks::axis(dir));
  }
}

TEST_CASE("direction names round-trip") {
  CHECK(masks::direction_name(0) == "+x");
  CHECK(masks::direction_name(1) == "-x");
  CHECK(masks::direction_name(2) == "+y");
  CHECK(masks::direction_name(3) == "-y");
  CHECK(masks::direction_name(4) == "+z");
  CHECK(masks::direction_name(5) == "-z");
  CHECK(masks::direction_name(6) == "+e4");
  CHECK(masks::direction_name(7) == "-e4");
  for (int dim : {1, 2, 3, 5}) {
    for (int dir = 0; dir < 2 * dim; ++dir)
      CHECK(masks::parse_direction(masks::direction_name(dir), dim) == dir);
  }
  CHECK_THROWS_AS(masks::parse_direction("+z", 2), std::invalid_argument);
  CHECK_THROWS_AS(masks::parse_direction("sideways", 3), std::invalid_argument);
}

TEST_CASE("mask formatting") {
  CHECK(masks::mask_to_string(0, 2) == "{}");
  CHECK(masks::mask_to_string(0b1001u, 2) == "{+x,-y}");
  const auto names = masks::direction_names(0b0110u, 2);
  REQUIRE(names.size() == 2);
  CHECK(names[0] == "-x");
  CHECK(names[1] == "+y");
}

TEST_CASE("check_dim bounds") {
  CHECK_THROWS_AS(masks::check_dim(0), std::invalid_argument);
  CHECK_THROWS_AS(masks::check_dim(kMaxDim + 1), std::invalid_argument);
  CHECK_NOTHROW(masks::check_dim(1));
  CHECK_NOTHROW(masks::check_dim(kMaxDim));
}

TEST_CASE("binomial exact values") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(62, 31) == 465428353255261088ULL);
  CHECK(binomial(4, 5) == 0);

  SUBCASE("Pascal identity across the supported range") {
    for (int n = 1; n <= 62; ++n)
      for (int k = 1; k <= n; ++k)
        CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  }
  SUBCASE("symmetry") {
    for (int n = 0; n <= 62; n += 7)
      for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == binomial(n, n - k));
  }
}
