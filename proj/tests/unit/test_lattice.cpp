#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "perc/lattice.hpp"

using namespace perc;

TEST_CASE("l1 norm and neighbors") {
  CHECK(l1_norm({0, 0}) == 0);
  CHECK(l1_norm({3, -4}) == 7);
  const auto nb = neighbors({1, 2});
  REQUIRE(nb.size() == 4);
  CHECK(nb[0] == Point{2, 2});   // +x
  CHECK(nb[1] == Point{0, 2});   // -x
  CHECK(nb[2] == Point{1, 3});   // +y
  CHECK(nb[3] == Point{1, 1});   // -y
}

TEST_CASE("ball size closed form") {
  for (int r = 0; r <= 6; ++r) CHECK(ball_size(1, r) == 2 * r + 1);
  CHECK(ball_size(2, 0) == 1);
  CHECK(ball_size(2, 1) == 5);
  CHECK(ball_size(2, 2) == 13);
  CHECK(ball_size(2, 65) == 8581);
  CHECK(ball_size(3, 1) == 7);
  CHECK(ball_size(3, 2) == 25);

  SUBCASE("matches the enumerated ball") {
    for (int d : {1, 2, 3})
      for (int r = 0; r <= 4; ++r)
        CHECK(ball_size(d, r) == static_cast<std::int64_t>(ball(d, r).size()));
  }
}

TEST_CASE("ball enumeration is lex-sorted, unique, within radius") {
  const auto pts = ball(2, 3);
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  CHECK(std::set<Point>(pts.begin(), pts.end()).size() == pts.size());
  for (const auto& x : pts) CHECK(l1_norm(x) <= 3);
}

TEST_CASE("BallIndex ordinals and neighbors") {
  const BallIndex idx(2, 3);
  CHECK(idx.size() == ball_size(2, 3));
  CHECK(idx.point(idx.origin()) == Point{0, 0});
  CHECK(idx.norm(idx.origin()) == 0);

  for (std::int64_t i = 0; i < idx.size(); ++i) {
    const Point x = idx.point(i);
    CHECK(idx.ordinal(x) == i);
    CHECK(idx.norm(i) == l1_norm(x));
    const auto nb = neighbors(x);
    for (int dir = 0; dir < 4; ++dir) {
      const std::int64_t j = idx.neighbor(i, dir);
      if (l1_norm(nb[dir]) <= 3) {
        REQUIRE(j >= 0);
        CHECK(idx.point(j) == nb[dir]);
      } else {
        CHECK(j == -1);
      }
    }
  }
  CHECK(idx.ordinal({4, 0}) == -1);
  CHECK(idx.ordinal({2, 2}) == -1);
}

TEST_CASE("BallIndex respects the site cap") {
  CHECK_THROWS_AS(BallIndex(2, 100, 100), std::invalid_argument);
  CHECK_NOTHROW(BallIndex(2, 4, ball_size(2, 4)));
}
