#include <cmath>
#include <vector>

#include "abcircle/objective.hpp"
#include "abcircle/raster.hpp"
#include "abcircle/rng.hpp"
#include "doctest.h"

using abcircle::Circle;
using abcircle::EdgeMap;
using abcircle::fitness;
using abcircle::InsufficientEdgesError;
using abcircle::match_error;
using abcircle::Objective;
using abcircle::Point;

namespace {

EdgeMap map_of_points(int w, int h, const std::vector<Point>& pts) {
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(w) * h, 0);
  for (const auto& p : pts) {
    mask[static_cast<std::size_t>(p.y) * w + p.x] = 1;
  }
  return EdgeMap::from_mask(w, h, mask);
}

EdgeMap map_of_circle(int w, int h, const Circle& c) {
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(w) * h, 0);
  for (const auto& p : abcircle::rasterize_circle(c, w, h).pixels) {
    mask[static_cast<std::size_t>(p.y) * w + p.x] = 1;
  }
  return EdgeMap::from_mask(w, h, mask);
}

// (50,40), (60,50), (50,60) lie on the circle centered (50,50), r = 10.
const std::vector<Point> kTriplet{{50, 40}, {60, 50}, {50, 60}};

}  // namespace

TEST_SUITE_BEGIN("objective");

TEST_CASE("decode recovers the circle through three indexed points") {
  const EdgeMap em = map_of_points(100, 100, kTriplet);
  const Objective obj(em, 5, 120);
  const auto c = obj.decode({0, 1, 2});
  REQUIRE(c.has_value());
  CHECK(c->x0 == doctest::Approx(50.0));
  CHECK(c->y0 == doctest::Approx(50.0));
  CHECK(c->r == doctest::Approx(10.0));
}

TEST_CASE("positions round to indices, duplicates are invalid") {
  const EdgeMap em = map_of_points(100, 100, kTriplet);
  const Objective obj(em, 5, 120);
  // 1.6 rounds to 2, colliding with the third index.
  CHECK_FALSE(obj.decode({0.4, 1.6, 2.0}).has_value());
  CHECK(obj.evaluate({0.4, 1.6, 2.0}).j == 1.0);
}

TEST_CASE("positions clamp to the index range") {
  const EdgeMap em = map_of_points(100, 100, kTriplet);
  const Objective obj(em, 5, 120);
  const auto lo = obj.decode({-5, 1, 2});
  REQUIRE(lo.has_value());
  CHECK(lo->r == doctest::Approx(10.0));
  const auto hi = obj.decode({1e9, 1, 0});
  REQUIRE(hi.has_value());
  CHECK(hi->r == doctest::Approx(10.0));
}

TEST_CASE("halves round away from zero, not to even") {
  const EdgeMap em = map_of_points(
      100, 100, {{0, 0}, {50, 40}, {60, 50}, {50, 60}, {99, 99}});
  const Objective obj(em, 5, 120);
  // Half-to-even would give indices (0, 2, 2) and an invalid candidate.
  const auto c = obj.decode({0.5, 1.5, 2.5});
  REQUIRE(c.has_value());
  CHECK(c->x0 == doctest::Approx(50.0));
  CHECK(c->y0 == doctest::Approx(50.0));
  CHECK(c->r == doctest::Approx(10.0));
}

TEST_CASE("collinear points are invalid") {
  const EdgeMap em = map_of_points(100, 100, {{10, 10}, {20, 10}, {30, 10}});
  const Objective obj(em, 5, 120);
  CHECK_FALSE(obj.decode({0, 1, 2}).has_value());
}

TEST_CASE("circles outside the feasible range are invalid") {
  const EdgeMap em = map_of_points(100, 100, {{10, 10}, {11, 10}, {10, 11}});
  const Objective obj(em, 5, 120);  // circumradius ~0.707 < rmin
  CHECK_FALSE(obj.decode({0, 1, 2}).has_value());
}

TEST_CASE("matching the exact raster scores zero") {
  const Circle c{50, 50, 20};
  const EdgeMap em = map_of_circle(128, 128, c);
  CHECK(match_error(c, em) == 0.0);
}

TEST_CASE("empty edge map scores one") {
  const EdgeMap em = map_of_points(100, 100, {});
  CHECK(match_error(Circle{50, 50, 10}, em) == 1.0);
}

TEST_CASE("eighteen of fifty-six matching pixels") {
  const Circle c{50, 50, 10};
  const auto perim = abcircle::rasterize_circle(c, 200, 200);
  REQUIRE(perim.total == 56);
  std::vector<Point> first18(perim.pixels.begin(), perim.pixels.begin() + 18);
  const EdgeMap em = map_of_points(200, 200, first18);
  const double j = match_error(c, em);
  CHECK(std::abs(j - (1.0 - 18.0 / 56.0)) < 1e-12);
  CHECK(j == doctest::Approx(0.6786).epsilon(1e-3));
}

TEST_CASE("clipped perimeter pixels count against the score") {
  const Circle c{5, 5, 10};
  const auto perim = abcircle::rasterize_circle(c, 100, 100);
  REQUIRE(perim.in_bounds() < perim.total);
  const EdgeMap em = map_of_circle(100, 100, c);  // all visible pixels set
  const double expect = 1.0 - static_cast<double>(perim.in_bounds()) /
                                  static_cast<double>(perim.total);
  CHECK(match_error(c, em) == expect);
  CHECK(match_error(c, em) > 0.0);
}

TEST_CASE("J stays within the unit interval") {
  abcircle::Rng rng(3);
  const EdgeMap em = map_of_circle(128, 128, Circle{64, 64, 30});
  for (int i = 0; i < 200; ++i) {
    const Circle c{rng.uniform(0, 128), rng.uniform(0, 128),
                   rng.uniform(1, 80)};
    const double j = match_error(c, em);
    CHECK(j >= 0.0);
    CHECK(j <= 1.0);
  }
}

TEST_CASE("fitness follows the two-branch rule") {
  CHECK(fitness(0.0) == 1.0);
  CHECK(fitness(0.6786) == doctest::Approx(1.0 / 1.6786));
  CHECK(fitness(-0.5) == 1.5);
  CHECK(fitness(1.0) == 0.5);
  double prev = fitness(0.0);
  for (double j = 0.05; j <= 1.0; j += 0.05) {
    const double f = fitness(j);
    CHECK(f < prev);
    prev = f;
  }
}

TEST_CASE("objective rejects maps with fewer than three points") {
  const EdgeMap em = map_of_points(100, 100, {{1, 1}, {2, 2}});
  CHECK_THROWS_AS(Objective(em, 5, 120), InsufficientEdgesError);
}

TEST_CASE("objective rejects inverted radius bounds") {
  const EdgeMap em = map_of_points(100, 100, kTriplet);
  CHECK_THROWS_AS(Objective(em, 120, 5), std::invalid_argument);
}

TEST_CASE("evaluate agrees with decode plus match_error") {
  const Circle truth{64, 64, 25};
  const EdgeMap em = map_of_circle(128, 128, truth);
  const Objective obj(em, 5, 90);
  abcircle::Rng rng(8);
  const auto n = static_cast<double>(em.edge_count() - 1);
  for (int i = 0; i < 100; ++i) {
    const std::array<double, 3> pos{rng.uniform(0, n), rng.uniform(0, n),
                                    rng.uniform(0, n)};
    const auto eval = obj.evaluate(pos);
    const auto c = obj.decode(pos);
    CHECK(eval.circle.has_value() == c.has_value());
    if (c) {
      CHECK(eval.j == match_error(*c, em));
    } else {
      CHECK(eval.j == 1.0);
    }
  }
}

TEST_SUITE_END();
