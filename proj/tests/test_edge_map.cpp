#include <fstream>
#include <stdexcept>
#include <vector>

#include "abcircle/edge_map.hpp"
#include "doctest.h"
#include "util.hpp"

using abcircle::EdgeMap;
using abcircle::load_edge_map;
using abcircle::Point;
using abcircle::save_edge_map;
using testutil::TempDir;

TEST_SUITE_BEGIN("edge_map");

TEST_CASE("from_mask builds row-major points and normalizes values") {
  std::vector<std::uint8_t> mask(12, 0);
  mask[1] = 7;    // (1, 0)
  mask[4] = 255;  // (0, 1)
  mask[11] = 1;   // (3, 2)
  const EdgeMap em = EdgeMap::from_mask(4, 3, mask);
  CHECK(em.points == std::vector<Point>{{1, 0}, {0, 1}, {3, 2}});
  CHECK(em.edge_count() == 3);
  CHECK(em.at(1, 0));
  CHECK(em.at(0, 1));
  CHECK(em.at(3, 2));
  CHECK_FALSE(em.at(0, 0));
  CHECK(em.mask[1] == 1);
  CHECK(em.mask[4] == 1);
}

TEST_CASE("empty mask has no points") {
  const EdgeMap em = EdgeMap::from_mask(5, 5, std::vector<std::uint8_t>(25, 0));
  CHECK(em.edge_count() == 0);
}

TEST_CASE("save and load preserve dimensions and points") {
  TempDir tmp;
  std::vector<std::uint8_t> mask(7 * 9, 0);
  for (int i : {0, 5, 6, 17, 30, 62}) mask[static_cast<std::size_t>(i)] = 1;
  const EdgeMap em = EdgeMap::from_mask(7, 9, mask);
  const auto path = tmp.file("edges.pgm");
  save_edge_map(em, path);
  const EdgeMap back = load_edge_map(path);
  CHECK(back.width == em.width);
  CHECK(back.height == em.height);
  CHECK(back.points == em.points);
}

TEST_CASE("any nonzero pixel loads as an edge") {
  TempDir tmp;
  const auto path = tmp.file("gray.pgm");
  {
    std::ofstream out(path);
    out << "P2\n4 8\n255\n";
    for (int i = 0; i < 32; ++i) out << (i == 31 ? 9 : 0) << ' ';
  }
  const EdgeMap em = load_edge_map(path);
  CHECK(em.points == std::vector<Point>{{3, 7}});
}

TEST_CASE("in_bounds matches the frame") {
  const EdgeMap em = EdgeMap::from_mask(4, 3, std::vector<std::uint8_t>(12, 0));
  CHECK(em.in_bounds(0, 0));
  CHECK(em.in_bounds(3, 2));
  CHECK_FALSE(em.in_bounds(4, 0));
  CHECK_FALSE(em.in_bounds(0, 3));
  CHECK_FALSE(em.in_bounds(-1, 0));
}

TEST_CASE("mask size mismatch is rejected") {
  CHECK_THROWS_AS(EdgeMap::from_mask(4, 3, std::vector<std::uint8_t>(11, 0)),
                  std::invalid_argument);
}

TEST_SUITE_END();
