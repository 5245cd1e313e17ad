#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abcircle/geometry.hpp"

namespace abcircle {

// Binary edge raster plus the ordered edge-point vector the detector
// indexes into. `points` holds exactly one entry per set mask pixel, in
// row-major order (y, then x), so runs are reproducible.
struct EdgeMap {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> mask;  // 0/1 per pixel, row-major
  std::vector<Point> points;

  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }
  bool at(int x, int y) const {
    return mask[static_cast<std::size_t>(y) * width + x] != 0;
  }
  // Number of edge points (the index space the objective searches).
  std::size_t edge_count() const { return points.size(); }

  // Builds the point vector from a 0/1 mask. Nonzero bytes count as set.
  static EdgeMap from_mask(int width, int height,
                           std::vector<std::uint8_t> mask);
};

// Loads a PGM/PNG image as a binary edge map; any nonzero pixel is an edge.
EdgeMap load_edge_map(const std::string& path);

// Saves as binary PGM with values {0, 255}.
void save_edge_map(const EdgeMap& edges, const std::string& path);

}  // namespace abcircle
