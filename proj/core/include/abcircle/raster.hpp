#pragma once

#include <cstddef>
#include <vector>

#include "abcircle/geometry.hpp"

namespace abcircle {

// Digital circumference of a circle (the test set the objective samples).
//
// `total` counts the full deduplicated perimeter, including pixels that
// fall outside the image; `pixels` keeps only the in-bounds ones. Keeping
// clipped pixels in the denominator means a circle hanging mostly off the
// image cannot score well on its small visible arc.
struct PerimeterSet {
  std::vector<Point> pixels;
  std::size_t total = 0;

  std::size_t in_bounds() const { return pixels.size(); }
};

// Midpoint circle algorithm with octant symmetry.
//
// Center and radius are rounded half-away-from-zero to integers first; the
// first octant walks the integer midpoint error e = x^2 + y^2 - r^2 and the
// remaining octants are reflections. Octant seams (axis and diagonal
// points) are emitted once. Throws std::invalid_argument when c.r < 1.
PerimeterSet rasterize_circle(const Circle& c, int cols, int rows);

}  // namespace abcircle
