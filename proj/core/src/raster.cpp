#include "abcircle/raster.hpp"

#include <cmath>
#include <stdexcept>

namespace abcircle {

namespace {

struct Emitter {
  PerimeterSet& out;
  int cols, rows;

  void emit(int x, int y) {
    ++out.total;
    if (x >= 0 && x < cols && y >= 0 && y < rows) {
      out.pixels.push_back(Point{x, y});
    }
  }
};

}  // namespace

PerimeterSet rasterize_circle(const Circle& c, int cols, int rows) {
  if (c.r < 1.0) {
    throw std::invalid_argument("rasterize_circle: radius below 1 pixel");
  }
  const int cx = static_cast<int>(std::llround(c.x0));
  const int cy = static_cast<int>(std::llround(c.y0));
  const int r = static_cast<int>(std::llround(c.r));

  PerimeterSet out;
  out.pixels.reserve(static_cast<std::size_t>(8 * r));
  Emitter e{out, cols, rows};

  // First octant (0 <= x <= y); the other seven follow by reflection.
  // Axis and diagonal points have fewer distinct images, so no duplicates
  // are ever emitted.
  int x = 0;
  int y = r;
  int d = 1 - r;
  while (x <= y) {
    if (x == 0) {
      e.emit(cx, cy + y);
      e.emit(cx, cy - y);
      e.emit(cx + y, cy);
      e.emit(cx - y, cy);
    } else if (x == y) {
      e.emit(cx + x, cy + x);
      e.emit(cx + x, cy - x);
      e.emit(cx - x, cy + x);
      e.emit(cx - x, cy - x);
    } else {
      e.emit(cx + x, cy + y);
      e.emit(cx - x, cy + y);
      e.emit(cx + x, cy - y);
      e.emit(cx - x, cy - y);
      e.emit(cx + y, cy + x);
      e.emit(cx - y, cy + x);
      e.emit(cx + y, cy - x);
      e.emit(cx - y, cy - x);
    }
    ++x;
    if (d < 0) {
      d += 2 * x + 1;
    } else {
      --y;
      d += 2 * (x - y) + 1;
    }
  }
  return out;
}

}  // namespace abcircle
