#pragma once

#include <optional>

namespace abcircle {

// Integer pixel coordinate, x = column, y = row.
struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

// Circle parameters in pixel units. Centers and radii are real-valued;
// rasterization rounds them, reporting keeps full precision.
struct Circle {
  double x0 = 0.0;
  double y0 = 0.0;
  double r = 0.0;
};

// Circumcircle through three points, or nullopt when they are collinear
// or coincident (twice the signed triangle area below 1e-12).
std::optional<Circle> circumcircle(double x1, double y1, double x2, double y2,
                                   double x3, double y3);

std::optional<Circle> circumcircle(Point p1, Point p2, Point p3);

// True iff rmin <= r <= rmax and the center lies inside [0,cols) x [0,rows).
bool is_feasible(const Circle& c, int cols, int rows, double rmin, double rmax);

}  // namespace abcircle
