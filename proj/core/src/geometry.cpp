#include "abcircle/geometry.hpp"

#include <cmath>

namespace abcircle {

namespace {
constexpr double kDegenerateEps = 1e-12;
}

std::optional<Circle> circumcircle(double x1, double y1, double x2, double y2,
                                   double x3, double y3) {
  // Determinant form of the perpendicular-bisector intersection.
  const double det = x1 * (y2 - y3) + x2 * (y3 - y1) + x3 * (y1 - y2);
  if (!std::isfinite(det) || std::fabs(det) < kDegenerateEps) {
    return std::nullopt;
  }
  const double a2 = x1 * x1 + y1 * y1;
  const double b2 = x2 * x2 + y2 * y2;
  const double c2 = x3 * x3 + y3 * y3;
  const double ux =
      (a2 * (y2 - y3) + b2 * (y3 - y1) + c2 * (y1 - y2)) / (2.0 * det);
  const double uy =
      (a2 * (x3 - x2) + b2 * (x1 - x3) + c2 * (x2 - x1)) / (2.0 * det);
  const double r = std::hypot(x1 - ux, y1 - uy);
  if (!std::isfinite(ux) || !std::isfinite(uy) || !std::isfinite(r) ||
      r <= 0.0) {
    return std::nullopt;
  }
  return Circle{ux, uy, r};
}

std::optional<Circle> circumcircle(Point p1, Point p2, Point p3) {
  return circumcircle(p1.x, p1.y, p2.x, p2.y, p3.x, p3.y);
}

bool is_feasible(const Circle& c, int cols, int rows, double rmin,
                 double rmax) {
  return c.r >= rmin && c.r <= rmax && c.x0 >= 0.0 && c.x0 < cols &&
         c.y0 >= 0.0 && c.y0 < rows;
}

}  // namespace abcircle
