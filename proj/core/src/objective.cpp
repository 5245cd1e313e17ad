#include "abcircle/objective.hpp"

#include <algorithm>
#include <cmath>

#include "abcircle/raster.hpp"

namespace abcircle {

double match_error(const Circle& c, const EdgeMap& edges) {
  const PerimeterSet s = rasterize_circle(c, edges.width, edges.height);
  std::size_t matches = 0;
  for (const Point& p : s.pixels) {
    if (edges.at(p.x, p.y)) ++matches;
  }
  return 1.0 - static_cast<double>(matches) / static_cast<double>(s.total);
}

double fitness(double j) {
  return j >= 0.0 ? 1.0 / (1.0 + j) : 1.0 + std::fabs(j);
}

Objective::Objective(const EdgeMap& edges, double rmin, double rmax)
    : edges_(&edges), rmin_(rmin), rmax_(rmax) {
  if (edges.edge_count() < 3) {
    throw InsufficientEdgesError(
        "objective needs at least 3 edge points to form a candidate");
  }
  if (!(rmin <= rmax)) {
    throw std::invalid_argument("objective: rmin must not exceed rmax");
  }
}

std::optional<Circle> Objective::decode(
    const std::array<double, 3>& pos) const {
  const auto ep = static_cast<long long>(edges_->edge_count());
  std::array<long long, 3> idx;
  for (int d = 0; d < 3; ++d) {
    idx[d] = std::clamp(std::llround(pos[d]), 0LL, ep - 1);
  }
  if (idx[0] == idx[1] || idx[0] == idx[2] || idx[1] == idx[2]) {
    return std::nullopt;
  }
  const auto& p = edges_->points;
  const auto c = circumcircle(p[static_cast<std::size_t>(idx[0])],
                              p[static_cast<std::size_t>(idx[1])],
                              p[static_cast<std::size_t>(idx[2])]);
  if (!c || !is_feasible(*c, edges_->width, edges_->height, rmin_, rmax_)) {
    return std::nullopt;
  }
  return c;
}

Objective::Evaluation Objective::evaluate(
    const std::array<double, 3>& pos) const {
  Evaluation e;
  e.circle = decode(pos);
  e.j = e.circle ? match_error(*e.circle, *edges_) : 1.0;
  return e;
}

}  // namespace abcircle
