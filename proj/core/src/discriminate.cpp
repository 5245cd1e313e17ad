#include "abcircle/discriminate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace abcircle {

double distinctiveness(const Circle& a, const Circle& b) {
  const double dx = a.x0 - b.x0;
  const double dy = a.y0 - b.y0;
  const double dr = a.r - b.r;
  return std::sqrt(dx * dx + dy * dy + dr * dr);
}

double default_rmax(int cols, int rows) {
  return std::hypot(static_cast<double>(cols - 1),
                    static_cast<double>(rows - 1)) /
         2.0;
}

double distinctiveness_threshold(int cols, int rows,
                                 const DiscriminationConfig& cfg) {
  if (cols < 2 || rows < 2) {
    throw std::invalid_argument(
        "distinctiveness_threshold: image must be at least 2x2");
  }
  const double dc = static_cast<double>(cols - 1);
  const double dr = static_cast<double>(rows - 1);
  const double drad = cfg.rmax - cfg.rmin;
  return cfg.alpha * std::sqrt(dc * dc + dr * dr + drad * drad);
}

DetectionReport extract_circles(const ScoredCircle& best,
                                const ExhaustedMemory& memory, int cols,
                                int rows, const DiscriminationConfig& cfg) {
  if (!(cfg.alpha > 0.0)) {
    throw std::invalid_argument("extract_circles: alpha must be positive");
  }
  if (!(cfg.rmin <= cfg.rmax)) {
    throw std::invalid_argument("extract_circles: rmin exceeds rmax");
  }
  if (!(cfg.quality_max_j > 0.0 && cfg.quality_max_j < 1.0)) {
    throw std::invalid_argument(
        "extract_circles: quality_max_j must lie in (0, 1)");
  }

  std::vector<ScoredCircle> pool;
  pool.reserve(1 + memory.size());
  pool.push_back(best);
  for (const auto& e : memory.entries()) pool.push_back(e);
  std::stable_sort(pool.begin(), pool.end(),
                   [](const ScoredCircle& a, const ScoredCircle& b) {
                     return a.j < b.j;
                   });

  const double es_th = distinctiveness_threshold(cols, rows, cfg);
  DetectionReport report;
  report.candidates_examined = pool.size();
  report.width = cols;
  report.height = rows;
  report.discrimination = cfg;
  for (const auto& cand : pool) {
    if (cand.j > cfg.quality_max_j) continue;
    const bool distinct = std::all_of(
        report.circles.begin(), report.circles.end(),
        [&](const ScoredCircle& kept) {
          return distinctiveness(cand.circle, kept.circle) > es_th;
        });
    if (distinct) report.circles.push_back(cand);
  }
  return report;
}

}  // namespace abcircle
