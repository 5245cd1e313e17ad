#include "abcircle/detector.hpp"

#include <chrono>

#include "abcircle/objective.hpp"

namespace abcircle {

DetectionReport detect_circles(const EdgeMap& edges,
                               const DetectorConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();

  DiscriminationConfig disc = cfg.discrimination;
  if (disc.rmax <= 0.0) {
    disc.rmax = default_rmax(edges.width, edges.height);
  }

  Objective objective(edges, disc.rmin, disc.rmax);

  AbcConfig abc = cfg.abc;
  const double hi = static_cast<double>(objective.edges().points.size() - 1);
  for (auto& b : abc.bounds) {
    b.low = 0.0;
    b.high = hi;
  }

  const AbcResult result = run_detection(abc, objective);

  DetectionReport report;
  if (result.best) {
    report = extract_circles(*result.best, result.memory, edges.width,
                             edges.height, disc);
  } else {
    report.width = edges.width;
    report.height = edges.height;
    report.discrimination = disc;
  }
  report.abc = abc;
  const auto end = std::chrono::steady_clock::now();
  report.elapsed_seconds =
      std::chrono::duration<double>(end - start).count();
  return report;
}

}  // namespace abcircle
