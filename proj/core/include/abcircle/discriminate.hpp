#pragma once

#include <cstddef>
#include <vector>

#include "abcircle/abc.hpp"
#include "abcircle/geometry.hpp"
#include "abcircle/objective.hpp"

namespace abcircle {

// Controls which archived circles survive the post-run sweep.
// rmax <= 0 means "derive from the image diagonal" (see default_rmax).
struct DiscriminationConfig {
  double alpha = 0.05;
  double rmin = 5.0;
  double rmax = 0.0;
  double quality_max_j = 0.25;
};

// Euclidean distance between two circles in (x0, y0, r) space.
double distinctiveness(const Circle& a, const Circle& b);

double default_rmax(int cols, int rows);

// Two circles closer than this are treated as the same shape.
// Requires cols >= 2 and rows >= 2; rmax must already be resolved.
double distinctiveness_threshold(int cols, int rows,
                                 const DiscriminationConfig& cfg);

struct DetectionReport {
  std::vector<ScoredCircle> circles;
  std::size_t candidates_examined = 0;
  double elapsed_seconds = 0.0;
  int width = 0;
  int height = 0;
  AbcConfig abc;
  DiscriminationConfig discrimination;
};

// Sweeps best + the exhausted-source archive in ascending-J order,
// keeping each candidate that clears the quality ceiling and sits
// farther than the distinctiveness threshold from everything kept so far.
DetectionReport extract_circles(const ScoredCircle& best,
                                const ExhaustedMemory& memory, int cols,
                                int rows, const DiscriminationConfig& cfg);

}  // namespace abcircle
