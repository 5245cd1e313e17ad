#pragma once

#include "abcircle/abc.hpp"
#include "abcircle/discriminate.hpp"
#include "abcircle/edge_map.hpp"

namespace abcircle {

struct DetectorConfig {
  AbcConfig abc;
  DiscriminationConfig discrimination;
};

// Runs one full optimization pass over the edge map and returns every
// distinct circle recovered from the best solution plus the archive of
// abandoned sources. Index bounds are derived from the edge count, and
// rmax <= 0 resolves to half the image diagonal. Throws
// InsufficientEdgesError when the map holds fewer than three edge pixels.
DetectionReport detect_circles(const EdgeMap& edges,
                               const DetectorConfig& cfg);

}  // namespace abcircle
