#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abcircle/edge_map.hpp"
#include "abcircle/geometry.hpp"

namespace abcircle {

struct GroundTruth {
  std::vector<Circle> circles;
};

// Renders the union of the circles' digital perimeters into a fresh edge
// map. Each circle needs r >= 1 and its center inside the frame.
EdgeMap synth_scene(int width, int height, const GroundTruth& truth);

// Flips each pixel independently with the given probability.
EdgeMap salt_pepper(const EdgeMap& edges, double density,
                    std::uint64_t seed);

// Sidecar format: one "x y r" triple per line.
void save_truth(const GroundTruth& truth, const std::string& path);
GroundTruth load_truth(const std::string& path);

}  // namespace abcircle
