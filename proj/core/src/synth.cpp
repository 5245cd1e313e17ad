#include "abcircle/synth.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "abcircle/raster.hpp"
#include "abcircle/rng.hpp"

namespace abcircle {

EdgeMap synth_scene(int width, int height, const GroundTruth& truth) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("synth_scene: empty frame");
  }
  std::vector<std::uint8_t> mask(
      static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
  for (const auto& c : truth.circles) {
    if (c.r < 1.0 || c.x0 < 0.0 || c.x0 >= width || c.y0 < 0.0 ||
        c.y0 >= height) {
      std::ostringstream msg;
      msg << "synth_scene: circle (" << c.x0 << ", " << c.y0 << ", " << c.r
          << ") does not fit a " << width << "x" << height << " frame";
      throw std::invalid_argument(msg.str());
    }
    const PerimeterSet perim = rasterize_circle(c, width, height);
    for (const auto& p : perim.pixels) {
      mask[static_cast<std::size_t>(p.y) * static_cast<std::size_t>(width) +
           static_cast<std::size_t>(p.x)] = 1;
    }
  }
  return EdgeMap::from_mask(width, height, mask);
}

EdgeMap salt_pepper(const EdgeMap& edges, double density,
                    std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("salt_pepper: density must lie in [0, 1]");
  }
  Rng rng(seed);
  std::vector<std::uint8_t> mask = edges.mask;
  for (auto& px : mask) {
    if (rng.u01() < density) px = px ? 0 : 1;
  }
  return EdgeMap::from_mask(edges.width, edges.height, mask);
}

void save_truth(const GroundTruth& truth, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("save_truth: cannot open " + path);
  }
  out.precision(std::numeric_limits<double>::max_digits10);
  for (const auto& c : truth.circles) {
    out << c.x0 << ' ' << c.y0 << ' ' << c.r << '\n';
  }
  if (!out) {
    throw std::runtime_error("save_truth: write failed for " + path);
  }
}

GroundTruth load_truth(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("load_truth: cannot open " + path);
  }
  GroundTruth truth;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    Circle c{};
    if (!(ls >> c.x0 >> c.y0 >> c.r)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw std::runtime_error("load_truth: malformed line " +
                               std::to_string(lineno) + " in " + path);
    }
    truth.circles.push_back(c);
  }
  return truth;
}

}  // namespace abcircle
