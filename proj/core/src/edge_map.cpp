#include "abcircle/edge_map.hpp"

#include <stdexcept>

#include "abcircle/image.hpp"

namespace abcircle {

EdgeMap EdgeMap::from_mask(int width, int height,
                           std::vector<std::uint8_t> mask) {
  if (width < 0 || height < 0 ||
      mask.size() != static_cast<std::size_t>(width) * height) {
    throw std::invalid_argument("EdgeMap::from_mask: mask size mismatch");
  }
  EdgeMap em;
  em.width = width;
  em.height = height;
  em.mask.resize(mask.size());
  for (std::size_t i = 0; i < mask.size(); ++i) {
    em.mask[i] = mask[i] ? 1 : 0;
  }
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      if (em.mask[static_cast<std::size_t>(y) * width + x]) {
        em.points.push_back(Point{x, y});
      }
    }
  }
  return em;
}

EdgeMap load_edge_map(const std::string& path) {
  const GrayImage img = load_image(path);
  std::vector<std::uint8_t> mask(img.data.size());
  for (std::size_t i = 0; i < mask.size(); ++i) {
    mask[i] = img.data[i] ? 1 : 0;
  }
  return EdgeMap::from_mask(img.width, img.height, std::move(mask));
}

void save_edge_map(const EdgeMap& edges, const std::string& path) {
  GrayImage img;
  img.width = edges.width;
  img.height = edges.height;
  img.data.resize(edges.mask.size());
  for (std::size_t i = 0; i < edges.mask.size(); ++i) {
    img.data[i] = edges.mask[i] ? 255 : 0;
  }
  save_pgm(img, path);
}

}  // namespace abcircle
