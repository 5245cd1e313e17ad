#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace abcircle {

// 8-bit grayscale raster, row-major. Loaded images are at least 3x3.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  std::uint8_t at(int x, int y) const {
    return data[static_cast<std::size_t>(y) * width + x];
  }
};

// Loads a PGM (P2/P5) or PNG file. Color inputs are converted by Rec. 601
// luminance (0.299 R + 0.587 G + 0.114 B). Throws std::runtime_error on
// unreadable files, unsupported formats, or images smaller than 3x3.
GrayImage load_image(const std::string& path);

// Writes binary PGM (P5), maxval 255.
void save_pgm(const GrayImage& img, const std::string& path);

// Writes an 8-bit RGB PNG; `rgb` holds width*height*3 bytes, row-major.
void save_png_rgb(int width, int height, const std::vector<std::uint8_t>& rgb,
                  const std::string& path);

}  // namespace abcircle
