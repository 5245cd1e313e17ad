#include "abcircle/canny.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace abcircle {

namespace {

std::vector<double> gaussian_kernel(double sigma) {
  const int radius = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
  std::vector<double> k(static_cast<std::size_t>(2 * radius + 1));
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    const double v = std::exp(-(i * i) / (2.0 * sigma * sigma));
    k[static_cast<std::size_t>(i + radius)] = v;
    sum += v;
  }
  for (auto& v : k) v /= sum;
  return k;
}

// Separable convolution with clamped borders.
std::vector<double> smooth(const GrayImage& img, double sigma) {
  const int w = img.width;
  const int h = img.height;
  const auto kernel = gaussian_kernel(sigma);
  const int radius = static_cast<int>(kernel.size() / 2);

  std::vector<double> tmp(static_cast<std::size_t>(w) * h);
  std::vector<double> out(static_cast<std::size_t>(w) * h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i) {
        const int xi = std::clamp(x + i, 0, w - 1);
        acc += kernel[static_cast<std::size_t>(i + radius)] * img.at(xi, y);
      }
      tmp[static_cast<std::size_t>(y) * w + x] = acc;
    }
  }
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i) {
        const int yi = std::clamp(y + i, 0, h - 1);
        acc += kernel[static_cast<std::size_t>(i + radius)] *
               tmp[static_cast<std::size_t>(yi) * w + x];
      }
      out[static_cast<std::size_t>(y) * w + x] = acc;
    }
  }
  return out;
}

}  // namespace

EdgeMap canny_edges(const GrayImage& img, double sigma, double low,
                    double high) {
  if (!(sigma > 0.0)) {
    throw std::invalid_argument("canny_edges: sigma must be positive");
  }
  if (!(low > 0.0 && low < high && high <= 1.0)) {
    throw std::invalid_argument(
        "canny_edges: thresholds must satisfy 0 < low < high <= 1");
  }

  const int w = img.width;
  const int h = img.height;
  const auto s = smooth(img, sigma);
  auto at = [&](const std::vector<double>& a, int x, int y) {
    return a[static_cast<std::size_t>(y) * w + x];
  };

  // Sobel on the interior; border gradients stay zero so image edges do not
  // produce spurious contours.
  std::vector<double> gx(s.size(), 0.0), gy(s.size(), 0.0), mag(s.size(), 0.0);
  double max_mag = 0.0;
  for (int y = 1; y < h - 1; ++y) {
    for (int x = 1; x < w - 1; ++x) {
      const double dx = (at(s, x + 1, y - 1) + 2.0 * at(s, x + 1, y) +
                         at(s, x + 1, y + 1)) -
                        (at(s, x - 1, y - 1) + 2.0 * at(s, x - 1, y) +
                         at(s, x - 1, y + 1));
      const double dy = (at(s, x - 1, y + 1) + 2.0 * at(s, x, y + 1) +
                         at(s, x + 1, y + 1)) -
                        (at(s, x - 1, y - 1) + 2.0 * at(s, x, y - 1) +
                         at(s, x + 1, y - 1));
      const std::size_t i = static_cast<std::size_t>(y) * w + x;
      gx[i] = dx;
      gy[i] = dy;
      mag[i] = std::hypot(dx, dy);
      max_mag = std::max(max_mag, mag[i]);
    }
  }

  std::vector<std::uint8_t> result(s.size(), 0);
  if (max_mag == 0.0) {
    return EdgeMap::from_mask(w, h, std::move(result));
  }

  // Non-maximum suppression along the quantized gradient direction. Ties
  // survive on both sides, which keeps an ideal two-pixel step symmetric.
  static constexpr int kDx[4] = {1, 1, 0, -1};
  static constexpr int kDy[4] = {0, 1, 1, 1};
  std::vector<double> nms(s.size(), 0.0);
  for (int y = 1; y < h - 1; ++y) {
    for (int x = 1; x < w - 1; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * w + x;
      if (mag[i] <= 0.0) continue;
      double theta = std::atan2(gy[i], gx[i]);
      if (theta < 0.0) theta += std::numbers::pi;
      int sector =
          static_cast<int>(std::lround(theta / (std::numbers::pi / 4.0))) % 4;
      const double n1 = mag[static_cast<std::size_t>(y + kDy[sector]) * w +
                            (x + kDx[sector])];
      const double n2 = mag[static_cast<std::size_t>(y - kDy[sector]) * w +
                            (x - kDx[sector])];
      if (mag[i] >= n1 && mag[i] >= n2) {
        nms[i] = mag[i];
      }
    }
  }

  // Hysteresis: seed from strong pixels, grow through weak ones.
  const double high_abs = high * max_mag;
  const double low_abs = low * max_mag;
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < nms.size(); ++i) {
    if (nms[i] >= high_abs) {
      result[i] = 1;
      stack.push_back(i);
    }
  }
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    const int x = static_cast<int>(i % w);
    const int y = static_cast<int>(i / w);
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        const int nx = x + dx;
        const int ny = y + dy;
        if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
        const std::size_t ni = static_cast<std::size_t>(ny) * w + nx;
        if (!result[ni] && nms[ni] >= low_abs) {
          result[ni] = 1;
          stack.push_back(ni);
        }
      }
    }
  }
  return EdgeMap::from_mask(w, h, std::move(result));
}

}  // namespace abcircle
