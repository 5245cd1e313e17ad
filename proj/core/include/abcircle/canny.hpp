#pragma once

#include "abcircle/edge_map.hpp"
#include "abcircle/image.hpp"

namespace abcircle {

// Classical Canny: Gaussian smoothing, Sobel gradients, non-maximum
// suppression, hysteresis with 8-connectivity.
//
// `low` and `high` are fractions of the maximum gradient magnitude, so the
// same settings behave comparably across images. Requires sigma > 0 and
// 0 < low < high <= 1; throws std::invalid_argument otherwise.
EdgeMap canny_edges(const GrayImage& img, double sigma = 1.0,
                    double low = 0.1, double high = 0.3);

}  // namespace abcircle
