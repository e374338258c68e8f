#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "histkit/image.hpp"

namespace histkit::testing {

// Uniform in [0, 1) from the top 53 bits; avoids implementation-defined std distributions.
inline double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(unit_uniform(rng) * (hi - lo + 1));
}

inline double standard_normal(std::mt19937_64& rng) {
  const double u1 = 1.0 - unit_uniform(rng);  // (0, 1]
  const double u2 = unit_uniform(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

inline GrayImage random_image(std::mt19937_64& rng, int width, int height, int levels) {
  PixelMatrix px(height, width);
  for (Eigen::Index i = 0; i < px.size(); ++i) px.data()[i] = static_cast<Level>(uniform_int(rng, 0, levels - 1));
  return GrayImage(std::move(px), levels);
}

inline GrayImage random_image(std::mt19937_64& rng, int max_side, const std::vector<int>& level_choices) {
  const int w = uniform_int(rng, 1, max_side);
  const int h = uniform_int(rng, 1, max_side);
  const int levels = level_choices[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(level_choices.size()) - 1))];
  return random_image(rng, w, h, levels);
}

/// Bimodal test image: the first round(N * w1/(w1+w2)) pixels (row-major) are drawn around
/// `low_peak`, the rest around `high_peak`, both with deviation `sigma`, rounded and clipped.
inline GrayImage two_gaussian_image(std::mt19937_64& rng, int width, int height, int levels, double low_peak,
                                    double high_peak, double sigma, double w1 = 1.0, double w2 = 1.0) {
  const Eigen::Index n = static_cast<Eigen::Index>(width) * height;
  const auto n_low = static_cast<Eigen::Index>(std::lround(static_cast<double>(n) * w1 / (w1 + w2)));
  PixelMatrix px(height, width);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double centre = i < n_low ? low_peak : high_peak;
    const double v = std::round(centre + sigma * standard_normal(rng));
    px.data()[i] = static_cast<Level>(std::clamp(v, 0.0, static_cast<double>(levels - 1)));
  }
  return GrayImage(std::move(px), levels);
}

inline GrayImage image_of(int width, int height, std::vector<int> values, int levels = kDefaultLevels) {
  return GrayImage::from_values(width, height, values, levels);
}

inline std::vector<int> pixel_values(const GrayImage& image) {
  return {image.data().begin(), image.data().end()};
}

}  // namespace histkit::testing
