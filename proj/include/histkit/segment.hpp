#pragma once

#include <cstdint>
#include <vector>

#include "histkit/histogram.hpp"
#include "histkit/image.hpp"

namespace histkit {

class BinaryMask {
 public:
  BinaryMask(int width, int height, std::vector<bool> bits);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  bool operator()(int row, int col) const { return bits_[static_cast<std::size_t>(row) * width_ + col]; }
  const std::vector<bool>& bits() const noexcept { return bits_; }
  std::int64_t count_set() const noexcept;

  /// 0/255 rendering (levels 256) for export as an ordinary graymap.
  GrayImage to_image() const;

 private:
  int width_;
  int height_;
  std::vector<bool> bits_;
};

enum class ThresholdMethod { Manual, Valley };

struct ThresholdResult {
  int threshold = 0;
  ThresholdMethod method = ThresholdMethod::Manual;
  // Valley method only: the two modes the threshold separates.
  int lower_peak = 0;
  int upper_peak = 0;
};

inline constexpr int kDefaultSmoothWindow = 5;

/// Centered moving average; edge bins average over the neighbours that exist.
Eigen::VectorXd smooth_histogram(const Histogram& hist, int window);

/// Valley between the two dominant modes of the smoothed histogram.
/// A mode is a run of equal smoothed values strictly above both outside neighbours; its level is
/// the run's first level. The two highest modes p1 < p2 are kept and the result is the centre of
/// the widest run of minimal smoothed count inside (p1, p2). Throws NotBimodal with fewer than two
/// modes, InvalidParams for an even or non-positive window.
ThresholdResult threshold_valley(const Histogram& hist, int smooth_window = kDefaultSmoothWindow);

/// Foreground is every pixel strictly greater than `threshold`.
BinaryMask apply_threshold(const GrayImage& image, int threshold);

}  // namespace histkit
