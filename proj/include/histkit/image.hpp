#pragma once

#include <cstdint>
#include <span>

#include <Eigen/Core>

namespace histkit {

using Level = std::uint16_t;

/// Row-major so that `data()` walks pixels top-to-bottom, left-to-right.
using PixelMatrix = Eigen::Matrix<Level, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr int kDefaultLevels = 256;

/// Immutable grayscale raster with `levels` gray levels; every pixel is in [0, levels-1].
class GrayImage {
 public:
  /// Validates dimensions (>= 1), levels (>= 2) and every pixel value.
  GrayImage(PixelMatrix pixels, int levels = kDefaultLevels);

  /// Row-major construction from a flat sequence of width*height values.
  static GrayImage from_values(int width, int height, std::span<const int> values,
                               int levels = kDefaultLevels);

  static GrayImage constant(int width, int height, int value, int levels = kDefaultLevels);

  int width() const noexcept { return static_cast<int>(pixels_.cols()); }
  int height() const noexcept { return static_cast<int>(pixels_.rows()); }
  int levels() const noexcept { return levels_; }
  Eigen::Index size() const noexcept { return pixels_.size(); }

  const PixelMatrix& pixels() const noexcept { return pixels_; }
  std::span<const Level> data() const noexcept {
    return {pixels_.data(), static_cast<std::size_t>(pixels_.size())};
  }

  Level operator()(int row, int col) const { return pixels_(row, col); }

  friend bool operator==(const GrayImage& a, const GrayImage& b) {
    return a.levels_ == b.levels_ && a.pixels_.rows() == b.pixels_.rows() &&
           a.pixels_.cols() == b.pixels_.cols() && a.pixels_ == b.pixels_;
  }

 private:
  PixelMatrix pixels_;
  int levels_;
};

/// Axis-aligned rectangle; bounds are checked against the image it is applied to.
struct RegionOfInterest {
  int x0 = 0;
  int y0 = 0;
  int w = 1;
  int h = 1;

  static RegionOfInterest full(const GrayImage& image) {
    return {0, 0, image.width(), image.height()};
  }

  bool fits(const GrayImage& image) const noexcept {
    return x0 >= 0 && y0 >= 0 && w >= 1 && h >= 1 && x0 + w <= image.width() &&
           y0 + h <= image.height();
  }
};

/// Throws RoiOutOfBounds unless `roi` fits inside `image`.
void check_region(const GrayImage& image, const RegionOfInterest& roi);

GrayImage extract_region(const GrayImage& image, const RegionOfInterest& roi);

/// Returns a read-only block view of the region (bounds checked).
inline auto region_block(const GrayImage& image, const RegionOfInterest& roi) {
  check_region(image, roi);
  return image.pixels().block(roi.y0, roi.x0, roi.h, roi.w);
}

}  // namespace histkit
