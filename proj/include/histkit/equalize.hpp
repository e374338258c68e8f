#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "histkit/histogram.hpp"
#include "histkit/image.hpp"

namespace histkit {

using LevelVector = Eigen::Matrix<Level, Eigen::Dynamic, 1>;

/// Lookup table of L output levels, one per input level, each in [0, L-1].
class IntensityMap {
 public:
  explicit IntensityMap(LevelVector lut);

  static IntensityMap identity(int levels);

  int levels() const noexcept { return static_cast<int>(lut_.size()); }
  const LevelVector& lut() const noexcept { return lut_; }
  Level operator[](int level) const { return lut_(level); }

  bool is_monotone() const noexcept;

 private:
  LevelVector lut_;
};

/// lut[x] = round((L-1) * cdf(x)), rounding half away from zero.
IntensityMap he_map(const Histogram& hist);

/// Throws LevelMismatch if the map and image disagree on L.
GrayImage apply_map(const GrayImage& image, const IntensityMap& map);

GrayImage equalize_he(const GrayImage& image);

/// Brightness-preserving bi-histogram split: levels <= mean_level form the lower sub-image and
/// are equalized onto [0, mean_level]; the rest onto [mean_level+1, L-1].
struct BbheDecomposition {
  int levels = 0;
  int mean_level = 0;
  LevelVector lower_map;  // indexed by level, covers [0, mean_level]
  LevelVector upper_map;  // indexed by level - (mean_level+1), covers [mean_level+1, L-1]
  std::int64_t lower_count = 0;
  std::int64_t upper_count = 0;

  Level map(int level) const {
    return level <= mean_level ? lower_map(level) : upper_map(level - mean_level - 1);
  }

  /// The union of both sub-maps as a single L-entry table.
  IntensityMap combined() const;
};

/// floor of the sample mean.
int bbhe_mean_level(const GrayImage& image);

BbheDecomposition bbhe_decompose(const GrayImage& image);

GrayImage equalize_bbhe(const GrayImage& image);

}  // namespace histkit
