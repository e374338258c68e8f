#include "histkit/equalize.hpp"

#include <cstdint>
#include <string>

#include "histkit/error.hpp"

namespace histkit {
namespace {

// Nearest integer to num / den with halves rounded up, for num >= 0 and den > 0. Working on
// integer counts keeps exact .5 ties from drifting below the midpoint through accumulated
// floating-point error.
Level round_ratio(std::int64_t num, std::int64_t den) {
  return static_cast<Level>((2 * num + den) / (2 * den));
}

// Cumulative distribution of bins[first..last] normalized by their own total, followed by the
// map first + (last - first) * c(x). An empty sub-range maps to itself.
LevelVector equalize_range(const CountVector& bins, int first, int last) {
  const int width = last - first + 1;
  LevelVector map(width);
  const std::int64_t total = bins.segment(first, width).sum();
  if (total == 0) {
    for (int x = first; x <= last; ++x) map(x - first) = static_cast<Level>(x);
    return map;
  }
  const std::int64_t span = last - first;
  std::int64_t cum = 0;
  for (int x = first; x <= last; ++x) {
    cum += bins(x);
    map(x - first) = static_cast<Level>(first + round_ratio(span * cum, total));
  }
  return map;
}

}  // namespace

IntensityMap::IntensityMap(LevelVector lut) : lut_(std::move(lut)) {
  if (lut_.size() < 2) throw Error(ErrorKind::InvalidParams, "intensity map needs at least 2 entries");
  if (lut_.maxCoeff() >= lut_.size())
    throw Error(ErrorKind::PixelOutOfRange, "intensity map entry exceeds levels-1");
}

IntensityMap IntensityMap::identity(int levels) {
  return IntensityMap(LevelVector::LinSpaced(levels, 0, static_cast<Level>(levels - 1)));
}

bool IntensityMap::is_monotone() const noexcept {
  for (Eigen::Index x = 1; x < lut_.size(); ++x)
    if (lut_(x) < lut_(x - 1)) return false;
  return true;
}

IntensityMap he_map(const Histogram& hist) {
  const std::int64_t total = hist.total();
  if (total == 0) throw Error(ErrorKind::EmptyRegion, "cannot equalize an empty histogram");
  const int top = hist.levels() - 1;
  LevelVector lut(hist.levels());
  std::int64_t cum = 0;
  for (int x = 0; x <= top; ++x) {
    cum += hist[x];
    lut(x) = round_ratio(top * cum, total);
  }
  return IntensityMap(std::move(lut));
}

GrayImage apply_map(const GrayImage& image, const IntensityMap& map) {
  if (map.levels() != image.levels())
    throw Error(ErrorKind::LevelMismatch, "map has " + std::to_string(map.levels()) + " entries, image has " +
                                              std::to_string(image.levels()) + " levels");
  const LevelVector& lut = map.lut();
  PixelMatrix out = image.pixels().unaryExpr([&lut](Level v) { return lut(v); });
  return GrayImage(std::move(out), image.levels());
}

GrayImage equalize_he(const GrayImage& image) { return apply_map(image, he_map(compute_histogram(image))); }

int bbhe_mean_level(const GrayImage& image) {
  const std::int64_t sum = image.pixels().cast<std::int64_t>().sum();
  return static_cast<int>(sum / image.size());
}

BbheDecomposition bbhe_decompose(const GrayImage& image) {
  const Histogram hist = compute_histogram(image);
  const int top = hist.levels() - 1;
  BbheDecomposition d;
  d.levels = hist.levels();
  d.mean_level = bbhe_mean_level(image);
  d.lower_map = equalize_range(hist.bins(), 0, d.mean_level);
  d.upper_map = d.mean_level < top ? equalize_range(hist.bins(), d.mean_level + 1, top) : LevelVector(0);
  d.lower_count = hist.bins().head(d.mean_level + 1).sum();
  d.upper_count = hist.total() - d.lower_count;
  return d;
}

IntensityMap BbheDecomposition::combined() const {
  LevelVector lut(levels);
  lut.head(lower_map.size()) = lower_map;
  lut.tail(upper_map.size()) = upper_map;
  return IntensityMap(std::move(lut));
}

GrayImage equalize_bbhe(const GrayImage& image) { return apply_map(image, bbhe_decompose(image).combined()); }

}  // namespace histkit
