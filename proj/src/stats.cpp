#include "histkit/stats.hpp"

#include <cmath>
#include <cstdio>

#include "histkit/error.hpp"

namespace histkit {
namespace {

struct PixelSums {
  std::int64_t count = 0;
  std::int64_t sum = 0;
};

template <typename Block>
PixelSums pixel_sums(const Block& block) {
  return {static_cast<std::int64_t>(block.size()), block.template cast<std::int64_t>().sum()};
}

template <typename Fn>
decltype(auto) with_region(const GrayImage& image, const std::optional<RegionOfInterest>& roi, Fn&& fn) {
  if (roi) return fn(region_block(image, *roi));
  return fn(image.pixels().block(0, 0, image.height(), image.width()));
}

void require_samples(const Histogram& hist) {
  if (hist.total() <= 0) throw Error(ErrorKind::EmptyRegion, "region has no samples");
}

}  // namespace

NoiseModel::NoiseModel(double noise_std) : noise_std_(noise_std) {
  if (!(noise_std > 0.0) || !std::isfinite(noise_std))
    throw Error(ErrorKind::InvalidNoise, "noise std must be positive, got " + std::to_string(noise_std));
}

double sample_mean(const GrayImage& image, const std::optional<RegionOfInterest>& roi) {
  const PixelSums s = with_region(image, roi, [](const auto& block) { return pixel_sums(block); });
  if (s.count == 0) throw Error(ErrorKind::EmptyRegion, "region has no samples");
  return static_cast<double>(s.sum) / static_cast<double>(s.count);
}

double histogram_mean(const Histogram& hist) {
  require_samples(hist);
  std::int64_t weighted = 0;
  for (int a = 0; a < hist.levels(); ++a) weighted += a * hist[a];
  return static_cast<double>(weighted) / static_cast<double>(hist.total());
}

double sample_std(const GrayImage& image, const std::optional<RegionOfInterest>& roi) {
  return with_region(image, roi, [](const auto& block) {
    const PixelSums s = pixel_sums(block);
    if (s.count == 0) throw Error(ErrorKind::EmptyRegion, "region has no samples");
    if (s.count == 1) throw Error(ErrorKind::DegenerateRegion, "standard deviation needs at least 2 samples");
    const double mean = static_cast<double>(s.sum) / static_cast<double>(s.count);
    const double ss = (block.template cast<double>().array() - mean).square().sum();
    return std::sqrt(ss / static_cast<double>(s.count - 1));
  });
}

double histogram_std(const Histogram& hist) {
  require_samples(hist);
  const std::int64_t n = hist.total();
  if (n == 1) throw Error(ErrorKind::DegenerateRegion, "standard deviation needs at least 2 samples");
  // n * (sum x^2 h - n m^2) = n * sum x^2 h - (sum x h)^2, kept integral until the last division.
  std::int64_t sum = 0;
  std::int64_t sum_sq = 0;
  for (std::int64_t x = 0; x < hist.levels(); ++x) {
    sum += x * hist[static_cast<int>(x)];
    sum_sq += x * x * hist[static_cast<int>(x)];
  }
  const auto numerator = static_cast<double>(n * sum_sq - sum * sum);
  return std::sqrt(numerator / (static_cast<double>(n) * static_cast<double>(n - 1)));
}

double coefficient_of_variation(double mean, double std) {
  if (!(mean > 0.0)) throw Error(ErrorKind::ZeroMean, "coefficient of variation undefined for zero mean");
  return std / mean * 100.0;
}

int mode_level(const Histogram& hist) {
  require_samples(hist);
  Eigen::Index best = 0;
  hist.bins().maxCoeff(&best);  // first maximum
  return static_cast<int>(best);
}

int median_level(const Histogram& hist) {
  require_samples(hist);
  std::int64_t running = 0;
  for (int x = 0; x < hist.levels(); ++x) {
    running += hist[x];
    if (2 * running >= hist.total()) return x;
  }
  return hist.levels() - 1;
}

double snr_db(SnrKind kind, double numerator, const NoiseModel& noise) {
  if (!(numerator > 0.0) || !std::isfinite(numerator)) {
    const char* what = kind == SnrKind::Range ? "range (max - min)" : kind == SnrKind::Mean ? "mean" : "signal std";
    throw Error(ErrorKind::InvalidNumerator, std::string(what) + " must be positive for SNR");
  }
  return 20.0 * std::log10(numerator / noise.noise_std());
}

RegionStatistics region_statistics(const GrayImage& image, const std::optional<RegionOfInterest>& roi,
                                   const std::optional<NoiseModel>& noise, SnrKind snr_kind) {
  const Histogram hist = compute_histogram(image, roi);
  RegionStatistics s;
  s.count = hist.total();
  s.mean = sample_mean(image, roi);
  s.stddev = sample_std(image, roi);
  s.cv = coefficient_of_variation(s.mean, s.stddev);
  s.mode = mode_level(hist);
  s.median = median_level(hist);

  const auto& bins = hist.bins();
  int lo = 0;
  while (bins(lo) == 0) ++lo;
  int hi = hist.levels() - 1;
  while (bins(hi) == 0) --hi;
  s.min = lo;
  s.max = hi;

  if (noise) {
    const double numerator = snr_kind == SnrKind::Range  ? static_cast<double>(s.max - s.min)
                             : snr_kind == SnrKind::Mean ? s.mean
                                                         : s.stddev;
    s.snr_db = snr_db(snr_kind, numerator, *noise);
  }
  return s;
}

namespace {

std::string real1(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

std::string snr_cell(const RegionStatistics& s) { return s.snr_db ? real1(*s.snr_db) : "NA"; }

}  // namespace

std::string format_report(const RegionStatistics& image_stats, const std::optional<RegionStatistics>& roi_stats) {
  struct Row {
    const char* label;
    std::string (*cell)(const RegionStatistics&);
  };
  static const Row rows[] = {
      {"Average", [](const RegionStatistics& s) { return real1(s.mean); }},
      {"Standard deviation", [](const RegionStatistics& s) { return real1(s.stddev); }},
      {"Minimum", [](const RegionStatistics& s) { return std::to_string(s.min); }},
      {"Median", [](const RegionStatistics& s) { return std::to_string(s.median); }},
      {"Maximum", [](const RegionStatistics& s) { return std::to_string(s.max); }},
      {"Mode", [](const RegionStatistics& s) { return std::to_string(s.mode); }},
      {"SNR(db)", snr_cell},
  };
  std::string out = roi_stats ? "Statistics\tImage\tROI\n" : "Statistics\tImage\n";
  for (const Row& row : rows) {
    out += row.label;
    out += '\t';
    out += row.cell(image_stats);
    if (roi_stats) {
      out += '\t';
      out += row.cell(*roi_stats);
    }
    out += '\n';
  }
  return out;
}

std::optional<SnrKind> parse_snr_kind(std::string_view name) {
  if (name == "range") return SnrKind::Range;
  if (name == "mean") return SnrKind::Mean;
  if (name == "signal") return SnrKind::Signal;
  return std::nullopt;
}

}  // namespace histkit
