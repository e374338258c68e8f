#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "histkit/histogram.hpp"
#include "histkit/image.hpp"

namespace histkit {

enum class SnrKind { Range, Mean, Signal };

/// Noise standard deviation in gray levels; must be positive.
class NoiseModel {
 public:
  explicit NoiseModel(double noise_std);
  double noise_std() const noexcept { return noise_std_; }

 private:
  double noise_std_;
};

struct RegionStatistics {
  double mean = 0.0;
  double stddev = 0.0;
  int min = 0;
  int median = 0;
  int max = 0;
  int mode = 0;
  double cv = 0.0;  // percent
  std::optional<double> snr_db;
  std::int64_t count = 0;
};

/// Pixel-sum mean over the region.
double sample_mean(const GrayImage& image, const std::optional<RegionOfInterest>& roi = std::nullopt);
/// Histogram-weighted mean, (1/total) * sum_a a*h[a].
double histogram_mean(const Histogram& hist);

/// Unbiased (total-1 denominator) standard deviation from pixel deviations around the mean.
double sample_std(const GrayImage& image, const std::optional<RegionOfInterest>& roi = std::nullopt);
/// Same quantity via sqrt((sum x^2 h[x] - total*mean^2) / (total-1)).
double histogram_std(const Histogram& hist);

/// (std / mean) * 100. Throws ZeroMean when mean <= 0.
double coefficient_of_variation(double mean, double std);

/// Smallest level with the largest count.
int mode_level(const Histogram& hist);
/// Smallest level whose cumulative count reaches total/2.
int median_level(const Histogram& hist);

/// 20*log10(numerator / noise). `numerator` is the range, mean or std depending on kind.
double snr_db(SnrKind kind, double numerator, const NoiseModel& noise);

RegionStatistics region_statistics(const GrayImage& image,
                                   const std::optional<RegionOfInterest>& roi = std::nullopt,
                                   const std::optional<NoiseModel>& noise = std::nullopt,
                                   SnrKind snr_kind = SnrKind::Range);

/// Tab-separated report with a header row and the rows Average, Standard deviation, Minimum,
/// Median, Maximum, Mode, SNR(db). Reals use one decimal; missing SNR prints "NA".
std::string format_report(const RegionStatistics& image_stats,
                          const std::optional<RegionStatistics>& roi_stats = std::nullopt);

std::optional<SnrKind> parse_snr_kind(std::string_view name);

}  // namespace histkit
