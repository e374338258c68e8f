#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "histkit/image.hpp"

namespace histkit {

using CountVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Raw counts h[x] over L levels; total() is the region size.
class Histogram {
 public:
  explicit Histogram(CountVector bins);

  int levels() const noexcept { return static_cast<int>(bins_.size()); }
  std::int64_t total() const noexcept { return total_; }
  const CountVector& bins() const noexcept { return bins_; }
  std::int64_t operator[](int level) const { return bins_(level); }

 private:
  CountVector bins_;
  std::int64_t total_;
};

/// p[x] = h[x] / total. Non-negative, sums to 1.
struct NormalizedHistogram {
  Eigen::VectorXd probs;
  int levels() const noexcept { return static_cast<int>(probs.size()); }
};

/// Running sum of p[x] in ascending level order.
struct CumulativeDistribution {
  Eigen::VectorXd cdf;
  int levels() const noexcept { return static_cast<int>(cdf.size()); }
};

Histogram compute_histogram(const GrayImage& image,
                            const std::optional<RegionOfInterest>& roi = std::nullopt);

/// Throws EmptyRegion when the histogram has no samples.
NormalizedHistogram normalize(const Histogram& hist);

CumulativeDistribution cumulative(const NormalizedHistogram& norm);

// CSV export: a header line then one "level,value" row per level.
std::string histogram_csv(const Histogram& hist);
std::string normalized_csv(const NormalizedHistogram& norm);
std::string cumulative_csv(const CumulativeDistribution& cdf);

}  // namespace histkit
