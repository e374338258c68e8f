#include "histkit/histogram.hpp"

#include <cstdio>

#include "histkit/error.hpp"

namespace histkit {

Histogram::Histogram(CountVector bins) : bins_(std::move(bins)), total_(0) {
  if (bins_.size() < 2) throw Error(ErrorKind::InvalidParams, "histogram needs at least 2 levels");
  if ((bins_.array() < 0).any()) throw Error(ErrorKind::InvalidParams, "negative histogram count");
  total_ = bins_.sum();
}

Histogram compute_histogram(const GrayImage& image, const std::optional<RegionOfInterest>& roi) {
  CountVector bins = CountVector::Zero(image.levels());
  if (!roi) {
    for (const Level v : image.data()) ++bins(v);
  } else {
    const auto block = region_block(image, *roi);
    for (Eigen::Index r = 0; r < block.rows(); ++r)
      for (Eigen::Index c = 0; c < block.cols(); ++c) ++bins(block(r, c));
  }
  return Histogram(std::move(bins));
}

NormalizedHistogram normalize(const Histogram& hist) {
  if (hist.total() <= 0) throw Error(ErrorKind::EmptyRegion, "histogram has no samples");
  return {hist.bins().cast<double>() / static_cast<double>(hist.total())};
}

CumulativeDistribution cumulative(const NormalizedHistogram& norm) {
  Eigen::VectorXd cdf(norm.levels());
  double running = 0.0;
  for (Eigen::Index x = 0; x < cdf.size(); ++x) {
    running += norm.probs(x);
    cdf(x) = running;
  }
  return {std::move(cdf)};
}

namespace {

std::string real_csv(const Eigen::VectorXd& values, const char* header) {
  std::string out = header;
  char row[64];
  for (Eigen::Index x = 0; x < values.size(); ++x) {
    std::snprintf(row, sizeof(row), "%td,%.9f\n", x, values(x));
    out += row;
  }
  return out;
}

}  // namespace

std::string histogram_csv(const Histogram& hist) {
  std::string out = "level,count\n";
  for (int x = 0; x < hist.levels(); ++x) out += std::to_string(x) + ',' + std::to_string(hist[x]) + '\n';
  return out;
}

std::string normalized_csv(const NormalizedHistogram& norm) {
  return real_csv(norm.probs, "level,probability\n");
}

std::string cumulative_csv(const CumulativeDistribution& cdf) { return real_csv(cdf.cdf, "level,cdf\n"); }

}  // namespace histkit
