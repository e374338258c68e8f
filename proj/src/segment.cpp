#include "histkit/segment.hpp"

#include <algorithm>
#include <string>

#include "histkit/error.hpp"

namespace histkit {

BinaryMask::BinaryMask(int width, int height, std::vector<bool> bits)
    : width_(width), height_(height), bits_(std::move(bits)) {
  if (width < 1 || height < 1) throw Error(ErrorKind::InvalidImage, "mask dimensions must be positive");
  if (bits_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
    throw Error(ErrorKind::InvalidImage, "mask size does not match dimensions");
}

std::int64_t BinaryMask::count_set() const noexcept { return std::count(bits_.begin(), bits_.end(), true); }

GrayImage BinaryMask::to_image() const {
  PixelMatrix px(height_, width_);
  Level* dst = px.data();
  for (const bool b : bits_) *dst++ = b ? 255 : 0;
  return GrayImage(std::move(px), 256);
}

Eigen::VectorXd smooth_histogram(const Histogram& hist, int window) {
  if (window < 1 || window % 2 == 0)
    throw Error(ErrorKind::InvalidParams, "smoothing window must be odd and positive, got " + std::to_string(window));
  const int levels = hist.levels();
  const int half = window / 2;
  Eigen::VectorXd out(levels);
  for (int x = 0; x < levels; ++x) {
    const int lo = std::max(0, x - half);
    const int hi = std::min(levels - 1, x + half);
    out(x) = static_cast<double>(hist.bins().segment(lo, hi - lo + 1).sum()) / static_cast<double>(hi - lo + 1);
  }
  return out;
}

namespace {

struct Run {
  int first;
  int last;
};

// Maximal runs of equal values inside [first, last].
template <typename Pred>
std::vector<Run> runs_where(const Eigen::VectorXd& s, int first, int last, Pred keep) {
  std::vector<Run> runs;
  for (int x = first; x <= last;) {
    int end = x;
    while (end + 1 <= last && s(end + 1) == s(x)) ++end;
    if (keep(Run{x, end})) runs.push_back({x, end});
    x = end + 1;
  }
  return runs;
}

}  // namespace

ThresholdResult threshold_valley(const Histogram& hist, int smooth_window) {
  const Eigen::VectorXd s = smooth_histogram(hist, smooth_window);
  const int top = hist.levels() - 1;

  std::vector<Run> modes = runs_where(s, 0, top, [&](const Run& r) {
    const double v = s(r.first);
    return v > 0.0 && (r.first == 0 || s(r.first - 1) < v) && (r.last == top || s(r.last + 1) < v);
  });
  if (modes.size() < 2)
    throw Error(ErrorKind::NotBimodal, "smoothed histogram has " + std::to_string(modes.size()) + " mode(s)");

  std::stable_sort(modes.begin(), modes.end(), [&](const Run& a, const Run& b) { return s(a.first) > s(b.first); });
  const int p1 = std::min(modes[0].first, modes[1].first);
  const int p2 = std::max(modes[0].first, modes[1].first);

  const double floor_value = s.segment(p1 + 1, p2 - p1 - 1).minCoeff();
  const std::vector<Run> valleys =
      runs_where(s, p1 + 1, p2 - 1, [&](const Run& r) { return s(r.first) == floor_value; });
  const Run widest = *std::max_element(valleys.begin(), valleys.end(), [](const Run& a, const Run& b) {
    return a.last - a.first < b.last - b.first;  // first widest wins
  });
  return {(widest.first + widest.last) / 2, ThresholdMethod::Valley, p1, p2};
}

BinaryMask apply_threshold(const GrayImage& image, int threshold) {
  if (threshold < 0 || threshold >= image.levels())
    throw Error(ErrorKind::ThresholdOutOfRange, "threshold " + std::to_string(threshold) + " outside [0, " +
                                                    std::to_string(image.levels() - 1) + "]");
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(image.size()));
  for (const Level v : image.data()) bits.push_back(v > threshold);
  return BinaryMask(image.width(), image.height(), std::move(bits));
}

}  // namespace histkit
