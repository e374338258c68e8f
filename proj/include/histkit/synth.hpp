#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "histkit/error.hpp"
#include "histkit/image.hpp"

namespace histkit {

enum class ShapeKind { Rectangle, Pyramid, Pillbox, Cone, Gaussian, Peak, ExpDecay };

std::optional<ShapeKind> parse_shape_kind(std::string_view name);
std::string_view shape_name(ShapeKind kind);

/// Table-of-shapes parameters. Only the fields relevant to `kind` are read:
/// rectangle/pyramid use a, b (half-widths); pillbox/cone use a (radius); gaussian uses sigma;
/// exp_decay uses a (rate); peak has none.
struct ShapeSpec {
  ShapeKind kind = ShapeKind::Gaussian;
  double a = 0.0;
  double b = 0.0;
  double sigma = 0.0;

  static ShapeSpec rectangle(double a, double b) { return {ShapeKind::Rectangle, a, b, 0.0}; }
  static ShapeSpec pyramid(double a, double b) { return {ShapeKind::Pyramid, a, b, 0.0}; }
  static ShapeSpec pillbox(double a) { return {ShapeKind::Pillbox, a, 0.0, 0.0}; }
  static ShapeSpec cone(double a) { return {ShapeKind::Cone, a, 0.0, 0.0}; }
  static ShapeSpec gaussian(double sigma) { return {ShapeKind::Gaussian, 0.0, 0.0, sigma}; }
  static ShapeSpec peak() { return {ShapeKind::Peak, 0.0, 0.0, 0.0}; }
  static ShapeSpec exp_decay(double rate) { return {ShapeKind::ExpDecay, rate, 0.0, 0.0}; }

  /// Throws InvalidParams unless every parameter used by `kind` is finite and > 0.
  void validate() const;

  bool is_radial() const noexcept {
    return kind != ShapeKind::Rectangle && kind != ShapeKind::Pyramid;
  }
};

/// n x n samples of a shape over [-extent, extent]^2. values(i, j) = f(x_i, y_j) at cell centres.
template <typename Scalar>
struct ScalarField {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  int n = 0;
  Scalar extent = Scalar(0);
  Matrix values;

  Scalar cell_width() const { return Scalar(2) * extent / Scalar(n); }
  Scalar cell_area() const { return cell_width() * cell_width(); }
  Scalar riemann_sum() const { return values.sum() * cell_area(); }
};

/// Cell-centre coordinate of sample i on an n-point grid over [-extent, extent].
/// Written as (2i+1-n) * extent/n so that centre(n-1-i) == -centre(i) exactly.
template <typename Scalar>
Scalar cell_centre(int i, int n, Scalar extent) {
  return Scalar(2 * i + 1 - n) * (extent / Scalar(n));
}

namespace detail {

// u(t) = 1 for t > 0, else 0.
template <typename Scalar>
bool step(Scalar t) {
  return t > Scalar(0);
}

template <typename Scalar>
bool inside_interval(Scalar x, Scalar half_width) {
  return step(half_width * half_width - x * x);
}

template <typename Scalar>
bool inside_disk(Scalar x, Scalar y, Scalar radius) {
  return step(radius * radius - (x * x + y * y));
}

// Cell-centred quadrature of the 1D self-convolution of an interval indicator, as a sample count.
template <typename Scalar>
std::vector<std::int64_t> interval_self_overlap(int n, Scalar extent, Scalar half_width) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const Scalar xi = cell_centre(i, n, extent);
    std::int64_t c = 0;
    for (int k = 0; k < n; ++k) {
      const Scalar xk = cell_centre(k, n, extent);
      if (inside_interval(xk, half_width) && inside_interval(xi - xk, half_width)) ++c;
    }
    counts[static_cast<std::size_t>(i)] = c;
  }
  return counts;
}

}  // namespace detail

/// Point evaluation of the closed-form kinds. Pyramid and cone have no closed form and throw
/// InvalidParams. `min_radius` clamps r for the 1/r peak.
template <typename Scalar>
Scalar evaluate_shape(const ShapeSpec& spec, Scalar x, Scalar y, Scalar min_radius = Scalar(0)) {
  using std::exp;
  using std::sqrt;
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar a = static_cast<Scalar>(spec.a);
  const Scalar b = static_cast<Scalar>(spec.b);
  const Scalar r2 = x * x + y * y;
  switch (spec.kind) {
    case ShapeKind::Rectangle:
      return (detail::inside_interval(x, a) && detail::inside_interval(y, b))
                 ? Scalar(1) / (Scalar(4) * a * b)
                 : Scalar(0);
    case ShapeKind::Pillbox:
      return detail::inside_disk(x, y, a) ? Scalar(1) / (pi * a * a) : Scalar(0);
    case ShapeKind::Gaussian: {
      const Scalar s = static_cast<Scalar>(spec.sigma);
      return exp(-r2 / (s * s)) / (Scalar(2) * pi * s * s);
    }
    case ShapeKind::Peak:
      return Scalar(1) / std::max(sqrt(r2), min_radius);
    case ShapeKind::ExpDecay:
      return exp(-a * sqrt(r2));
    case ShapeKind::Pyramid:
    case ShapeKind::Cone:
      break;
  }
  throw Error(ErrorKind::InvalidParams,
              std::string(shape_name(spec.kind)) + " has no closed form; use sample_shape");
}

/// Samples `spec` on an n x n cell-centred grid. Pyramid and cone are the discrete
/// self-convolutions of the sampled rectangle / pillbox:
///   (f*f)(x_i, y_j) = h^2 * sum_{k,l} f(x_k, y_l) f(x_i - x_k, y_j - y_l).
template <typename Scalar = double>
ScalarField<Scalar> sample_shape(const ShapeSpec& spec, int n, Scalar extent) {
  spec.validate();
  if (n < 2) throw Error(ErrorKind::InvalidParams, "grid size must be at least 2");
  if (!(extent > Scalar(0)) || !std::isfinite(static_cast<double>(extent)))
    throw Error(ErrorKind::InvalidParams, "extent must be positive");

  ScalarField<Scalar> field{n, extent, typename ScalarField<Scalar>::Matrix(n, n)};
  const Scalar h = field.cell_width();
  const Scalar a = static_cast<Scalar>(spec.a);
  const Scalar pi = std::numbers::pi_v<Scalar>;

  switch (spec.kind) {
    case ShapeKind::Pyramid: {
      const Scalar b = static_cast<Scalar>(spec.b);
      const auto cx = detail::interval_self_overlap(n, extent, a);
      const auto cy = detail::interval_self_overlap(n, extent, b);
      const Scalar height = Scalar(1) / (Scalar(4) * a * b);
      const Scalar scale = height * height * h * h;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          field.values(i, j) =
              scale * static_cast<Scalar>(cx[static_cast<std::size_t>(i)] * cy[static_cast<std::size_t>(j)]);
      break;
    }
    case ShapeKind::Cone: {
      // Support of the sampled disk; the overlap count is an integer, so the result keeps every
      // grid symmetry exactly and can be computed on one octant and mirrored.
      std::vector<std::pair<Scalar, Scalar>> support;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const Scalar xk = cell_centre(k, n, extent);
          const Scalar yl = cell_centre(l, n, extent);
          if (detail::inside_disk(xk, yl, a)) support.emplace_back(xk, yl);
        }
      const Scalar height = Scalar(1) / (pi * a * a);
      const Scalar scale = height * height * h * h;
      Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> counts =
          Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>::Constant(n, n, -1);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          int ci = std::min(i, n - 1 - i);
          int cj = std::min(j, n - 1 - j);
          if (ci > cj) std::swap(ci, cj);
          if (counts(ci, cj) < 0) {
            const Scalar xi = cell_centre(ci, n, extent);
            const Scalar yj = cell_centre(cj, n, extent);
            std::int64_t c = 0;
            for (const auto& [xk, yl] : support)
              if (detail::inside_disk(xi - xk, yj - yl, a)) ++c;
            counts(ci, cj) = c;
          }
          field.values(i, j) = scale * static_cast<Scalar>(counts(ci, cj));
        }
      }
      break;
    }
    default: {
      const Scalar min_radius = h / Scalar(2);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          field.values(i, j) = evaluate_shape(spec, cell_centre(i, n, extent),
                                              cell_centre(j, n, extent), min_radius);
      break;
    }
  }
  return field;
}

/// Affine map of [0, max] onto [0, L-1] with round-half-away-from-zero. The image row index is
/// the field's y index (pixel(row j, col i) = values(i, j)). Throws DegenerateField when no
/// value is positive.
template <typename Scalar>
GrayImage quantize_field(const ScalarField<Scalar>& field, int levels = kDefaultLevels) {
  if (levels < 2) throw Error(ErrorKind::InvalidParams, "levels must be at least 2");
  const Scalar peak = field.values.maxCoeff();
  if (!(peak > Scalar(0))) throw Error(ErrorKind::DegenerateField, "field has no positive value");
  const Scalar top = static_cast<Scalar>(levels - 1);
  PixelMatrix pixels(field.n, field.n);
  for (int i = 0; i < field.n; ++i)
    for (int j = 0; j < field.n; ++j) {
      const Scalar v = std::clamp(field.values(i, j), Scalar(0), peak);
      pixels(j, i) = static_cast<Level>(std::round(v / peak * top));
    }
  return GrayImage(std::move(pixels), levels);
}

}  // namespace histkit
