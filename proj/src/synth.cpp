#include "histkit/synth.hpp"

#include <string>

namespace histkit {

std::optional<ShapeKind> parse_shape_kind(std::string_view name) {
  if (name == "rectangle") return ShapeKind::Rectangle;
  if (name == "pyramid") return ShapeKind::Pyramid;
  if (name == "pillbox") return ShapeKind::Pillbox;
  if (name == "cone") return ShapeKind::Cone;
  if (name == "gaussian") return ShapeKind::Gaussian;
  if (name == "peak") return ShapeKind::Peak;
  if (name == "expdecay") return ShapeKind::ExpDecay;
  return std::nullopt;
}

std::string_view shape_name(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Rectangle: return "rectangle";
    case ShapeKind::Pyramid: return "pyramid";
    case ShapeKind::Pillbox: return "pillbox";
    case ShapeKind::Cone: return "cone";
    case ShapeKind::Gaussian: return "gaussian";
    case ShapeKind::Peak: return "peak";
    case ShapeKind::ExpDecay: return "expdecay";
  }
  return "unknown";
}

void ShapeSpec::validate() const {
  auto require = [this](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw Error(ErrorKind::InvalidParams,
                  std::string(shape_name(kind)) + ": parameter " + name + " must be positive, got " + std::to_string(v));
  };
  switch (kind) {
    case ShapeKind::Rectangle:
    case ShapeKind::Pyramid:
      require(a, "a");
      require(b, "b");
      break;
    case ShapeKind::Pillbox:
    case ShapeKind::Cone:
    case ShapeKind::ExpDecay:
      require(a, "a");
      break;
    case ShapeKind::Gaussian:
      require(sigma, "sigma");
      break;
    case ShapeKind::Peak:
      break;
  }
}

}  // namespace histkit
