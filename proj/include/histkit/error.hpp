#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace histkit {

enum class ErrorKind {
  MalformedHeader,
  TruncatedData,
  UnsupportedMaxval,
  PixelOutOfRange,
  InvalidImage,
  RoiOutOfBounds,
  EmptyRegion,
  DegenerateRegion,
  ZeroMean,
  InvalidNumerator,
  InvalidNoise,
  LevelMismatch,
  NotBimodal,
  ThresholdOutOfRange,
  InvalidParams,
  DegenerateField,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// The single exception type thrown by the library; `kind()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace histkit
