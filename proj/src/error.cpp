#include "histkit/error.hpp"

namespace histkit {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedHeader: return "MalformedHeader";
    case ErrorKind::TruncatedData: return "TruncatedData";
    case ErrorKind::UnsupportedMaxval: return "UnsupportedMaxval";
    case ErrorKind::PixelOutOfRange: return "PixelOutOfRange";
    case ErrorKind::InvalidImage: return "InvalidImage";
    case ErrorKind::RoiOutOfBounds: return "RoiOutOfBounds";
    case ErrorKind::EmptyRegion: return "EmptyRegion";
    case ErrorKind::DegenerateRegion: return "DegenerateRegion";
    case ErrorKind::ZeroMean: return "ZeroMean";
    case ErrorKind::InvalidNumerator: return "InvalidNumerator";
    case ErrorKind::InvalidNoise: return "InvalidNoise";
    case ErrorKind::LevelMismatch: return "LevelMismatch";
    case ErrorKind::NotBimodal: return "NotBimodal";
    case ErrorKind::ThresholdOutOfRange: return "ThresholdOutOfRange";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::DegenerateField: return "DegenerateField";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace histkit
