#include "histkit/image.hpp"

#include <string>

#include "histkit/error.hpp"

namespace histkit {

GrayImage::GrayImage(PixelMatrix pixels, int levels) : pixels_(std::move(pixels)), levels_(levels) {
  if (pixels_.rows() < 1 || pixels_.cols() < 1)
    throw Error(ErrorKind::InvalidImage, "image dimensions must be positive");
  if (levels_ < 2 || levels_ > 65536)
    throw Error(ErrorKind::InvalidImage, "levels must be in [2, 65536], got " + std::to_string(levels_));
  const Level top = pixels_.maxCoeff();
  if (top >= levels_)
    throw Error(ErrorKind::PixelOutOfRange,
                "pixel value " + std::to_string(top) + " exceeds levels-1 = " + std::to_string(levels_ - 1));
}

GrayImage GrayImage::from_values(int width, int height, std::span<const int> values, int levels) {
  if (width < 1 || height < 1) throw Error(ErrorKind::InvalidImage, "image dimensions must be positive");
  if (values.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
    throw Error(ErrorKind::InvalidImage, "expected " + std::to_string(width * height) + " values, got " +
                                             std::to_string(values.size()));
  PixelMatrix pixels(height, width);
  Level* dst = pixels.data();
  for (const int v : values) {
    if (v < 0 || v >= levels)
      throw Error(ErrorKind::PixelOutOfRange, "pixel value " + std::to_string(v) + " outside [0, " +
                                                  std::to_string(levels - 1) + "]");
    *dst++ = static_cast<Level>(v);
  }
  return GrayImage(std::move(pixels), levels);
}

GrayImage GrayImage::constant(int width, int height, int value, int levels) {
  if (width < 1 || height < 1) throw Error(ErrorKind::InvalidImage, "image dimensions must be positive");
  if (value < 0 || value >= levels)
    throw Error(ErrorKind::PixelOutOfRange, "constant value " + std::to_string(value) + " out of range");
  return GrayImage(PixelMatrix::Constant(height, width, static_cast<Level>(value)), levels);
}

void check_region(const GrayImage& image, const RegionOfInterest& roi) {
  if (!roi.fits(image))
    throw Error(ErrorKind::RoiOutOfBounds,
                "roi (" + std::to_string(roi.x0) + "," + std::to_string(roi.y0) + "," + std::to_string(roi.w) +
                    "," + std::to_string(roi.h) + ") does not fit a " + std::to_string(image.width()) + "x" +
                    std::to_string(image.height()) + " image");
}

GrayImage extract_region(const GrayImage& image, const RegionOfInterest& roi) {
  return GrayImage(PixelMatrix(region_block(image, roi)), image.levels());
}

}  // namespace histkit
