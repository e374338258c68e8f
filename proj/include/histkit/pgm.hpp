#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "histkit/image.hpp"

namespace histkit {

enum class PgmEncoding { Ascii, Binary };  // P2, P5

/// Decodes a P2 or P5 graymap. Header comments ('#' to end of line) are skipped.
/// levels = maxval+1 when that is a power of two, otherwise 256 with samples kept as-is.
GrayImage load_pgm(std::string_view bytes);

/// Encodes with maxval = levels-1 and no comments. Requires levels <= 256.
/// Ascii output writes one image row per line.
std::string save_pgm(const GrayImage& image, PgmEncoding encoding = PgmEncoding::Binary);

// File helpers. Failures throw Error{Io}.
std::string read_file(const std::filesystem::path& path);

/// Writes to a sibling temporary and renames over `path`, so a failed write leaves no partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);

inline GrayImage read_pgm(const std::filesystem::path& path) { return load_pgm(read_file(path)); }

inline void write_pgm(const std::filesystem::path& path, const GrayImage& image,
                      PgmEncoding encoding = PgmEncoding::Binary) {
  write_file_atomic(path, save_pgm(image, encoding));
}

}  // namespace histkit
