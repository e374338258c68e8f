#include "histkit/pgm.hpp"

#include <bit>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>
#include <system_error>

#include "histkit/error.hpp"

namespace histkit {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; }

class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}

  bool at_end() const { return pos_ >= bytes_.size(); }
  std::size_t pos() const { return pos_; }
  std::string_view rest() const { return bytes_.substr(pos_); }

  // Skips whitespace and '#' comments running to end of line.
  void skip_separators() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (is_space(c)) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else {
        break;
      }
    }
  }

  // Reads an unsigned decimal token; nullopt if none is present at the cursor.
  std::optional<std::uint64_t> number() {
    skip_separators();
    std::uint64_t value = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(bytes_[pos_] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
      ++pos_;
      ++digits;
    }
    if (digits == 0) return std::nullopt;
    if (pos_ < bytes_.size() && !is_space(bytes_[pos_]) && bytes_[pos_] != '#') return std::nullopt;
    return value;
  }

  void advance(std::size_t n) { pos_ += n; }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

std::uint64_t header_number(Reader& reader, const char* what) {
  const auto value = reader.number();
  if (!value) throw Error(ErrorKind::MalformedHeader, std::string("missing or invalid ") + what);
  return *value;
}

}  // namespace

GrayImage load_pgm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5'))
    throw Error(ErrorKind::MalformedHeader, "expected magic P2 or P5");
  const bool binary = bytes[1] == '5';
  if (bytes.size() > 2 && !is_space(bytes[2]) && bytes[2] != '#')
    throw Error(ErrorKind::MalformedHeader, "garbage after magic number");

  Reader reader(bytes);
  reader.advance(2);
  const std::uint64_t width = header_number(reader, "width");
  const std::uint64_t height = header_number(reader, "height");
  const std::uint64_t maxval = header_number(reader, "maxval");
  if (width == 0 || height == 0) throw Error(ErrorKind::MalformedHeader, "zero image dimension");
  if (width > (1u << 20) || height > (1u << 20) || width * height > (std::uint64_t{1} << 31))
    throw Error(ErrorKind::MalformedHeader, "image dimensions too large");
  if (maxval == 0) throw Error(ErrorKind::MalformedHeader, "maxval must be positive");
  if (maxval > 255) throw Error(ErrorKind::UnsupportedMaxval, "maxval " + std::to_string(maxval) + " > 255");

  const int levels = std::has_single_bit(maxval + 1) ? static_cast<int>(maxval + 1) : kDefaultLevels;
  const auto count = static_cast<std::size_t>(width * height);
  PixelMatrix pixels(static_cast<Eigen::Index>(height), static_cast<Eigen::Index>(width));
  Level* dst = pixels.data();

  if (binary) {
    // Exactly one whitespace byte separates maxval from the raster.
    if (reader.at_end() || !is_space(reader.rest().front()))
      throw Error(ErrorKind::TruncatedData, "no raster data");
    reader.advance(1);
    const std::string_view raster = reader.rest();
    if (raster.size() < count)
      throw Error(ErrorKind::TruncatedData,
                  "expected " + std::to_string(count) + " samples, got " + std::to_string(raster.size()));
    for (std::size_t i = 0; i < count; ++i) {
      const auto v = static_cast<unsigned char>(raster[i]);
      if (v > maxval) throw Error(ErrorKind::PixelOutOfRange, "sample " + std::to_string(v) + " > maxval");
      dst[i] = v;
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      reader.skip_separators();
      if (reader.at_end())
        throw Error(ErrorKind::TruncatedData,
                    "expected " + std::to_string(count) + " samples, got " + std::to_string(i));
      const auto v = reader.number();
      if (!v) throw Error(ErrorKind::MalformedHeader, "invalid sample token at offset " + std::to_string(reader.pos()));
      if (*v > maxval) throw Error(ErrorKind::PixelOutOfRange, "sample " + std::to_string(*v) + " > maxval");
      dst[i] = static_cast<Level>(*v);
    }
  }
  return GrayImage(std::move(pixels), levels);
}

std::string save_pgm(const GrayImage& image, PgmEncoding encoding) {
  if (image.levels() > 256)
    throw Error(ErrorKind::InvalidParams, "PGM output supports at most 256 levels");
  const bool binary = encoding == PgmEncoding::Binary;
  std::string out = binary ? "P5\n" : "P2\n";
  out += std::to_string(image.width()) + ' ' + std::to_string(image.height()) + '\n';
  out += std::to_string(image.levels() - 1) + '\n';

  const auto& px = image.pixels();
  if (binary) {
    out.reserve(out.size() + static_cast<std::size_t>(image.size()));
    for (const Level v : image.data()) out.push_back(static_cast<char>(v));
  } else {
    for (Eigen::Index r = 0; r < px.rows(); ++r) {
      for (Eigen::Index c = 0; c < px.cols(); ++c) {
        if (c) out.push_back(' ');
        out += std::to_string(px(r, c));
      }
      out.push_back('\n');
    }
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorKind::Io, "read failed for " + path.string());
  return bytes;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view bytes) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot open " + tmp.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error(ErrorKind::Io, "write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw Error(ErrorKind::Io, "cannot rename onto " + path.string() + ": " + ec.message());
  }
}

}  // namespace histkit
