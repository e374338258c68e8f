#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "histkit/error.hpp"
#include "histkit/pgm.hpp"
#include "support/fixtures.hpp"
#include "support/throws.hpp"

namespace histkit {
namespace {

using testing::image_of;
using testing::pixel_values;
using testing::thrown_kind;

TEST(LoadPgm, AsciiTwoByTwo) {
  const GrayImage img = load_pgm("P2\n2 2\n255\n0 255 128 64");
  EXPECT_EQ(img, image_of(2, 2, {0, 255, 128, 64}));
}

TEST(LoadPgm, BinarySinglePixel) {
  const std::string bytes = std::string("P5\n1 1\n255\n") + '\0';
  EXPECT_EQ(load_pgm(bytes), image_of(1, 1, {0}));
}

TEST(LoadPgm, SkipsHeaderComments) {
  const GrayImage img = load_pgm("P2\n# made by hand\n2 # width\n1\n# maxval next\n15\n3 15\n");
  EXPECT_EQ(img, image_of(2, 1, {3, 15}, 16));
}

TEST(LoadPgm, BinaryRasterMayStartWithHashByte) {
  const std::string bytes = std::string("P5 2 1 255\n") + '#' + '\n';
  EXPECT_EQ(pixel_values(load_pgm(bytes)), (std::vector<int>{'#', '\n'}));
}

TEST(LoadPgm, LevelsFromMaxval) {
  EXPECT_EQ(load_pgm("P2 1 1 1 1").levels(), 2);
  EXPECT_EQ(load_pgm("P2 1 1 15 9").levels(), 16);
  // Not a power of two: keep samples, use 256 levels.
  const GrayImage odd = load_pgm("P2 1 2 200 200 7");
  EXPECT_EQ(odd.levels(), 256);
  EXPECT_EQ(pixel_values(odd), (std::vector<int>{200, 7}));
}

TEST(LoadPgm, MissingMaxvalIsMalformed) {
  EXPECT_EQ(thrown_kind([] { load_pgm("P2\n2 2\n"); }), ErrorKind::MalformedHeader);
  EXPECT_EQ(thrown_kind([] { load_pgm("P5\n2 2"); }), ErrorKind::MalformedHeader);
}

TEST(LoadPgm, HeaderErrors) {
  EXPECT_EQ(thrown_kind([] { load_pgm("P3\n1 1\n255\n0 0 0"); }), ErrorKind::MalformedHeader);
  EXPECT_EQ(thrown_kind([] { load_pgm(""); }), ErrorKind::MalformedHeader);
  EXPECT_EQ(thrown_kind([] { load_pgm("P2\n0 1\n255\n"); }), ErrorKind::MalformedHeader);
  EXPECT_EQ(thrown_kind([] { load_pgm("P2\n1 1\n0\n0"); }), ErrorKind::MalformedHeader);
  EXPECT_EQ(thrown_kind([] { load_pgm("P2\nx 1\n255\n0"); }), ErrorKind::MalformedHeader);
  EXPECT_EQ(thrown_kind([] { load_pgm("P2\n1 1\n65535\n0"); }), ErrorKind::UnsupportedMaxval);
  EXPECT_EQ(thrown_kind([] { load_pgm("P2\n1 1\n256\n0"); }), ErrorKind::UnsupportedMaxval);
}

TEST(LoadPgm, TruncatedRaster) {
  EXPECT_EQ(thrown_kind([] { load_pgm("P2\n2 2\n255\n1 2 3"); }), ErrorKind::TruncatedData);
  EXPECT_EQ(thrown_kind([] { load_pgm("P5\n2 2\n255\nabc"); }), ErrorKind::TruncatedData);
  EXPECT_EQ(thrown_kind([] { load_pgm("P5\n2 2\n255"); }), ErrorKind::TruncatedData);
}

TEST(LoadPgm, SampleAboveMaxval) {
  EXPECT_EQ(thrown_kind([] { load_pgm("P2\n1 1\n15\n16"); }), ErrorKind::PixelOutOfRange);
}

TEST(SavePgm, AsciiSinglePixel) { EXPECT_EQ(save_pgm(image_of(1, 1, {7}), PgmEncoding::Ascii), "P2\n1 1\n255\n7\n"); }

TEST(SavePgm, AsciiRowsPerLine) {
  EXPECT_EQ(save_pgm(image_of(2, 2, {0, 255, 128, 64}), PgmEncoding::Ascii), "P2\n2 2\n255\n0 255\n128 64\n");
}

TEST(SavePgm, BinaryLayout) {
  const std::string bytes = save_pgm(image_of(3, 1, {0, 1, 15}, 16), PgmEncoding::Binary);
  EXPECT_EQ(bytes, std::string("P5\n3 1\n15\n") + '\x00' + '\x01' + '\x0f');
}

TEST(SavePgm, NeverEmitsComments) {
  std::mt19937_64 rng(5);
  const std::string text = save_pgm(testing::random_image(rng, 8, 8, 256), PgmEncoding::Ascii);
  EXPECT_EQ(text.find('#'), std::string::npos);
}

TEST(SavePgm, RoundTripFixture) {
  const GrayImage img = image_of(2, 2, {0, 255, 128, 64});
  EXPECT_EQ(load_pgm(save_pgm(img, PgmEncoding::Ascii)), img);
  EXPECT_EQ(load_pgm(save_pgm(img, PgmEncoding::Binary)), img);
}

TEST(SavePgm, RandomRoundTripBothEncodings) {
  std::mt19937_64 rng(11);
  for (int levels : {2, 4, 16, 128, 256}) {
    for (int trial = 0; trial < 8; ++trial) {
      const GrayImage img = trial == 0 ? testing::random_image(rng, 64, 64, levels)
                                       : testing::random_image(rng, 40, {levels});
      EXPECT_EQ(load_pgm(save_pgm(img, PgmEncoding::Ascii)), img);
      EXPECT_EQ(load_pgm(save_pgm(img, PgmEncoding::Binary)), img);
    }
  }
}

TEST(SavePgm, RejectsMoreThan256Levels) {
  EXPECT_EQ(thrown_kind([] { save_pgm(image_of(1, 1, {300}, 512)); }), ErrorKind::InvalidParams);
}

TEST(PgmFiles, AtomicWriteAndRead) {
  const auto dir = std::filesystem::temp_directory_path() / "histkit_pgm_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "img.pgm";
  const GrayImage img = image_of(2, 1, {9, 3}, 16);
  write_pgm(path, img);
  EXPECT_EQ(read_pgm(path), img);
  EXPECT_FALSE(std::filesystem::exists(dir / "img.pgm.tmp"));
  EXPECT_EQ(thrown_kind([&] { read_pgm(dir / "missing.pgm"); }), ErrorKind::Io);
  EXPECT_EQ(thrown_kind([&] { write_pgm(dir / "no_such_dir" / "x.pgm", img); }), ErrorKind::Io);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace histkit
