#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "histkit/synth.hpp"
#include "support/oracles.hpp"
#include "support/throws.hpp"

namespace histkit {
namespace {

using testing::thrown_kind;

using oracle::convolution_oracle;

void expect_relative_match(const Eigen::MatrixXd& got, const Eigen::MatrixXd& want, double tol) {
  ASSERT_EQ(got.rows(), want.rows());
  for (Eigen::Index i = 0; i < got.size(); ++i)
    ASSERT_LE(std::abs(got.data()[i] - want.data()[i]), tol * std::abs(want.data()[i])) << "index " << i;
}

const ShapeSpec kAllShapes[] = {
    ShapeSpec::rectangle(0.3, 0.2), ShapeSpec::pyramid(0.21, 0.13), ShapeSpec::pillbox(0.27),
    ShapeSpec::cone(0.19),          ShapeSpec::gaussian(0.1),       ShapeSpec::peak(),
    ShapeSpec::exp_decay(3.0),
};

TEST(EvaluateShape, ClosedForms) {
  EXPECT_DOUBLE_EQ(evaluate_shape(ShapeSpec::rectangle(0.5, 0.5), 0.0, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(evaluate_shape(ShapeSpec::rectangle(0.5, 0.5), 0.5, 0.0), 0.0);
  EXPECT_NEAR(evaluate_shape(ShapeSpec::gaussian(0.1), 0.0, 0.0), 15.9155, 1e-4);
  EXPECT_DOUBLE_EQ(evaluate_shape(ShapeSpec::gaussian(0.1), 0.0, 0.0), 1.0 / (2.0 * std::numbers::pi * 0.01));
  EXPECT_DOUBLE_EQ(evaluate_shape(ShapeSpec::gaussian(0.5), 0.5, 0.0), std::exp(-1.0) / (2.0 * std::numbers::pi * 0.25));
  EXPECT_DOUBLE_EQ(evaluate_shape(ShapeSpec::pillbox(1.0), 0.0, 0.0), 1.0 / std::numbers::pi);
  EXPECT_DOUBLE_EQ(evaluate_shape(ShapeSpec::peak(), 3.0, 4.0), 0.2);
  EXPECT_DOUBLE_EQ(evaluate_shape(ShapeSpec::peak(), 0.0, 0.0, 0.25), 4.0);
  EXPECT_DOUBLE_EQ(evaluate_shape(ShapeSpec::exp_decay(2.0), 0.0, 1.0), std::exp(-2.0));
  EXPECT_EQ(thrown_kind([] { evaluate_shape(ShapeSpec::cone(0.1), 0.0, 0.0); }), ErrorKind::InvalidParams);
}

TEST(SampleShape, CellCentres) {
  EXPECT_DOUBLE_EQ(cell_centre(0, 4, 1.0), -0.75);
  EXPECT_DOUBLE_EQ(cell_centre(3, 4, 1.0), 0.75);
  EXPECT_DOUBLE_EQ(cell_centre(2, 5, 1.0), 0.0);
  for (int i = 0; i < 37; ++i) EXPECT_EQ(cell_centre(36 - i, 37, 0.7), -cell_centre(i, 37, 0.7));
}

TEST(SampleShape, RiemannSumsNearOne) {
  EXPECT_NEAR(sample_shape(ShapeSpec::pillbox(0.25), 256, 0.5).riemann_sum(), 1.0, 0.02);
  EXPECT_NEAR(sample_shape(ShapeSpec::rectangle(0.25, 0.3), 256, 0.5).riemann_sum(), 1.0, 0.02);
  EXPECT_NEAR(sample_shape(ShapeSpec::pyramid(0.2, 0.15), 128, 0.5).riemann_sum(), 1.0, 0.02);
  EXPECT_NEAR(sample_shape(ShapeSpec::cone(0.2), 64, 0.5).riemann_sum(), 1.0, 0.05);
}

TEST(SampleShape, PyramidMatchesDirectConvolution) {
  const auto field = sample_shape(ShapeSpec::pyramid(0.2337, 0.1411), 24, 0.5);
  expect_relative_match(field.values, convolution_oracle(false, 0.2337, 0.1411, 24, 0.5), 1e-9);
}

TEST(SampleShape, ConeMatchesDirectConvolution) {
  const auto field = sample_shape(ShapeSpec::cone(0.2113), 21, 0.5);
  expect_relative_match(field.values, convolution_oracle(true, 0.2113, 0.0, 21, 0.5), 1e-9);
}

TEST(SampleShape, PointSymmetryIsExact) {
  for (const ShapeSpec& spec : kAllShapes)
    for (int n : {16, 17}) {
      const auto v = sample_shape(spec, n, 0.5).values;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ASSERT_EQ(v(i, j), v(n - 1 - i, n - 1 - j)) << shape_name(spec.kind);
    }
}

TEST(SampleShape, RadialKindsAreSwapSymmetric) {
  for (const ShapeSpec& spec : kAllShapes) {
    if (!spec.is_radial()) continue;
    const auto v = sample_shape(spec, 20, 0.5).values;
    EXPECT_EQ(v, v.transpose()) << shape_name(spec.kind);
  }
}

TEST(SampleShape, Deterministic) {
  for (const ShapeSpec& spec : kAllShapes) EXPECT_EQ(sample_shape(spec, 12, 0.6).values, sample_shape(spec, 12, 0.6).values);
}

TEST(SampleShape, FloatScalar) {
  const auto field = sample_shape<float>(ShapeSpec::gaussian(0.2), 16, 0.5f);
  EXPECT_NEAR(field.values(7, 7), sample_shape<double>(ShapeSpec::gaussian(0.2), 16, 0.5).values(7, 7), 1e-4);
}

TEST(SampleShape, PeakClampedAtHalfCell) {
  const auto field = sample_shape(ShapeSpec::peak(), 5, 0.5);  // centre cell sits at r = 0
  EXPECT_DOUBLE_EQ(field.values(2, 2), 1.0 / (field.cell_width() / 2.0));
  EXPECT_TRUE(field.values.allFinite());
}

TEST(SampleShape, InvalidParams) {
  EXPECT_EQ(thrown_kind([] { sample_shape(ShapeSpec::pillbox(0.0), 8, 0.5); }), ErrorKind::InvalidParams);
  EXPECT_EQ(thrown_kind([] { sample_shape(ShapeSpec::rectangle(0.1, -1.0), 8, 0.5); }), ErrorKind::InvalidParams);
  EXPECT_EQ(thrown_kind([] { sample_shape(ShapeSpec::gaussian(NAN), 8, 0.5); }), ErrorKind::InvalidParams);
  EXPECT_EQ(thrown_kind([] { sample_shape(ShapeSpec::gaussian(0.1), 1, 0.5); }), ErrorKind::InvalidParams);
  EXPECT_EQ(thrown_kind([] { sample_shape(ShapeSpec::gaussian(0.1), 8, 0.0); }), ErrorKind::InvalidParams);
  EXPECT_NO_THROW(sample_shape(ShapeSpec::peak(), 8, 0.5));
}

TEST(QuantizeField, TwoPointRange) {
  ScalarField<double> field{2, 1.0, Eigen::MatrixXd(2, 2)};
  field.values << 0.0, 3.5, 3.5, 0.0;
  const GrayImage img = quantize_field(field, 16);
  std::set<int> seen(img.data().begin(), img.data().end());
  EXPECT_EQ(seen, (std::set<int>{0, 15}));
}

TEST(QuantizeField, ConstantFieldGoesToTop) {
  ScalarField<double> field{3, 1.0, Eigen::MatrixXd::Constant(3, 3, 0.2)};
  EXPECT_EQ(quantize_field(field), GrayImage::constant(3, 3, 255));
}

TEST(QuantizeField, AllZeroIsDegenerate) {
  ScalarField<double> field{3, 1.0, Eigen::MatrixXd::Zero(3, 3)};
  EXPECT_EQ(thrown_kind([&] { quantize_field(field); }), ErrorKind::DegenerateField);
}

TEST(QuantizeField, PillboxHasTwoLevels) {
  const auto field = sample_shape(ShapeSpec::pillbox(0.25), 64, 0.5);
  const GrayImage img = quantize_field(field);
  for (int i = 0; i < 64; ++i)
    for (int j = 0; j < 64; ++j) {
      const double x = cell_centre(i, 64, 0.5);
      const double y = cell_centre(j, 64, 0.5);
      EXPECT_EQ(img(j, i), x * x + y * y < 0.0625 ? 255 : 0);
    }
}

TEST(QuantizeField, RowsFollowY) {
  const auto field = sample_shape(ShapeSpec::rectangle(0.45, 0.1), 8, 0.5);
  const GrayImage img = quantize_field(field);
  EXPECT_EQ(img(0, 3), 0);    // y far from centre
  EXPECT_EQ(img(3, 0), 255);  // x within the wide half-width
}

TEST(QuantizeField, GaussianPeaksAtCentralCells) {
  const GrayImage img = quantize_field(sample_shape(ShapeSpec::gaussian(0.1), 64, 0.5));
  const Level top = img.pixels().maxCoeff();
  EXPECT_EQ(top, 255);
  for (int r = 0; r < 64; ++r)
    for (int c = 0; c < 64; ++c) {
      const bool central = (r == 31 || r == 32) && (c == 31 || c == 32);
      if (central) EXPECT_EQ(img(r, c), top);
      else EXPECT_LT(img(r, c), top) << r << "," << c;
    }
}

TEST(ShapeNames, RoundTrip) {
  for (const ShapeSpec& spec : kAllShapes) EXPECT_EQ(parse_shape_kind(shape_name(spec.kind)), spec.kind);
  EXPECT_FALSE(parse_shape_kind("nosuch").has_value());
}

}  // namespace
}  // namespace histkit
