#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <tuple>

#include "oracles.hpp"
#include "worm3/strip_weight.hpp"

using namespace worm3;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(StripWeight, SinhRatio) {
  EXPECT_EQ(sinh_ratio(2.0, 0.0), 2.0);
  EXPECT_NEAR(sinh_ratio(2.0, 1e-9), 2.0, 1e-15);
  EXPECT_NEAR(sinh_ratio(1.5, 0.7), std::sinh(1.05) / 0.7, 1e-15);
  EXPECT_NEAR(sinh_ratio(1.5, -0.7), sinh_ratio(1.5, 0.7), 1e-15);
}

TEST(StripWeight, MassAndSupport) {
  for (double mu : {kPi / 2 + 0.3, kPi, 5.0}) {
    const StripWeight w{mu, -1, -1};
    EXPECT_NEAR(w.mass(), 4 * std::pow(kPi, 3) * mu * mu, 1e-12 * w.mass());
    EXPECT_DOUBLE_EQ(w.beta(), 2 * mu + kPi / 2);
    EXPECT_EQ(w.spatial(w.beta()), 0.0);
    EXPECT_EQ(w.spatial(-w.beta() - 1), 0.0);
    EXPECT_GT(w.spatial(0.0), 0.0);
  }
}

TEST(StripWeight, SpatialMatchesConvolutionQuadrature) {
  for (auto [j, k] : {std::pair{-1, -1}, std::pair{0, -1}, std::pair{1, 2}}) {
    const double mu = kPi;
    const StripWeight w{mu, j, k};
    for (int i = 0; i < 50; ++i) {
      const double y = -w.beta() + (i + 0.5) * 2 * w.beta() / 50;
      const double ref = oracle::convolution_weight(mu, j, k, y);
      EXPECT_NEAR(w.spatial(y), ref, 1e-8 * std::abs(ref)) << j << "," << k << " y=" << y;
    }
  }
}

TEST(StripWeight, SpectralClosedForm) {
  const StripWeight w{kPi, -1, -1};
  const double expect = kPi * kPi * std::pow(std::sinh(2 * kPi), 2) * std::sinh(kPi);
  EXPECT_NEAR(w.spectral(1.0), expect, 1e-13 * expect);
  EXPECT_NEAR(w.spectral(1e-6), w.mass(), 1e-9 * w.mass());
}

TEST(StripWeight, SpectralMatchesTransformOfSpatial) {
  for (auto [j, k, tol] : {std::tuple{-1, -1, 1e-8}, std::tuple{0, -1, 1e-7}}) {
    const StripWeight w{kPi, j, k};
    for (double xi : {-0.8, -0.2, 0.0, 0.3, 1.0}) {
      const double ref =
          oracle::laplace_transform([&](double y) { return w.spatial(y); }, w.mu, xi);
      EXPECT_NEAR(w.spectral(xi), ref, tol * ref) << j << "," << k << " xi=" << xi;
    }
  }
}

TEST(StripWeight, GeneralProductForm) {
  const StripWeight w{3.5, 0, -1};
  for (double xi : {-1.0, 0.25, 0.5, 2.0}) {
    const double expect = kPi * kPi * sinh_ratio(7.0, xi - 0.5) * sinh_ratio(7.0, xi) *
                          sinh_ratio(kPi, xi);
    EXPECT_NEAR(w.spectral(xi), expect, 1e-13 * expect);
  }
}
