#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "oracles.hpp"
#include "worm3/norm_integral.hpp"

using namespace worm3;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(NormIntegral, DivergentAtAndBelowMinusOne) {
  EXPECT_FALSE(norm_integral({-1.0, 0.0, -1, -1, kPi}).has_value());
  EXPECT_FALSE(norm_integral({-1.5, 2.0, 3, 0, 5.0}).has_value());
  EXPECT_TRUE(norm_integral({-0.999, 0.0, -1, -1, kPi}).has_value());
  EXPECT_FALSE((NormIntegralSpec{-1.0, 0.0, 0, 0, 1.0}.finite()));
  EXPECT_TRUE((NormIntegralSpec{-0.5, 7.0, 4, -3, 1.0}.finite()));
}

TEST(NormIntegral, HandReducedForm) {
  for (double mu : {kPi, 2.0})
    for (double a : {0.0, -0.5, 1.3}) {
      const double v = *norm_integral({a, 0.0, -1, -1, mu});
      EXPECT_NEAR(v, oracle::hand_reduced_norm(a, mu), 1e-12 * v) << a << " " << mu;
    }
}

TEST(NormIntegral, SwapSymmetry) {
  for (auto [j, k] : {std::pair{0, -1}, std::pair{2, -3}, std::pair{1, 1}}) {
    const double x = *norm_integral({0.4, 0.3, j, k, kPi});
    const double y = *norm_integral({0.4, 0.3, k, j, kPi});
    EXPECT_NEAR(x, y, 1e-12 * x);
  }
}

TEST(NormIntegral, MonotoneBlowUp) {
  double first = 0, prev = 0;
  for (int m = 1; m <= 12; ++m) {
    const double v = *norm_integral({-1 + std::ldexp(1.0, -m), 0.0, -1, -1, kPi});
    if (m == 1) first = v;
    else EXPECT_GT(v, prev) << m;
    prev = v;
  }
  EXPECT_GE(prev / first, 100.0);
}

TEST(NormIntegral, ShiftedExpIntegral) {
  EXPECT_NEAR(shifted_exp_integral(0.0, 0.7, 2.0), 4.0, 1e-15);
  const double lam = 1.3, th = -0.4, mu = 2.0;
  const double ref = oracle::integrate([&](double x) { return std::exp(lam * x); }, th / 2 - mu,
                                       th / 2 + mu);
  EXPECT_NEAR(shifted_exp_integral(lam, th, mu), ref, 1e-13 * ref);
  EXPECT_NEAR(shifted_exp_integral(1e-12, th, mu), 2 * mu, 1e-10);
}

TEST(NormIntegral, MonteCarloAgreement) {
  for (const NormIntegralSpec s :
       {NormIntegralSpec{0.0, 0.0, -1, -1, kPi}, NormIntegralSpec{0.5, 0.3, 0, -1, 2.0},
        NormIntegralSpec{-0.4, -0.2, -2, 1, 1.7}}) {
    const double v = *norm_integral(s);
    const auto mc = norm_monte_carlo(s, 400000, 99);
    EXPECT_EQ(mc.samples, 400000u);
    // Floor for the constant-integrand case where the sample spread is zero.
    const double se = std::hypot(mc.stderr_, 1e-12 * v);
    EXPECT_LE(std::abs(mc.estimate - v), 3 * se) << s.a << " " << s.b << " " << s.j;
  }
}

TEST(NormIntegral, MonteCarloDeterministic) {
  const NormIntegralSpec s{0.5, 0.3, 0, -1, 2.0};
  const auto a = norm_monte_carlo(s, 50000, 7, 16, Exec::serial);
  const auto b = norm_monte_carlo(s, 50000, 7, 16, Exec::parallel);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_EQ(a.stderr_, b.stderr_);
  const auto c = norm_monte_carlo(s, 50000, 8, 16);
  EXPECT_NE(a.estimate, c.estimate);
}

TEST(NormIntegral, ExponentClassifier) {
  EXPECT_TRUE(radial_exponent_finite(0, 0, 0.5));
  EXPECT_FALSE(radial_exponent_finite(1, 0, 0.5));
  EXPECT_FALSE(radial_exponent_finite(1, 0.5, 0.5));
  EXPECT_TRUE(radial_exponent_finite(1, 0.6, 0.5));
  // Direct check of the radial integral near zero for the borderline family.
  for (double e : {0.3, 0.05}) {
    const double nu = 0.5, m = 1, s = m - nu + e;  // finite side
    ASSERT_TRUE(radial_exponent_finite(m, s, nu));
    const double p = 2 * (nu - m + s) - 1;
    boost::math::quadrature::tanh_sinh<double> ts;
    EXPECT_NEAR(ts.integrate([&](double r) { return std::pow(r, p); }, 0.0, 1.0), 1 / (p + 1),
                1e-8 / (p + 1));
  }
}
