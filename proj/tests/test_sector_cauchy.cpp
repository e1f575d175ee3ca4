#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "worm3/cauchy.hpp"
#include "worm3/errors.hpp"
#include "worm3/sector.hpp"
#include "worm3/unwinding.hpp"

using namespace worm3;

namespace {
constexpr double kPi = std::numbers::pi;

const Point3 kP(cplx(0.9, 0.4), cplx(0.8, -0.6), cplx(1.3, 0.2));

cplx ipow(cplx z, int n) { return n >= 0 ? std::pow(z, n) : 1.0 / std::pow(z, -n); }

// Deep interior point for F_a used throughout.
constexpr double kMu = 14.0, kA = -kPi;
Point3 cauchy_point() {
  const double r = std::exp(kA / 2 + kPi / 2);
  return Point3(std::polar(1.0, 2 * kA), r, std::polar(r, kPi / 4));
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidPoint;
}
}  // namespace

TEST(Sector, CharacterOrthogonality) {
  const cplx kappa(0.3, 0.8);
  for (auto [j, k] : {std::pair{0, 0}, std::pair{2, -1}, std::pair{-3, 4}}) {
    const PointFunction F = [&](const Point3& p) {
      return eval_E(kappa, p) * ipow(p.z2, j) * ipow(p.z3, k);
    };
    const cplx f = F(kP);
    EXPECT_LE(std::abs(sector_project(F, j, k, kP) - f), 1e-12 * std::abs(f));
    for (int dj = -3; dj <= 3; ++dj)
      for (int dk = -3; dk <= 3; ++dk) {
        if (dj == 0 && dk == 0) continue;
        EXPECT_LE(std::abs(sector_project(F, j + dj, k + dk, kP)), 1e-12 * std::abs(f));
      }
  }
}

TEST(Sector, FunctionOfZ1Only) {
  const PointFunction F = [](const Point3& p) { return p.z1; };
  EXPECT_LE(std::abs(sector_project(F, 0, 0, kP) - kP.z1), 1e-12);
  EXPECT_LE(std::abs(sector_project(F, 1, 0, kP)), 1e-12);
  EXPECT_LE(std::abs(sector_project(F, 0, -2, kP)), 1e-12);
}

TEST(Sector, LaurentCoefficients) {
  const PointFunction F = [](const Point3& p) {
    return p.z1 * p.z2 * p.z2 + std::exp(p.z1) / p.z3 + 3.0 * p.z2 * p.z3 - 2.0;
  };
  const cplx z1 = kP.z1, z2 = kP.z2, z3 = kP.z3;
  const double s = std::abs(F(kP)) + 1;
  EXPECT_LE(std::abs(sector_project(F, 2, 0, kP) - z1 * z2 * z2), 1e-14 * s);
  EXPECT_LE(std::abs(sector_project(F, 0, -1, kP) - std::exp(z1) / z3), 1e-14 * s);
  EXPECT_LE(std::abs(sector_project(F, 1, 1, kP) - 3.0 * z2 * z3), 1e-14 * s);
  EXPECT_LE(std::abs(sector_project(F, 0, 0, kP) + 2.0), 1e-14 * s);
  EXPECT_LE(std::abs(sector_project(F, 1, 0, kP)), 1e-14 * s);
}

TEST(Sector, AveragingIsIdempotent) {
  const PointFunction F = [](const Point3& p) {
    return std::exp(p.z2) * p.z3 + p.z1 / p.z2;
  };
  for (int j : {0, 1, -1}) {
    const PointFunction once = theta2_average(F, j);
    const PointFunction twice = theta2_average(once, j);
    EXPECT_LE(std::abs(twice(kP) - once(kP)), 1e-12 * (std::abs(once(kP)) + 1e-300));
  }
  EXPECT_LE(std::abs(theta2_average(F, -1)(kP) - kP.z1 / kP.z2), 1e-14);
}

TEST(Annulus, Radii) {
  const AnnulusContour c{0.8};
  EXPECT_DOUBLE_EQ(c.inner(), std::exp(0.4));
  EXPECT_NEAR(c.outer() / c.inner(), std::exp(kPi), 1e-13);
  EXPECT_NEAR(c.clearance(std::exp(0.4) * 1.1), 0.1, 1e-12);
}

TEST(Cauchy, ReproducesLaurentMonomial) {
  const PointFunction f = [](const Point3& p) { return p.z1 * std::pow(p.z2, 3) / (p.z3 * p.z3); };
  const Point3 p = cauchy_point();
  EXPECT_LE(std::abs(cauchy_extend(f, kA, p, kMu) - f(p)), 1e-9 * std::abs(f(p)));
}

TEST(Cauchy, ConstantFunction) {
  const PointFunction one = [](const Point3&) { return cplx(1.0); };
  EXPECT_LE(std::abs(cauchy_extend(one, kA, cauchy_point(), kMu) - 1.0), 1e-12);
}

TEST(Cauchy, NodeDoubling) {
  const PointFunction f = [](const Point3& p) { return p.z1 * std::exp(0.3 * p.z2) / p.z3; };
  const Point3 p = cauchy_point();
  const cplx a = cauchy_extend(f, kA, p, kMu, 256), b = cauchy_extend(f, kA, p, kMu, 512);
  EXPECT_LE(std::abs(a - b), 1e-9 * std::abs(b));
  EXPECT_LE(std::abs(b - f(p)), 1e-9 * std::abs(b));
}

TEST(Cauchy, PowerOfZ1DoesNotExtend) {
  const Point3 p = cauchy_point();
  const PointFunction f = [](const Point3& q) { return eval_E(0.5, q); };
  const cplx ext = cauchy_extend(f, kA, p, kMu);
  EXPECT_GT(std::abs(ext - f(p)), 0.1 * std::abs(f(p)));
}

TEST(Cauchy, Errors) {
  const PointFunction one = [](const Point3&) { return cplx(1.0); };
  const Point3 p = cauchy_point();
  EXPECT_EQ(kind_of([&] { cauchy_extend(one, 3.0, p, kMu); }), ErrorKind::OutOfRange);
  const Point3 near_inner(p.z1, std::exp(kA / 2) * 1.01, p.z3);
  EXPECT_EQ(kind_of([&] { cauchy_extend(one, kA, near_inner, kMu); }),
            ErrorKind::TooCloseToContour);
  const Point3 far_z1(p.z1 + 2.0, p.z2, p.z3);
  EXPECT_EQ(kind_of([&] { cauchy_extend(one, kA, far_z1, kMu); }), ErrorKind::InvalidPoint);
}

TEST(Nebenhulle, ReportVerdict) {
  const auto r = nebenhulle_report(kMu, 256);
  EXPECT_TRUE(r.verdict);
  int ext = 0, non = 0;
  for (const auto& row : r.rows) {
    EXPECT_TRUE(row.pass) << row.function << " @ " << row.point;
    if (row.extendable) {
      ++ext;
      EXPECT_LE(row.rel_mismatch, 1e-9) << row.function;
    } else {
      ++non;
      EXPECT_GT(row.rel_mismatch, 1e-3) << row.function;
    }
  }
  EXPECT_GE(ext, 10);
  EXPECT_EQ(non, 3);
  EXPECT_THROW(nebenhulle_report(4 * kPi), Error);
}
