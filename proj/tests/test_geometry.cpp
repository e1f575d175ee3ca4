#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "worm3/errors.hpp"
#include "worm3/geometry.hpp"
#include "worm3/levi.hpp"

using namespace worm3;

namespace {
constexpr double kPi = std::numbers::pi;

Vec3c numeric_gradient(const Point3& p, const EtaProfile& eta, double h) {
  Vec3c g;
  const cplx z[3] = {p.z1, p.z2, p.z3};
  for (int j = 0; j < 3; ++j) {
    auto at = [&](cplx dz) {
      cplx w[3] = {z[0], z[1], z[2]};
      w[j] += dz;
      return eval_rho(Point3(w[0], w[1], w[2]), eta);
    };
    const double fx = (at({h, 0}) - at({-h, 0})) / (2 * h);
    const double fy = (at({0, h}) - at({0, -h})) / (2 * h);
    g(j) = 0.5 * cplx(fx, -fy);
  }
  return g;
}
}  // namespace

TEST(Rho, ZeroProfileValues) {
  const auto eta = make_zero_profile();
  EXPECT_DOUBLE_EQ(eval_rho(Point3(1.0, 1.0, 1.0), *eta), -1.0);
  EXPECT_DOUBLE_EQ(eval_rho(Point3(0.0, 1.0, 1.0), *eta), 0.0);
  const Point3 q(0.0, std::polar(1.3, 0.4), std::polar(0.7, -1.0));
  const Point3 on(2.0 * std::polar(1.0, q.L), q.z2, q.z3);
  EXPECT_NEAR(eval_rho(on, *eta), 0.0, 1e-14);
}

TEST(Rho, RejectsZeroFiber) {
  const auto eta = make_zero_profile();
  try {
    eval_rho(Point3(1.0, 0.0, 1.0), *eta);
    FAIL() << "expected InvalidPoint";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidPoint);
  }
  EXPECT_FALSE(contains(Point3(1.0, 0.0, 1.0), *eta));
}

TEST(Rho, Containment) {
  const auto eta = make_zero_profile();
  EXPECT_TRUE(contains(Point3(1.0, 1.0, 1.0), *eta));
  EXPECT_FALSE(contains(Point3(0.0, 1.0, 1.0), *eta));
  EXPECT_TRUE(contains(Point3(1.5, 1.0, 1.0), *eta));
  EXPECT_FALSE(contains(Point3(0.0, 1.0, 1.0), *make_char_square_profile(1.0)));
}

TEST(Rho, RotationInvariance) {
  const auto eta = make_convex_sum_profile(3.2, 4.2);
  const Point3 p(cplx(0.3, 0.8), std::polar(std::exp(1.9), 0.3), std::polar(std::exp(0.4), 2.0));
  for (double a : {0.1, 1.0, 2.5})
    for (double b : {-0.7, 3.0}) {
      const Point3 q(p.z1, std::polar(1.0, a) * p.z2, std::polar(1.0, b) * p.z3);
      EXPECT_NEAR(eval_rho(q, *eta), eval_rho(p, *eta), 1e-14);
    }
}

TEST(FiberAnnuli, ClosedForm) {
  const auto r = fiber_annuli(1.0, 0, 1);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r[0].first, std::exp(-kPi / 6), 1e-14);
  EXPECT_NEAR(r[0].second, std::exp(kPi / 6), 1e-14);
  EXPECT_NEAR(r[0].second, 1.68809, 1e-5);
  EXPECT_NEAR(r[1].first, std::exp(-kPi / 6 + kPi), 1e-12);
  EXPECT_NEAR(r[1].second, std::exp(kPi / 6 + kPi), 1e-12);
  const auto c = fiber_annuli(2 * (1 - 1e-12), 0, 0);
  EXPECT_NEAR(c[0].first, c[0].second, 1e-5);
}

TEST(FiberAnnuli, OutOfRange) {
  for (cplx z : {cplx(0, 0), cplx(2, 0), cplx(0, 2.5)}) {
    try {
      fiber_annuli(z, 0, 0);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
    }
  }
}

// Brute force: with eta = 0 and |z2| = |z3| = r, (z1, z2, z3) is in the domain
// iff r^2 lies in one of the annuli.
TEST(FiberAnnuli, MatchesMembershipScan) {
  const auto eta = make_zero_profile();
  int checked = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 4; ++b) {
      const cplx z1 = std::polar(0.1 + 0.45 * a, -2.5 + 1.6 * b);
      const auto ann = fiber_annuli(z1, -3, 3);
      for (int s = 0; s < 10000; ++s) {
        const double prod = std::exp(-9.0 + 18.0 * (s + 0.5) / 10000);  // |z2 z3|
        const double r = std::sqrt(prod);
        const Point3 p(z1, r, r);
        bool in = false, near_edge = false;
        for (const auto& [lo, hi] : ann) {
          in = in || (prod > lo && prod < hi);
          near_edge = near_edge || std::abs(prod - lo) < 1e-9 * lo || std::abs(prod - hi) < 1e-9 * hi;
        }
        if (near_edge) continue;
        ASSERT_EQ(contains(p, *eta), in) << "z1=" << z1 << " |z2z3|=" << prod;
        ++checked;
      }
    }
  EXPECT_GT(checked, 190000);
}

TEST(BoundarySample, ContractAndDeterminism) {
  const auto eta = make_convex_sum_profile(3.2, 4.2);
  const auto params = DomainParams::make(3.2, 4.2);
  const auto a = boundary_sample(*eta, params, 500, 42);
  const auto b = boundary_sample(*eta, params, 500, 42, Exec::serial);
  ASSERT_EQ(a.size(), 500u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_LE(std::abs(eval_rho(a[i], *eta)), 1e-10);
    EXPECT_FALSE(contains(a[i], *eta) && eval_rho(a[i], *eta) < -1e-10);
    EXPECT_LT(std::abs(a[i].z1), 2.0);
    EXPECT_LE(std::abs(a[i].t2()), 4.2 + 1e-12);
    EXPECT_LE(std::abs(a[i].t3()), 4.2 + 1e-12);
    EXPECT_EQ(a[i].z1, b[i].z1);
    EXPECT_EQ(a[i].z2, b[i].z2);
    EXPECT_EQ(a[i].z3, b[i].z3);
  }
}

TEST(BoundarySample, CharSquareSinglePoint) {
  const auto eta = make_char_square_profile(2.0);
  const auto pts = boundary_sample(*eta, DomainParams::make(2.0, 3.0), 1, 3);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_NEAR(std::abs(pts[0].z1 - std::polar(1.0, pts[0].L)), 1.0, 1e-12);
  EXPECT_LT(std::abs(pts[0].t2()), 2.0);
  EXPECT_LT(std::abs(pts[0].t3()), 2.0);
}

namespace {
// Above the level 1 everywhere: no (z2, z3) carries a boundary point.
class Lifted final : public EtaProfile {
 public:
  EtaJet jet(double, double) const override { return {1.5, 0, 0, 0, 0, 0}; }
  std::string name() const override { return "lifted"; }
  ProfileFlags flags() const override { return {true, true, false}; }
  bool attains_one() const override { return false; }
  double flat_mu() const override { return 0.0; }
};
}  // namespace

TEST(BoundarySample, EmptyBoundary) {
  const Lifted eta;
  try {
    boundary_sample(eta, DomainParams::make(1.0, 2.0), 2, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyBoundary);
  }
}

TEST(TangentFrame, AnnihilatesGradient) {
  const auto eta = make_convex_sum_profile(3.2, 4.2);
  const auto pts = boundary_sample(*eta, DomainParams::make(3.2, 4.2), 200, 5);
  for (const auto& p : pts) {
    const TangentFrame f = tangent_frame(p, *eta);
    const Vec3c g = rho_gradient(p, *eta);
    EXPECT_LE(std::abs(pairing(g, f.v)), 1e-9 * g.norm() * f.v.norm());
    EXPECT_LE(std::abs(pairing(g, f.w)), 1e-9 * g.norm() * f.w.norm());
    // v and w independent
    const double cross = std::abs(f.v(0) * f.w(1) - f.v(1) * f.w(0)) +
                         std::abs(f.v(1) * f.w(2) - f.v(2) * f.w(1)) +
                         std::abs(f.v(0) * f.w(2) - f.v(2) * f.w(0));
    EXPECT_GT(cross, 1e-12 * f.v.norm() * f.w.norm());
  }
}

TEST(TangentFrame, NumericGradient) {
  const auto eta = make_convex_sum_profile(3.2, 4.2);
  const auto pts = boundary_sample(*eta, DomainParams::make(3.2, 4.2), 50, 9);
  for (const auto& p : pts) {
    const Vec3c g = numeric_gradient(p, *eta, 1e-6);
    const Vec3c ga = rho_gradient(p, *eta);
    EXPECT_LE((g - ga).norm(), 1e-6 * ga.norm());
    const TangentFrame f = tangent_frame(p, *eta);
    EXPECT_LE(std::abs(pairing(g, f.v)), 1e-6 * g.norm() * f.v.norm());
    EXPECT_LE(std::abs(pairing(g, f.w)), 1e-6 * g.norm() * f.w.norm());
  }
}

TEST(TangentFrame, ExceptionalPoint) {
  const auto eta = make_zero_profile();
  const TangentFrame f = tangent_frame(Point3(0.0, 1.0, 1.0), *eta);
  EXPECT_FALSE(f.degenerate);
  EXPECT_LT(std::abs(f.v(0)), 1e-15);
  EXPECT_LT(std::abs(f.w(0)), 1e-15);
  EXPECT_NEAR(std::abs(f.v(1)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(f.w(2)), 1.0, 1e-15);
}

TEST(TangentFrame, DegenerateArcPoint) {
  const auto eta = make_convex_sum_profile(3.2, 4.2);
  // On the level set phi(t2 + t3) = 1 at t2 + t3 = 4.2, with z1 = e^{iL}.
  const double t2 = 3.0, t3 = 1.2;
  const Point3 p(std::polar(1.0, t2 + t3), std::exp(t2 / 2), std::polar(std::exp(t3 / 2), 0.7));
  ASSERT_NEAR(eval_rho(p, *eta), 0.0, 1e-10);
  const TangentFrame f = tangent_frame(p, *eta);
  EXPECT_TRUE(f.degenerate);
  EXPECT_EQ(f.v, Vec3c(1, 0, 0));
  const auto g = eta->grad(t2, t3);
  const Vec3c expect(0, p.z2 * g[1], -p.z3 * g[0]);
  EXPECT_LE((f.w - expect).norm(), 1e-14 * expect.norm());
}

TEST(TangentFrame, Errors) {
  const auto eta = make_zero_profile();
  try {
    tangent_frame(Point3(1.0, 1.0, 1.0), *eta);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotOnBoundary);
  }
  // z1 = e^{iL} with eta = 0 is interior, so use a flat profile that equals 1:
  const auto sq = make_char_square_profile(1.0);
  try {
    tangent_frame(Point3(std::polar(1.0, 3.0), std::exp(1.0), std::exp(0.5)), *sq);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateFrame);
  }
}
