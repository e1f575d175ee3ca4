#include "worm3/geometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "worm3/errors.hpp"

namespace worm3 {

namespace {

constexpr double kBoundaryTol = 1e-10;
constexpr double kDegenerateTol = 1e-12;
constexpr double kGenericMargin = 1e-3;

cplx expi(double x) { return {std::cos(x), std::sin(x)}; }

}  // namespace

Point3::Point3(cplx a, cplx b, cplx c) : z1(a), z2(b), z3(c) {
  if (b != 0.0 && c != 0.0)
    L = std::log(std::norm(b)) + std::log(std::norm(c));
  else
    L = std::numeric_limits<double>::quiet_NaN();
}

void Point3::require_L() const {
  if (!has_L()) throw Error(ErrorKind::InvalidPoint, "z2 z3 = 0");
}

DomainParams DomainParams::make(double mu, double mu_prime) {
  if (!(mu > 0) || !(mu_prime > mu))
    throw Error(ErrorKind::InvalidParams, "need 0 < mu < mu'");
  return {mu, mu_prime};
}

double DomainParams::nu() const { return std::numbers::pi / (2 * mu); }

double DomainParams::nu_prime() const { return std::min(2 * nu(), 1.0); }

void DomainParams::require_mu_above(double bound, const char* who) const {
  if (!(mu > bound))
    throw Error(ErrorKind::InvalidParams,
                std::string(who) + " requires mu > " + std::to_string(bound));
}

cplx pairing(const Vec3c& a, const Vec3c& b) { return a(0) * b(0) + a(1) * b(1) + a(2) * b(2); }

double eval_rho(const Point3& p, const EtaProfile& eta) {
  p.require_L();
  const cplx w = p.z1 * expi(-p.L);
  return std::norm(p.z1) - 2 * w.real() + eta.value(p.t2(), p.t3());
}

bool contains(const Point3& p, const EtaProfile& eta) {
  if (!p.has_L()) return false;
  return eval_rho(p, eta) < 0;
}

Vec3c rho_gradient(const Point3& p, const EtaProfile& eta) {
  p.require_L();
  const auto g = eta.grad(p.t2(), p.t3());
  const cplx e = expi(-p.L);
  const double im = 2 * (p.z1 * e).imag();
  return Vec3c(std::conj(p.z1) - e, (-im + g[0]) / p.z2, (-im + g[1]) / p.z3);
}

std::vector<std::pair<double, double>> fiber_annuli(cplx z1, int k_lo, int k_hi) {
  const double r0 = std::abs(z1);
  if (!(r0 > 0 && r0 < 2)) throw Error(ErrorKind::OutOfRange, "|z1| must lie in (0,2)");
  double th = std::arg(z1);
  if (th <= -std::numbers::pi) th = std::numbers::pi;
  const double half = 0.5 * std::acos(0.5 * r0);
  std::vector<std::pair<double, double>> out;
  for (int k = k_lo; k <= k_hi; ++k) {
    const double base = 0.5 * th + std::numbers::pi * k;
    out.emplace_back(std::exp(base - half), std::exp(base + half));
  }
  return out;
}

Box sampling_window(const EtaProfile& eta, const DomainParams& params) {
  const Box outer{-params.mu_prime, params.mu_prime, -params.mu_prime, params.mu_prime};
  if (auto b = eta.sublevel_box()) return b->intersect(outer);
  return outer;
}

namespace {

Point3 make_boundary_point(double t2, double t3, double eta_val, double ph1, double ph2,
                           double ph3, bool on_arc) {
  const cplx z2 = std::exp(0.5 * t2) * expi(ph2);
  const cplx z3 = std::exp(0.5 * t3) * expi(ph3);
  const double L = std::log(std::norm(z2)) + std::log(std::norm(z3));
  cplx z1 = expi(L);
  if (!on_arc) z1 += std::sqrt(std::max(0.0, 1 - eta_val)) * expi(ph1);
  return Point3(z1, z2, z3);
}

// Distance from the origin to the box boundary along direction theta.
double ray_exit(const Box& b, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  double r = std::numeric_limits<double>::infinity();
  if (c > 0) r = std::min(r, b.t2_hi / c);
  if (c < 0) r = std::min(r, b.t2_lo / c);
  if (s > 0) r = std::min(r, b.t3_hi / s);
  if (s < 0) r = std::min(r, b.t3_lo / s);
  return r;
}

}  // namespace

std::vector<Point3> boundary_sample(const EtaProfile& eta, const DomainParams& params,
                                    std::size_t n, std::uint64_t seed, Exec exec) {
  const Box win = sampling_window(eta, params);
  if (!(win.t2_hi > win.t2_lo) || !(win.t3_hi > win.t3_lo))
    throw Error(ErrorKind::EmptyBoundary, "empty sampling window");
  const bool arcs = eta.attains_one() && eta.flags().smooth && win.contains(0.0, 0.0);
  const std::size_t n_arc = arcs ? n / 5 : 0;
  const std::size_t n_gen = n - n_arc;
  constexpr int kMaxTries = 100000;

  std::vector<Point3> out(n);
  std::vector<int> failed(n, 0);
  const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (long long ii = 0; ii < nn; ++ii) {
    const std::size_t i = static_cast<std::size_t>(ii);
    auto rng = substream(seed, i);
    bool done = false;
    for (int tries = 0; tries < kMaxTries && !done; ++tries) {
      if (i < n_gen) {
        const double t2 = uniform(rng, win.t2_lo, win.t2_hi);
        const double t3 = uniform(rng, win.t3_lo, win.t3_hi);
        const double ph1 = uniform(rng, 0, 2 * std::numbers::pi);
        const double ph2 = uniform(rng, 0, 2 * std::numbers::pi);
        const double ph3 = uniform(rng, 0, 2 * std::numbers::pi);
        if (!eta.smooth_at(t2, t3)) continue;
        const double e = eta.value(t2, t3);
        if (!(e < 1 - kGenericMargin)) continue;
        out[i] = make_boundary_point(t2, t3, e, ph1, ph2, ph3, false);
        done = true;
      } else {
        const double theta = uniform(rng, 0, 2 * std::numbers::pi);
        const bool exact = (i % 4) == 0;
        const double level = exact ? 1.0 : 1 - kGenericMargin * uniform01(rng);
        const double ph1 = uniform(rng, 0, 2 * std::numbers::pi);
        const double ph2 = uniform(rng, 0, 2 * std::numbers::pi);
        const double ph3 = uniform(rng, 0, 2 * std::numbers::pi);
        const auto r = find_level_on_ray(eta, theta, level, ray_exit(win, theta));
        if (!r) continue;
        const double t2 = *r * std::cos(theta), t3 = *r * std::sin(theta);
        out[i] = make_boundary_point(t2, t3, eta.value(t2, t3), ph1, ph2, ph3, exact);
        done = true;
      }
    }
    if (!done) failed[i] = 1;
  }
  for (int f : failed)
    if (f) throw Error(ErrorKind::EmptyBoundary, "no admissible (z2, z3) found");
  return out;
}

TangentFrame tangent_frame(const Point3& p, const EtaProfile& eta) {
  p.require_L();
  const double t2 = p.t2(), t3 = p.t3();
  if (!eta.smooth_at(t2, t3)) throw Error(ErrorKind::NonSmoothPoint, "profile not smooth here");
  if (std::abs(eval_rho(p, eta)) > kBoundaryTol)
    throw Error(ErrorKind::NotOnBoundary, "|rho| exceeds boundary tolerance");
  const auto g = eta.grad(t2, t3);
  const cplx eL = expi(p.L);
  TangentFrame f;
  if (std::abs(p.z1 - eL) <= kDegenerateTol) {
    if (g[0] == 0 && g[1] == 0)
      throw Error(ErrorKind::DegenerateFrame, "eta gradient vanishes on z1 = e^{iL}");
    f.v = Vec3c(1, 0, 0);
    f.w = Vec3c(0, p.z2 * g[1], -p.z3 * g[0]);
    f.degenerate = true;
    return f;
  }
  const cplx e = std::conj(eL);
  const double im = 2 * (p.z1 * e).imag();
  const cplx b = std::conj(p.z1) - e;
  f.v = Vec3c(im - g[0], p.z2 * b, 0);
  f.w = Vec3c(im - g[1], 0, p.z3 * b);
  return f;
}

}  // namespace worm3
