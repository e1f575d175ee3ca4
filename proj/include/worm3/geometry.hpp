#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "worm3/eta_profiles.hpp"
#include "worm3/exec.hpp"

namespace worm3 {

using cplx = std::complex<double>;
using Vec3c = Eigen::Vector3cd;

/// A point of C^3 with L = log|z2 z3|^2 cached when z2 z3 != 0.
struct Point3 {
  cplx z1, z2, z3;
  double L;

  Point3() : Point3(0.0, 0.0, 0.0) {}
  Point3(cplx a, cplx b, cplx c);

  bool has_L() const { return std::isfinite(L); }
  double t2() const { return std::log(std::norm(z2)); }
  double t3() const { return std::log(std::norm(z3)); }
  /// Throws InvalidPoint when z2 z3 = 0.
  void require_L() const;
};

struct DomainParams {
  double mu = 0, mu_prime = 0;

  static DomainParams make(double mu, double mu_prime);
  double nu() const;
  double nu_prime() const;
  /// Each consumer states the lower bound on mu it relies on.
  void require_mu_above(double bound, const char* who) const;
};

struct TangentFrame {
  Vec3c v, w;
  bool degenerate = false;
};

/// Bilinear pairing sum_j a_j b_j (no conjugation).
cplx pairing(const Vec3c& a, const Vec3c& b);

double eval_rho(const Point3& p, const EtaProfile& eta);
bool contains(const Point3& p, const EtaProfile& eta);

/// (1,0)-gradient (d rho / d z_j).
Vec3c rho_gradient(const Point3& p, const EtaProfile& eta);

/// Radii (r_k^-, r_k^+) for k = k_lo..k_hi.
std::vector<std::pair<double, double>> fiber_annuli(cplx z1, int k_lo, int k_hi);

/// Window in (t2, t3) used for boundary sampling.
Box sampling_window(const EtaProfile& eta, const DomainParams& params);

std::vector<Point3> boundary_sample(const EtaProfile& eta, const DomainParams& params,
                                    std::size_t n, std::uint64_t seed,
                                    Exec exec = Exec::parallel);

TangentFrame tangent_frame(const Point3& p, const EtaProfile& eta);

}  // namespace worm3
