#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "worm3/exec.hpp"
#include "worm3/strip_weight.hpp"

namespace worm3 {

/// Piecewise-linear hat of height |coeff| supported on [center - w, center + w].
struct Hat {
  double center = 0, half_width = 1;
  std::complex<double> coeff = 1.0;
};

/// A compactly supported spectral profile phi (sum of hats) and its inverse
/// transform F(zeta) = (1/2pi) int phi(xi) e^{i zeta xi} dxi.
struct SpectralProfile {
  std::vector<Hat> hats;

  std::complex<double> phi(double xi) const;
  std::complex<double> F(std::complex<double> zeta) const;
  /// Sorted breakpoints of phi.
  std::vector<double> breakpoints() const;
  /// int |phi|^2 weight(xi) dxi, Gauss-Legendre on each linear piece.
  double weighted_l2(const std::function<double(double)>& weight) const;

  SpectralProfile scaled(std::complex<double> s) const;
};

/// (1/2pi) int |phi|^2 alpha~ dxi
double spectral_norm2(const SpectralProfile& f, const StripWeight& w);

/// int_{-X}^{X} |F(x + iy)|^2 dx by panels
double line_l2(const SpectralProfile& f, double y, double X);
/// (1/2pi) int |phi|^2 e^{-2 y xi} dxi
double line_l2_parseval(const SpectralProfile& f, double y);

struct StripQuadOptions {
  double x_panel = 1.0;
  int y_panels_per_piece = 4;
  double tail_rel = 1e-6;  // target for the truncated x-tail
};

/// Spatial norm int_{S_beta} |F|^2 omega dA with x truncated where the
/// x^-4 tail bound drops below tail_rel of the spectral norm.
double spatial_norm2(const SpectralProfile& f, const StripWeight& w,
                     const StripQuadOptions& opt = {}, Exec exec = Exec::parallel);

/// <F, K(., zeta)> in A^2(S_beta, omega_{-1,-1}) by 2-D quadrature.
std::complex<double> reproduce(const SpectralProfile& f, double mu, std::complex<double> zeta,
                               double X = 60.0, const StripQuadOptions& opt = {},
                               Exec exec = Exec::parallel);

struct RestrictionRow {
  double spectral_mu = 0, spectral_mu_prime = 0, spatial_mu = 0;
  double rel_diff = 0;
  double parseval_max_rel = 0;  // worst line-L2 vs Parseval mismatch
  double doubled_ratio = 0;     // norm(2 phi) / norm(phi)
  bool pass = false;
};

/// For each profile, confirms finite norms for both mu and mu' weights and
/// spatial-vs-spectral agreement on S_beta.
std::vector<RestrictionRow> restriction_density_check(double mu, double mu_prime,
                                                      const std::vector<SpectralProfile>& fs,
                                                      Exec exec = Exec::parallel);

}  // namespace worm3
