#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "worm3/geometry.hpp"

namespace worm3 {

struct AsympConstants {
  double nu = 0, nu_prime = 0;
  cplx C = 0, Cp = 0;

  /// Requires mu > pi/2 so that nu < 1.
  static AsympConstants make(double mu);
};

struct KernelOptions {
  double rel_tol = 1e-10;   // step-halving stopping rule
  double tail_tol = 1e-12;  // analytic tail bound relative to the estimate
  double h0 = 0.5;
  int max_halvings = 24;
};

struct KernelEval {
  cplx zeta = 0, zeta_prime = 0;
  cplx value = 0;
  double quad_error = 0;
  double step = 0, cutoff = 0;
  std::optional<cplx> asymp;
  double asymp_residual = 0;
};

/// xi^3 / (2 pi^3 sinh^2(2 mu xi) sinh(pi xi)), even and positive; series at 0.
double kernel_profile(double mu, double xi);
/// The integrand xi^3 e^{i d xi} / (2 pi^3 sinh^2(2 mu xi) sinh(pi xi)) for real xi.
cplx kernel_integrand(double mu, cplx d, double xi);
/// Same integrand at complex xi (no overflow protection; for contours near 0).
cplx kernel_integrand_c(double mu, cplx d, cplx xi);

/// Kernel as a function of d = zeta - conj(zeta').
KernelEval kernel_of_d(double mu, cplx d, const KernelOptions& opt = {});
KernelEval kernel_quadrature(double mu, cplx zeta, cplx zeta_prime,
                             const KernelOptions& opt = {});

/// Leading residue term e^{-d nu}(C d + C'), as a residue at +i nu.
cplx residue_formula(double mu, cplx d);
/// Residue at +i nu by trapezoid rule on a circle of radius min(nu, 1 - nu) / 10.
cplx residue_contour(double mu, cplx d, int nodes = 256);

/// Leading asymptotic term of the kernel (the residue contribution 2 pi i Res
/// from the pole at +i nu, or its mirror for Re d < 0). Throws OnWall.
cplx kernel_asymptotic(double mu, cplx zeta, cplx zeta_prime);
cplx kernel_asymptotic_d(double mu, cplx d);

/// Power p in |K - K_asymp| ~ d^p e^{-nu' d}: one less than the order of the
/// next pole above the real axis.
int subleading_pole_power(double nu);

struct DecayFit {
  double naive_rate = 0;      // -slope of log err against d
  double corrected_rate = 0;  // same after removing the d^p prefactor
  int power = 0;
};

DecayFit fit_decay(const std::vector<double>& d, const std::vector<double>& err, int power);

/// Fixed-node trapezoid evaluator for many kernel values K(zeta, zeta0) with
/// zeta0 held fixed; nodes are chosen for |Im(zeta - conj zeta0)| <= im_max.
class FixedKernel {
 public:
  FixedKernel(double mu, cplx zeta0, double im_max, double re_max, double rel_tol = 1e-12);
  cplx operator()(cplx zeta) const;
  double step() const { return h_; }
  int nodes() const { return n_; }

 private:
  double h_;
  int n_;
  std::vector<cplx> c_;  // h g(xi_m) e^{-i conj(zeta0) xi_m}, m = -n..n
};

/// K_{-1,-1}(z, z') on D_mu via the unwinding map. Throws OutOfRange if a
/// point is not in D_mu.
KernelEval wound_kernel(double mu, const Point3& p, const Point3& q,
                        const KernelOptions& opt = {});
/// 2 pi i E_{-nu-1}(z) conj(E_{nu-1}(z')) (C (l - conj l') + C') / (z2 z2'^* z3 z3'^*).
cplx wound_kernel_asymptotic(double mu, const Point3& p, const Point3& q);

}  // namespace worm3
