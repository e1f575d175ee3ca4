#pragma once

// Independent reference computations used by the unit tests and the
// acceptance binary. Nothing here calls the library's own quadratures.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include <Eigen/Core>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "worm3/eta_profiles.hpp"
#include "worm3/exec.hpp"
#include "worm3/geometry.hpp"
#include "worm3/paley_wiener.hpp"

namespace oracle {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

template <class F>
double integrate(F f, double a, double b, double tol = 1e-13) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, tol);
}

/// Complex Hessian d^2 f / dz_j dzbar_k of a real function on C^3 by central
/// differences in the six real coordinates.
// Central differences in the six real coordinates. The step along z_j is
// h * max(|z_j|, 1e-3), followed by one Richardson step.
inline Eigen::Matrix3cd complex_hessian_once(const std::function<double(const Eigen::Vector3cd&)>& f,
                                             const Eigen::Vector3cd& z, double h) {
  double step[6];
  for (int u = 0; u < 6; ++u) step[u] = h * std::max(std::abs(z(u / 2)), 1e-3);
  auto shifted = [&](int u, double su, int v, double sv) {
    Eigen::Vector3cd w = z;
    w(u / 2) += (u % 2 ? cplx(0, su) : cplx(su, 0));
    w(v / 2) += (v % 2 ? cplx(0, sv) : cplx(sv, 0));
    return f(w);
  };
  double D[6][6];
  const double f0 = f(z);
  for (int u = 0; u < 6; ++u)
    for (int v = u; v < 6; ++v) {
      const double hu = step[u], hv = step[v];
      if (u == v)
        D[u][u] = (shifted(u, hu, u, 0) - 2 * f0 + shifted(u, -hu, u, 0)) / (hu * hu);
      else
        D[u][v] = D[v][u] = (shifted(u, hu, v, hv) - shifted(u, hu, v, -hv) -
                             shifted(u, -hu, v, hv) + shifted(u, -hu, v, -hv)) /
                            (4 * hu * hv);
    }
  Eigen::Matrix3cd H;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      const int xj = 2 * j, yj = 2 * j + 1, xk = 2 * k, yk = 2 * k + 1;
      H(j, k) = 0.25 * cplx(D[xj][xk] + D[yj][yk], D[xj][yk] - D[yj][xk]);
    }
  return H;
}

inline Eigen::Matrix3cd complex_hessian(const std::function<double(const Eigen::Vector3cd&)>& f,
                                        const Eigen::Vector3cd& z, double h) {
  return (4.0 * complex_hessian_once(f, z, h / 2) - complex_hessian_once(f, z, h)) / 3.0;
}

/// Local defining function e^{A} rho with A = 2 arg(z2 z3) continued from the
/// base point w (so the branch is fixed near w).
inline double rho_tilde(const Eigen::Vector3cd& z, const Eigen::Vector3cd& w,
                        const worm3::EtaProfile& eta) {
  const cplx base = w(1) * w(2);
  const double A = 2 * (std::arg(z(1) * z(2) / base) + std::arg(base));
  const double L = std::log(std::norm(z(1))) + std::log(std::norm(z(2)));
  const double rho = std::norm(z(0)) - 2 * std::real(z(0) * std::polar(1.0, -L)) +
                     eta.value(std::log(std::norm(z(1))), std::log(std::norm(z(2))));
  return std::exp(A) * rho;
}

inline double weight_factor(const Eigen::Vector3cd& w) {
  return std::exp(2 * std::arg(w(1) * w(2)));
}

/// Central-difference jet of a profile.
inline worm3::EtaJet fd_jet_once(const worm3::EtaProfile& eta, double t2, double t3, double h) {
  auto f = [&](double a, double b) { return eta.value(a, b); };
  worm3::EtaJet j;
  j.value = f(t2, t3);
  j.d2 = (f(t2 + h, t3) - f(t2 - h, t3)) / (2 * h);
  j.d3 = (f(t2, t3 + h) - f(t2, t3 - h)) / (2 * h);
  j.d22 = (f(t2 + h, t3) - 2 * j.value + f(t2 - h, t3)) / (h * h);
  j.d33 = (f(t2, t3 + h) - 2 * j.value + f(t2, t3 - h)) / (h * h);
  j.d23 = (f(t2 + h, t3 + h) - f(t2 + h, t3 - h) - f(t2 - h, t3 + h) + f(t2 - h, t3 - h)) /
          (4 * h * h);
  return j;
}

inline worm3::EtaJet fd_jet(const worm3::EtaProfile& eta, double t2, double t3, double h) {
  const auto a = fd_jet_once(eta, t2, t3, h / 2), b = fd_jet_once(eta, t2, t3, h);
  auto r = [](double x, double y) { return (4 * x - y) / 3; };
  return {a.value, r(a.d2, b.d2), r(a.d3, b.d3), r(a.d22, b.d22), r(a.d23, b.d23), r(a.d33, b.d33)};
}

/// pi^2 (e^{(j+1).} 1_{|.|<mu}) * (e^{(k+1).} 1_{|.|<mu}) * 1_{|.|<pi/2} at y, as a
/// nested adaptive quadrature over the two convolution variables.
inline double convolution_weight(double mu, int j, int k, double y) {
  auto inner = [&](double a) {
    const double lo = std::max(-mu, y - a - kPi / 2), hi = std::min(mu, y - a + kPi / 2);
    if (!(hi > lo)) return 0.0;
    return integrate([&](double b) { return std::exp((k + 1) * b); }, lo, hi);
  };
  std::vector<double> cuts{-mu, mu};
  for (double c : {y - kPi / 2 - mu, y - kPi / 2 + mu, y + kPi / 2 - mu, y + kPi / 2 + mu})
    if (c > -mu && c < mu) cuts.push_back(c);
  std::sort(cuts.begin(), cuts.end());
  double acc = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    acc += integrate([&](double a) { return std::exp((j + 1) * a) * inner(a); }, cuts[i],
                     cuts[i + 1]);
  return kPi * kPi * acc;
}

/// int omega(y) e^{-2 y xi} dy for a supplied omega, split at its kinks.
inline double laplace_transform(const std::function<double(double)>& omega, double mu,
                                double xi) {
  const double b = 2 * mu + kPi / 2, e = 2 * mu - kPi / 2;
  std::vector<double> cuts{-b, -e, -kPi / 2, kPi / 2, e, b};
  std::sort(cuts.begin(), cuts.end());
  double acc = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    acc += integrate([&](double y) { return omega(y) * std::exp(-2 * y * xi); }, cuts[i],
                     cuts[i + 1]);
  return acc;
}

/// K(d) = 2 int_0^inf xi^3 cos(d xi) / (2 pi^3 sinh^2(2 mu xi) sinh(pi xi)) dxi.
inline cplx kernel_reference(double mu, cplx d) {
  const double m = 4 * mu + kPi - std::abs(d.imag());
  const double X = 80.0 / m;
  auto g = [&](double x) {
    const double s = std::sinh(2 * mu * x);
    return x * x * x / (2 * kPi * kPi * kPi * s * s * std::sinh(kPi * x));
  };
  const double re = integrate([&](double x) { return g(x) * std::cos(d * x).real(); }, 0, X, 1e-14);
  const double im = integrate([&](double x) { return g(x) * std::cos(d * x).imag(); }, 0, X, 1e-14);
  return 2.0 * cplx(re, im);
}

/// b = 0, j = k = -1: pi^2 (2 mu)^2 / p * int (2 cos t)^p dt with p = 2(a+1), using
/// int_{-pi/2}^{pi/2} (2 cos t)^p dt = pi Gamma(p+1) / Gamma(p/2+1)^2.
inline double hand_reduced_norm(double a, double mu) {
  const double p = 2 * (a + 1);
  return kPi * kPi * 4 * mu * mu / p * kPi * std::exp(std::lgamma(p + 1) - 2 * std::lgamma(p / 2 + 1));
}

/// Sum of 1-3 hats with centers in [-1.5, 1.5] and complex coefficients.
inline worm3::SpectralProfile random_hats(std::uint64_t seed) {
  auto rng = worm3::substream(seed, 0);
  worm3::SpectralProfile f;
  const int n = 1 + static_cast<int>(worm3::uniform01(rng) * 3);
  for (int i = 0; i < n; ++i)
    f.hats.push_back({worm3::uniform(rng, -1.5, 1.5), worm3::uniform(rng, 0.3, 1.0),
                      cplx(worm3::uniform(rng, -1, 1), worm3::uniform(rng, -1, 1))});
  return f;
}

}  // namespace oracle
