#include "worm3/kernel.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "worm3/errors.hpp"
#include "worm3/unwinding.hpp"

namespace worm3 {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx I(0.0, 1.0);

// u / sinh(u) = sum a_n u^{2n}, a_n = (2 - 2^{2n}) B_{2n} / (2n)!
constexpr std::array<double, 7> kInvSinhc = {
    1.0,
    -1.0 / 6.0,
    7.0 / 360.0,
    -31.0 / 15120.0,
    127.0 / 604800.0,
    -73.0 / 3421440.0,
    (2.0 - 4096.0) * (-691.0 / 2730.0) / 479001600.0,
};

double inv_sinhc(double u) {
  const double u2 = u * u;
  double acc = 0;
  for (int n = 6; n >= 0; --n) acc = acc * u2 + kInvSinhc[n];
  return acc;
}

constexpr double kSeriesCut = 1e-2;

// log of 8 / (2 pi^3 (1 - e^{-4 mu a})^2 (1 - e^{-2 pi a})) for a > 0
double log_prefactor(double mu, double a) {
  const double s1 = -std::expm1(-4 * mu * a), s2 = -std::expm1(-2 * kPi * a);
  return std::log(8.0 / (2 * kPi * kPi * kPi)) - 2 * std::log(s1) - std::log(s2);
}

double tail_bound(double mu, double m, double X) {
  const double C = std::exp(log_prefactor(mu, 1.0));
  return 2 * C * std::exp(-m * X) *
         (X * X * X / m + 3 * X * X / (m * m) + 6 * X / (m * m * m) + 6 / (m * m * m * m));
}

double cutoff_for(double mu, double m, double target) {
  double X = 1.0;
  while (tail_bound(mu, m, X) > target && X < 1e7) X *= 1.05;
  return X;
}

}  // namespace

AsympConstants AsympConstants::make(double mu) {
  if (!(mu > kPi / 2)) throw Error(ErrorKind::InvalidParams, "asymptotics require mu > pi/2");
  AsympConstants c;
  c.nu = kPi / (2 * mu);
  c.nu_prime = std::min(2 * c.nu, 1.0);
  const double s = std::sin(c.nu * kPi);
  const double p5 = std::pow(kPi, 5);
  c.C = -I * std::pow(c.nu, 5) / (2 * p5 * s);
  c.Cp = I * std::pow(c.nu, 4) * (3 - c.nu * kPi / std::tan(c.nu * kPi)) / (2 * p5 * s);
  return c;
}

double kernel_profile(double mu, double xi) {
  const double a = std::abs(xi);
  if (a < kSeriesCut) {
    const double r1 = inv_sinhc(2 * mu * a), r2 = inv_sinhc(kPi * a);
    return r1 * r1 * r2 / (2 * kPi * kPi * kPi * 4 * mu * mu * kPi);
  }
  return std::exp(3 * std::log(a) - (4 * mu + kPi) * a + log_prefactor(mu, a));
}

cplx kernel_integrand(double mu, cplx d, double xi) {
  const double a = std::abs(xi);
  const double phase = d.real() * xi;
  if (a < kSeriesCut)
    return kernel_profile(mu, xi) * std::exp(-d.imag() * xi) * std::polar(1.0, phase);
  const double logmag =
      3 * std::log(a) - (4 * mu + kPi) * a - d.imag() * xi + log_prefactor(mu, a);
  return std::polar(std::exp(logmag), phase);
}

cplx kernel_integrand_c(double mu, cplx d, cplx xi) {
  const cplx s = std::sinh(2 * mu * xi);
  return xi * xi * xi * std::exp(I * d * xi) / (2 * kPi * kPi * kPi * s * s * std::sinh(kPi * xi));
}

KernelEval kernel_of_d(double mu, cplx d, const KernelOptions& opt) {
  const double m = 4 * mu + kPi - std::abs(d.imag());
  if (m < 1e-3) throw Error(ErrorKind::NonConvergent, "decay margin 2 beta - |Im d| below 1e-3");

  auto trap = [&](double h, double X, bool odd_only, double& l1) {
    const long long N = static_cast<long long>(std::floor(X / h));
    cplx acc = 0;
    l1 = 0;
    for (long long n = -N; n <= N; ++n) {
      if (odd_only && (n % 2 == 0)) continue;
      const cplx v = kernel_integrand(mu, d, n * h);
      acc += v;
      l1 += std::abs(v);
    }
    return acc * h;
  };

  // Scale from the absolute integral, then the cutoff against the estimate.
  double l1 = 0;
  double X = cutoff_for(mu, m, 1e-16);
  double h = opt.h0;
  trap(h, X, false, l1);
  const double mass = l1 * h;

  for (int pass = 0; pass < 6; ++pass) {
    h = opt.h0;
    double dummy;
    cplx S = trap(h, X, false, dummy);
    double diff = 0;
    bool converged = false;
    for (int k = 0; k < opt.max_halvings; ++k) {
      const cplx odd = trap(h / 2, X, true, dummy);
      const cplx S2 = 0.5 * S + odd;
      diff = std::abs(S2 - S);
      S = S2;
      h /= 2;
      const double scale = std::max(std::abs(S), 1e-8 * mass);
      if (k >= 1 && diff < opt.rel_tol * scale) {
        converged = true;
        break;
      }
    }
    if (!converged) throw Error(ErrorKind::NonConvergent, "step halving did not converge");
    const double scale = std::max(std::abs(S), 1e-8 * mass);
    const double tail = tail_bound(mu, m, X);
    if (tail <= opt.tail_tol * scale) {
      KernelEval r;
      r.value = S;
      r.quad_error = diff + tail;
      r.step = h;
      r.cutoff = X;
      return r;
    }
    X = cutoff_for(mu, m, opt.tail_tol * scale);
  }
  throw Error(ErrorKind::NonConvergent, "tail cutoff did not settle");
}

KernelEval kernel_quadrature(double mu, cplx zeta, cplx zeta_prime, const KernelOptions& opt) {
  const double beta = 2 * mu + kPi / 2;
  if (!(std::abs(zeta.imag()) < beta) || !(std::abs(zeta_prime.imag()) < beta))
    throw Error(ErrorKind::OutOfRange, "points must lie in the strip |Im| < beta");
  const cplx d = zeta - std::conj(zeta_prime);
  KernelEval r = kernel_of_d(mu, d, opt);
  r.zeta = zeta;
  r.zeta_prime = zeta_prime;
  if (mu > kPi / 2 && std::abs(d.real()) >= 4) {
    r.asymp = kernel_asymptotic_d(mu, d);
    r.asymp_residual = std::abs(r.value - *r.asymp);
  }
  return r;
}

cplx residue_formula(double mu, cplx d) {
  const AsympConstants c = AsympConstants::make(mu);
  return std::exp(-d * c.nu) * (c.C * d + c.Cp);
}

cplx residue_contour(double mu, cplx d, int nodes) {
  const AsympConstants c = AsympConstants::make(mu);
  const double r = std::min(c.nu, 1 - c.nu) / 10;
  cplx acc = 0;
  for (int k = 0; k < nodes; ++k) {
    const cplx e = std::polar(1.0, 2 * kPi * k / nodes);
    acc += kernel_integrand_c(mu, d, I * c.nu + r * e) * e;
  }
  return acc * (r / nodes);
}

cplx kernel_asymptotic_d(double mu, cplx d) {
  if (d.real() == 0) throw Error(ErrorKind::OnWall, "Re(zeta - conj zeta') = 0");
  const AsympConstants c = AsympConstants::make(mu);
  const cplx two_pi_i = 2 * kPi * I;
  if (d.real() > 0) return two_pi_i * std::exp(-d * c.nu) * (c.C * d + c.Cp);
  return -two_pi_i * std::exp(d * c.nu) * (c.C * d - c.Cp);
}

cplx kernel_asymptotic(double mu, cplx zeta, cplx zeta_prime) {
  return kernel_asymptotic_d(mu, zeta - std::conj(zeta_prime));
}

int subleading_pole_power(double nu) {
  // Poles of 1/sinh^2(2 mu xi) at i k nu (double), of 1/sinh(pi xi) at i (simple).
  if (nu < 0.5) return 1;
  if (nu == 0.5) return 2;
  return 0;
}

DecayFit fit_decay(const std::vector<double>& d, const std::vector<double>& err, int power) {
  auto slope = [&](bool corrected) {
    const std::size_t n = d.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double y = std::log(err[i]) - (corrected ? power * std::log(d[i]) : 0.0);
      sx += d[i];
      sy += y;
      sxx += d[i] * d[i];
      sxy += d[i] * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
  };
  return {-slope(false), -slope(true), power};
}

FixedKernel::FixedKernel(double mu, cplx zeta0, double im_max, double re_max, double rel_tol) {
  const double m = 4 * mu + kPi - im_max;
  if (m < 1e-3) throw Error(ErrorKind::NonConvergent, "decay margin below 1e-3");
  const double nu = kPi / (2 * mu);
  const double a = 0.5 * std::min(nu, 1.0);
  h_ = 2 * kPi * a / (std::log(1 / rel_tol) + re_max * a + 5);
  const double X = cutoff_for(mu, m, rel_tol * 1e-6);
  n_ = static_cast<int>(std::ceil(X / h_));
  c_.resize(2 * n_ + 1);
  const cplx zb = std::conj(zeta0);
  for (int k = -n_; k <= n_; ++k) {
    const double xi = k * h_;
    // Combine exponents before exponentiating to keep the tail representable.
    const cplx e = -I * zb * xi;
    if (std::abs(xi) < kSeriesCut)
      c_[k + n_] = h_ * kernel_profile(mu, xi) * std::exp(e);
    else
      c_[k + n_] = h_ * std::exp(3 * std::log(std::abs(xi)) - (4 * mu + kPi) * std::abs(xi) +
                                 log_prefactor(mu, std::abs(xi)) + e);
  }
}

cplx FixedKernel::operator()(cplx zeta) const {
  const cplx q = std::exp(I * zeta * h_);
  const cplx qi = 1.0 / q;
  cplx acc = c_[n_];
  cplx pp = 1.0, pm = 1.0;
  for (int k = 1; k <= n_; ++k) {
    pp *= q;
    pm *= qi;
    acc += c_[n_ + k] * pp + c_[n_ - k] * pm;
  }
  return acc;
}

KernelEval wound_kernel(double mu, const Point3& p, const Point3& q, const KernelOptions& opt) {
  if (!in_model_domain(p, mu) || !in_model_domain(q, mu))
    throw Error(ErrorKind::OutOfRange, "points must lie in D_mu");
  const cplx lp = ell(p), lq = ell(q);
  KernelEval r = kernel_quadrature(mu, lp, lq, opt);
  const cplx f = p.z1 * std::conj(q.z1) * p.z2 * std::conj(q.z2) * p.z3 * std::conj(q.z3);
  r.value /= f;
  r.quad_error /= std::abs(f);
  if (r.asymp) {
    *r.asymp /= f;
    r.asymp_residual = std::abs(r.value - *r.asymp);
  }
  return r;
}

cplx wound_kernel_asymptotic(double mu, const Point3& p, const Point3& q) {
  const AsympConstants c = AsympConstants::make(mu);
  const cplx lp = ell(p), lq = ell(q);
  const cplx lead = eval_E(-c.nu - 1, p) * std::conj(eval_E(c.nu - 1, q)) *
                    (c.C * (lp - std::conj(lq)) + c.Cp);
  return 2 * kPi * I * lead / (p.z2 * std::conj(q.z2) * p.z3 * std::conj(q.z3));
}

}  // namespace worm3
