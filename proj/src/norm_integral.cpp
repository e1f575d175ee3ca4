#include "worm3/norm_integral.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "worm3/errors.hpp"

namespace worm3 {

namespace {
constexpr double kPi = std::numbers::pi;
}

double shifted_exp_integral(double lambda, double theta, double mu) {
  if (lambda == 0) return 2 * mu;
  return std::exp(lambda * theta / 2) * 2 * std::sinh(lambda * mu) / lambda;
}

std::optional<double> norm_integral(const NormIntegralSpec& s) {
  if (!(s.mu > 0)) throw Error(ErrorKind::InvalidParams, "mu must be positive");
  if (!s.finite()) return std::nullopt;
  const double p = 2 * (s.a + 1);
  const double l2 = s.j + 1 - 2 * s.b, l3 = s.k + 1 - 2 * s.b;
  const double tilt = -0.5 * (s.j + s.k + 2);
  auto f = [&](double th) {
    const double c = 2 * std::cos(th);
    if (c <= 0) return 0.0;
    return std::pow(c, p) / p * shifted_exp_integral(l2, th, s.mu) *
           shifted_exp_integral(l3, th, s.mu) * std::exp(tilt * th);
  };
  boost::math::quadrature::tanh_sinh<double> ts;
  return kPi * kPi * ts.integrate(f, -kPi / 2, kPi / 2);
}

MonteCarloEstimate norm_monte_carlo(const NormIntegralSpec& s, std::uint64_t samples,
                                    std::uint64_t seed, int tasks, Exec exec) {
  if (!(s.mu > 0) || tasks < 1) throw Error(ErrorKind::InvalidParams, "bad Monte Carlo setup");
  std::vector<double> sum(tasks, 0.0), sum2(tasks, 0.0);
  std::vector<std::uint64_t> count(tasks, 0);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (int t = 0; t < tasks; ++t) {
    auto rng = substream(seed, static_cast<std::uint64_t>(t));
    const std::uint64_t n = samples / tasks + (static_cast<std::uint64_t>(t) < samples % tasks);
    double acc = 0, acc2 = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      const double t2 = uniform(rng, -s.mu, s.mu), t3 = uniform(rng, -s.mu, s.mu);
      // The arguments of z2, z3 do not enter the integrand; they only contribute volume.
      const double r = std::sqrt(uniform01(rng)), phi = uniform(rng, -kPi, kPi);
      const std::complex<double> zeta = 1.0 + std::polar(r, phi);
      const double mod2 = std::norm(zeta);
      double f = std::exp((s.j + 1) * t2 + (s.k + 1) * t3 - 2 * s.b * (std::arg(zeta) + t2 + t3));
      if (s.a != 0) f *= std::pow(mod2, s.a);
      acc += f;
      acc2 += f * f;
    }
    sum[t] = acc;
    sum2[t] = acc2;
    count[t] = n;
  }
  double S = 0, S2 = 0;
  std::uint64_t N = 0;
  for (int t = 0; t < tasks; ++t) {
    S += sum[t];
    S2 += sum2[t];
    N += count[t];
  }
  // Sample-space volume: (2 mu)^2 in the log-moduli, (2 pi)^2 in the arguments,
  // pi for the unit disk, times 1/4 from the Jacobian of t = log r^2.
  const double vol = kPi * kPi * kPi * 4 * s.mu * s.mu;
  const double mean = S / N;
  const double var = std::max(0.0, S2 / N - mean * mean);
  return {vol * mean, vol * std::sqrt(var / N), N};
}

bool radial_exponent_finite(double m, double s, double nu) { return m - s < nu; }

}  // namespace worm3
