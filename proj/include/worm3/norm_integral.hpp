#pragma once

#include <cstdint>
#include <optional>

#include "worm3/exec.hpp"

namespace worm3 {

/// Squared norm of E_{a+ib} z2^j z3^k over the straight worm of radius mu.
struct NormIntegralSpec {
  double a = 0, b = 0;
  int j = -1, k = -1;
  double mu = 0;

  bool finite() const { return a > -1; }
};

/// Nested closed-form quadrature; nullopt means Divergent.
std::optional<double> norm_integral(const NormIntegralSpec& spec);

/// I(theta) = integral of e^{lambda x} over (theta/2 - mu, theta/2 + mu).
double shifted_exp_integral(double lambda, double theta, double mu);

struct MonteCarloEstimate {
  double estimate = 0;
  double stderr_ = 0;
  std::uint64_t samples = 0;
};

/// Direct Monte Carlo over the domain: log-moduli and arguments of z2, z3
/// uniform, z1 uniform on its disk fiber. Tasks use independent substreams and
/// are reduced in index order.
MonteCarloEstimate norm_monte_carlo(const NormIntegralSpec& spec, std::uint64_t samples,
                                    std::uint64_t seed, int tasks = 64,
                                    Exec exec = Exec::parallel);

/// Radial integral of r^{2(nu - m + s) - 1} near 0 is finite iff m - s < nu.
bool radial_exponent_finite(double m, double s, double nu);

}  // namespace worm3
