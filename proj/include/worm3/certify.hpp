#pragma once

#include <cstdint>
#include <vector>

#include "worm3/eta_profiles.hpp"
#include "worm3/geometry.hpp"

namespace worm3 {

struct CertifyOptions {
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  int grid = 200;
  double dilation = 0.05;  // neighborhood of K = {eta <= 1} for the inequality grid
  std::size_t max_witnesses = 10;
};

struct SampleRecord {
  Point3 p;
  double t2 = 0, t3 = 0;
  double ineq1 = 0, ineq3 = 0;
  double lambda_min = 0, lambda_max = 0;
  double levi_norm = 0;
  double margin = 0;  // smallest relative margin among the three checks
  bool pass = false;
};

struct GridCheck {
  std::size_t points = 0, failures = 0;
  std::size_t failures_above_band = 0;  // informational: eta > 1 + dilation
  double min_rel_ineq1 = 0, min_rel_ineq3 = 0;
  Box box;            // grid extent
  double radius = 0;  // points farther than this from K are skipped
};

struct PseudoconvexityReport {
  std::string profile;
  std::vector<SampleRecord> samples;
  std::vector<SampleRecord> witnesses;  // worst failing samples
  GridCheck grid;
  double worst_margin = 0;
  bool verdict = false;
};

/// Scores one boundary point. Relative margins are value / scale.
SampleRecord score_boundary_point(const Point3& p, const EtaProfile& eta, double tol);

/// Inequality grid over the dilated sampling window, restricted to smooth
/// points within dilation * (window size) of K = {eta <= 1} that also satisfy
/// eta <= 1 + dilation.
GridCheck inequality_grid(const EtaProfile& eta, const DomainParams& params,
                          const CertifyOptions& opt, Exec exec = Exec::parallel);

PseudoconvexityReport certify(const EtaProfile& eta, const DomainParams& params,
                              const CertifyOptions& opt, Exec exec = Exec::parallel);

struct SweepPoint {
  double eps = 0;
  Point3 p;
  double lambda_min = 0, lambda_max = 0, norm = 0;
};

/// Boundary points z1 = (1 - sqrt(1 - phi)) e^{iL}, log|z2|^2 = mu + eps,
/// log|z3|^2 = 0, for eps = 2^-1 .. 2^-steps times (mu' - mu).
std::vector<SweepPoint> separable_eps_sweep(const SeparableProfile& eta, int steps = 20);

}  // namespace worm3
