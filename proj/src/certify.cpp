#include "worm3/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "worm3/levi.hpp"

namespace worm3 {

namespace {

double rel(double v, double scale) { return scale > 0 ? v / scale : (v < 0 ? -1.0 : 0.0); }

}  // namespace

SampleRecord score_boundary_point(const Point3& p, const EtaProfile& eta, double tol) {
  SampleRecord r;
  r.p = p;
  r.t2 = p.t2();
  r.t3 = p.t3();
  const IneqValues iv = ineq_values(eta, r.t2, r.t3);
  r.ineq1 = iv.ineq1;
  r.ineq3 = iv.ineq3;
  const LeviData ld = restricted_levi(p, eta);
  r.lambda_min = ld.eig[0];
  r.lambda_max = ld.eig[1];
  r.levi_norm = ld.norm;
  r.margin = std::min({rel(r.lambda_min, ld.norm), rel(iv.ineq1, iv.scale1),
                       rel(iv.ineq3, iv.scale3)});
  r.pass = r.margin >= -tol;
  return r;
}

GridCheck inequality_grid(const EtaProfile& eta, const DomainParams& params,
                          const CertifyOptions& opt, Exec exec) {
  GridCheck g;
  const Box window = sampling_window(eta, params);
  g.box = window.dilated(opt.dilation);
  const int n = opt.grid;
  const double h2 = (g.box.t2_hi - g.box.t2_lo) / (n - 1);
  const double h3 = (g.box.t3_hi - g.box.t3_lo) / (n - 1);
  const std::size_t total = static_cast<std::size_t>(n) * n;
  std::vector<double> r1(total), r3(total), level(total);
  std::vector<char> smooth(total, 0), in_K(total, 0);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::size_t k = static_cast<std::size_t>(i) * n + j;
      const double t2 = g.box.t2_lo + i * h2, t3 = g.box.t3_lo + j * h3;
      if (!eta.smooth_at(t2, t3)) continue;
      const EtaJet jet = eta.jet(t2, t3);
      const IneqValues iv = ineq_values_from_jet(jet);
      r1[k] = rel(iv.ineq1, iv.scale1);
      r3[k] = rel(iv.ineq3, iv.scale3);
      smooth[k] = 1;
      level[k] = jet.value;
      in_K[k] = window.contains(t2, t3) && jet.value <= 1;
    }

  // Neighborhood of K: grid points within dilation * (window size) of a K point.
  const double radius = opt.dilation * std::max(window.t2_hi - window.t2_lo, window.t3_hi - window.t3_lo);
  const int w2 = static_cast<int>(std::floor(radius / h2)), w3 = static_cast<int>(std::floor(radius / h3));
  std::vector<char> near(total, 0);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool hit = false;
      for (int a = std::max(0, i - w2); a <= std::min(n - 1, i + w2) && !hit; ++a)
        for (int b = std::max(0, j - w3); b <= std::min(n - 1, j + w3) && !hit; ++b) {
          const double d2 = (a - i) * h2, d3 = (b - j) * h3;
          hit = in_K[static_cast<std::size_t>(a) * n + b] && d2 * d2 + d3 * d3 <= radius * radius;
        }
      near[static_cast<std::size_t>(i) * n + j] = hit;
    }

  g.min_rel_ineq1 = g.min_rel_ineq3 = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < total; ++k) {
    if (!smooth[k] || !near[k]) continue;
    // eta > 1 + dilation lies under no point of the closed domain; tallied only.
    if (level[k] > 1 + opt.dilation) {
      if (r1[k] < -opt.tol || r3[k] < -opt.tol) ++g.failures_above_band;
      continue;
    }
    ++g.points;
    g.min_rel_ineq1 = std::min(g.min_rel_ineq1, r1[k]);
    g.min_rel_ineq3 = std::min(g.min_rel_ineq3, r3[k]);
    if (r1[k] < -opt.tol || r3[k] < -opt.tol) ++g.failures;
  }
  g.radius = radius;
  return g;
}

PseudoconvexityReport certify(const EtaProfile& eta, const DomainParams& params,
                              const CertifyOptions& opt, Exec exec) {
  PseudoconvexityReport rep;
  rep.profile = eta.name();
  const auto pts = boundary_sample(eta, params, opt.samples, opt.seed, exec);
  rep.samples.resize(pts.size());
  const long long n = static_cast<long long>(pts.size());
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (long long i = 0; i < n; ++i) {
    try {
      rep.samples[i] = score_boundary_point(pts[i], eta, opt.tol);
    } catch (const std::exception&) {
      // A sample that cannot be scored is a failure, never a silent skip.
      rep.samples[i].p = pts[i];
      rep.samples[i].t2 = pts[i].t2();
      rep.samples[i].t3 = pts[i].t3();
      rep.samples[i].margin = -std::numeric_limits<double>::infinity();
      rep.samples[i].pass = false;
    }
  }

  rep.grid = inequality_grid(eta, params, opt, exec);
  rep.worst_margin = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < rep.samples.size(); ++i) {
    rep.worst_margin = std::min(rep.worst_margin, rep.samples[i].margin);
    if (!rep.samples[i].pass) bad.push_back(i);
  }
  std::stable_sort(bad.begin(), bad.end(), [&](std::size_t a, std::size_t b) {
    return rep.samples[a].margin < rep.samples[b].margin;
  });
  for (std::size_t k = 0; k < bad.size() && k < opt.max_witnesses; ++k)
    rep.witnesses.push_back(rep.samples[bad[k]]);
  rep.verdict = bad.empty() && rep.grid.failures == 0;
  return rep;
}

std::vector<SweepPoint> separable_eps_sweep(const SeparableProfile& eta, int steps) {
  const Bump1D& phi = eta.phi();
  std::vector<SweepPoint> out;
  for (int m = 1; m <= steps; ++m) {
    const double eps = std::ldexp(phi.mu_prime - phi.mu, -m);
    const double t2 = phi.mu + eps;
    const double ph = phi.eval(t2).v;
    const cplx z2 = std::exp(0.5 * t2);
    const cplx z3 = 1.0;
    const double L = t2;
    const cplx z1 = (1 - std::sqrt(1 - ph)) * std::polar(1.0, L);
    SweepPoint sp;
    sp.eps = eps;
    sp.p = Point3(z1, z2, z3);
    const LeviData ld = restricted_levi(sp.p, eta);
    sp.lambda_min = ld.eig[0];
    sp.lambda_max = ld.eig[1];
    sp.norm = ld.norm;
    out.push_back(sp);
  }
  return out;
}

}  // namespace worm3
