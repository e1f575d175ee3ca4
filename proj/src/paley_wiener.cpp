#include "worm3/paley_wiener.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "worm3/kernel.hpp"
#include "worm3/quadrature.hpp"

namespace worm3 {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
const cplx I(0.0, 1.0);

// (1 - cos u) / u^2
cplx one_minus_cos_ratio(cplx u) {
  if (std::abs(u) < 1e-3) {
    const cplx u2 = u * u;
    return 0.5 - u2 / 24.0 + u2 * u2 / 720.0;
  }
  return (1.0 - std::cos(u)) / (u * u);
}

// Quadrature nodes in y over (-beta, beta), split where omega is not smooth.
std::vector<std::pair<double, double>> y_nodes(const StripWeight& w, int per_piece) {
  const double b = w.beta(), e = 2 * w.mu - kPi / 2;
  std::vector<double> cuts{-b, -e, -kPi / 2, kPi / 2, e, b};
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double len = cuts[i + 1] - cuts[i];
    if (len > 0) append_gauss_panels(cuts[i], cuts[i + 1], len / per_piece * (1 + 1e-12), out);
  }
  return out;
}

}  // namespace

cplx SpectralProfile::phi(double xi) const {
  cplx acc = 0;
  for (const Hat& h : hats) acc += h.coeff * std::max(0.0, 1 - std::abs(xi - h.center) / h.half_width);
  return acc;
}

cplx SpectralProfile::F(cplx zeta) const {
  cplx acc = 0;
  for (const Hat& h : hats)
    acc += h.coeff * std::exp(I * zeta * h.center) * h.half_width *
           one_minus_cos_ratio(zeta * h.half_width) / kPi;
  return acc;
}

std::vector<double> SpectralProfile::breakpoints() const {
  std::vector<double> b;
  for (const Hat& h : hats) {
    b.push_back(h.center - h.half_width);
    b.push_back(h.center);
    b.push_back(h.center + h.half_width);
  }
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

double SpectralProfile::weighted_l2(const std::function<double(double)>& weight) const {
  const auto b = breakpoints();
  std::vector<std::pair<double, double>> nodes;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) append_gauss_panels(b[i], b[i + 1], 0.25, nodes);
  double acc = 0;
  for (const auto& [x, wt] : nodes) acc += wt * std::norm(phi(x)) * weight(x);
  return acc;
}

SpectralProfile SpectralProfile::scaled(cplx s) const {
  SpectralProfile out = *this;
  for (Hat& h : out.hats) h.coeff *= s;
  return out;
}

double spectral_norm2(const SpectralProfile& f, const StripWeight& w) {
  return f.weighted_l2([&](double xi) { return w.spectral(xi); }) / (2 * kPi);
}

double line_l2(const SpectralProfile& f, double y, double X) {
  std::vector<std::pair<double, double>> nodes;
  append_gauss_panels(-X, X, 1.0, nodes);
  double acc = 0;
  for (const auto& [x, wt] : nodes) acc += wt * std::norm(f.F(cplx(x, y)));
  return acc;
}

double line_l2_parseval(const SpectralProfile& f, double y) {
  return f.weighted_l2([&](double xi) { return std::exp(-2 * y * xi); }) / (2 * kPi);
}

double spatial_norm2(const SpectralProfile& f, const StripWeight& w, const StripQuadOptions& opt,
                     Exec exec) {
  const auto ys = y_nodes(w, opt.y_panels_per_piece);
  // |F(x+iy)| <= B(y) / x^2, so the tail beyond X is at most 2 B^2 / (3 X^3).
  double tail_mass = 0;
  for (const auto& [y, wt] : ys) {
    double B = 0;
    for (const Hat& h : f.hats)
      B += std::abs(h.coeff) * std::exp(-y * h.center) * (1 + std::cosh(y * h.half_width)) /
           (kPi * h.half_width);
    tail_mass += wt * w.spatial(y) * 2 * B * B / 3;
  }
  const double target = opt.tail_rel * spectral_norm2(f, w);
  const double X = std::max(20.0, std::cbrt(tail_mass / target));

  std::vector<std::pair<double, double>> xs;
  append_gauss_panels(-X, X, opt.x_panel, xs);
  std::vector<double> rows(ys.size());
  const long long ny = static_cast<long long>(ys.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (long long i = 0; i < ny; ++i) {
    const double y = ys[i].first;
    double acc = 0;
    for (const auto& [x, wt] : xs) acc += wt * std::norm(f.F(cplx(x, y)));
    rows[i] = ys[i].second * w.spatial(y) * acc;
  }
  double total = 0;
  for (double r : rows) total += r;
  return total;
}

cplx reproduce(const SpectralProfile& f, double mu, cplx zeta, double X,
               const StripQuadOptions& opt, Exec exec) {
  const StripWeight w{mu, -1, -1};
  const FixedKernel K(mu, zeta, w.beta() + std::abs(zeta.imag()), X + std::abs(zeta.real()));
  const auto ys = y_nodes(w, opt.y_panels_per_piece);
  std::vector<std::pair<double, double>> xs;
  append_gauss_panels(-X, X, opt.x_panel, xs);
  std::vector<cplx> rows(ys.size());
  const long long ny = static_cast<long long>(ys.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (long long i = 0; i < ny; ++i) {
    const double y = ys[i].first;
    cplx acc = 0;
    for (const auto& [x, wt] : xs) {
      const cplx z(x, y);
      acc += wt * f.F(z) * std::conj(K(z));
    }
    rows[i] = ys[i].second * w.spatial(y) * acc;
  }
  cplx total = 0;
  for (const cplx& r : rows) total += r;
  return total;
}

std::vector<RestrictionRow> restriction_density_check(double mu, double mu_prime,
                                                      const std::vector<SpectralProfile>& fs,
                                                      Exec exec) {
  const StripWeight w{mu, -1, -1}, wp{mu_prime, -1, -1};
  std::vector<RestrictionRow> out;
  for (const SpectralProfile& f : fs) {
    RestrictionRow r;
    r.spectral_mu = spectral_norm2(f, w);
    r.spectral_mu_prime = spectral_norm2(f, wp);
    r.spatial_mu = spatial_norm2(f, w, {}, exec);
    r.rel_diff = std::abs(r.spatial_mu - r.spectral_mu) / r.spectral_mu;
    for (double y : {-0.75 * w.beta(), -1.0, 0.0, 0.5, 0.75 * w.beta()}) {
      const double a = line_l2(f, y, 4000.0), b = line_l2_parseval(f, y);
      r.parseval_max_rel = std::max(r.parseval_max_rel, std::abs(a - b) / b);
    }
    r.doubled_ratio = std::sqrt(spectral_norm2(f.scaled(2.0), w) / r.spectral_mu);
    r.pass = std::isfinite(r.spectral_mu_prime) && r.rel_diff <= 1e-4 &&
             r.parseval_max_rel <= 1e-7 && std::abs(r.doubled_ratio - 2) <= 1e-12;
    out.push_back(r);
  }
  return out;
}

}  // namespace worm3
