#include "worm3/selection.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "worm3/errors.hpp"

namespace worm3 {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Sums {
  double a, b;    // |z2|^2, |z3|^2
  double sp, sm;  // e^t2 + e^t3, e^-t2 + e^-t3
};

Sums sums(double t2, double t3) {
  const double a = std::exp(t2), b = std::exp(t3);
  return {a, b, a + b, 1 / a + 1 / b};
}

using Objective = std::function<double(double, double)>;

// Nelder-Mead on -f in two variables; NaN counts as -infinity.
ArgMax nelder_mead(const Objective& f, double t2, double t3, double step) {
  auto val = [&](const std::array<double, 2>& x) {
    const double v = f(x[0], x[1]);
    return std::isnan(v) ? -std::numeric_limits<double>::infinity() : v;
  };
  std::array<std::array<double, 2>, 3> s{{{t2, t3}, {t2 + step, t3}, {t2, t3 + step}}};
  std::array<double, 3> fv{val(s[0]), val(s[1]), val(s[2])};
  for (int it = 0; it < 2000; ++it) {
    std::array<int, 3> o{0, 1, 2};
    std::sort(o.begin(), o.end(), [&](int i, int j) { return fv[i] > fv[j]; });
    auto& hi = s[o[0]];
    auto& lo = s[o[2]];
    const std::array<double, 2> c{0.5 * (hi[0] + s[o[1]][0]), 0.5 * (hi[1] + s[o[1]][1])};
    auto along = [&](double k) {
      return std::array<double, 2>{c[0] + k * (lo[0] - c[0]), c[1] + k * (lo[1] - c[1])};
    };
    const auto xr = along(-1.0);
    const double fr = val(xr);
    if (fr > fv[o[0]]) {
      const auto xe = along(-2.0);
      const double fe = val(xe);
      if (fe > fr) {
        lo = xe;
        fv[o[2]] = fe;
      } else {
        lo = xr;
        fv[o[2]] = fr;
      }
    } else if (fr > fv[o[1]]) {
      lo = xr;
      fv[o[2]] = fr;
    } else {
      const auto xc = along(0.5);
      const double fc = val(xc);
      if (fc > fv[o[2]]) {
        lo = xc;
        fv[o[2]] = fc;
      } else {
        for (int k : {o[1], o[2]}) {
          s[k] = {0.5 * (s[k][0] + hi[0]), 0.5 * (s[k][1] + hi[1])};
          fv[k] = val(s[k]);
        }
      }
    }
    const double spread = std::max(std::abs(s[0][0] - s[1][0]) + std::abs(s[0][1] - s[1][1]),
                                   std::abs(s[0][0] - s[2][0]) + std::abs(s[0][1] - s[2][1]));
    if (spread < 1e-11) break;
  }
  const int b = static_cast<int>(std::max_element(fv.begin(), fv.end()) - fv.begin());
  return {fv[b], s[b][0], s[b][1], 0.0};
}

// Coordinates fitted to the selection set: u picks s = e^t2 + e^t3 in
// [4 / A-^2, A+^2], v picks w = e^t2 / s inside the interval allowed by
// e^-t2 + e^-t3 <= A-^2. The unit square maps onto the set, corners included,
// so cusp maxima on its boundary are grid points.
struct SetChart {
  double Ap2, Am2;

  bool map(double u, double v, double& t2, double& t3) const {
    if (!(u >= 0 && u <= 1 && v >= 0 && v <= 1)) return false;
    const double s_lo = 4 / Am2;
    const double s = s_lo + (Ap2 - s_lo) * u;
    const double disc = std::max(0.0, 1 - 4 / (s * Am2));
    const double w = 0.5 * (1 - std::sqrt(disc)) + std::sqrt(disc) * v;
    t2 = std::log(s * w);
    t3 = std::log(s * (1 - w));
    return true;
  }
};

ArgMax maximize(const Objective& f, const SetChart& chart, const SelectionOptions& opt, Exec exec,
                const char* what) {
  const Objective g = [&](double u, double v) {
    double t2 = 0, t3 = 0;
    return chart.map(u, v, t2, t3) ? f(t2, t3) : kNaN;
  };
  const int n = opt.grid;
  const double h = 1.0 / (n - 1);
  std::vector<double> vals(static_cast<std::size_t>(n) * n);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) vals[static_cast<std::size_t>(i) * n + j] = g(i * h, j * h);

  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < vals.size(); ++k)
    if (!std::isnan(vals[k])) idx.push_back(k);
  if (idx.empty()) return {kNaN, kNaN, kNaN, kNaN};
  const std::size_t starts = std::min<std::size_t>(opt.refine_starts, idx.size());
  std::partial_sort(idx.begin(), idx.begin() + starts, idx.end(),
                    [&](std::size_t a, std::size_t b) {
                      return vals[a] > vals[b] || (vals[a] == vals[b] && a < b);
                    });
  const std::size_t k0 = idx[0];
  ArgMax best{vals[k0], (k0 / n) * h, (k0 % n) * h, vals[k0]};
  for (std::size_t s = 0; s < starts; ++s) {
    const std::size_t k = idx[s];
    const ArgMax r = nelder_mead(g, (k / n) * h, (k % n) * h, 0.5 * h);
    if (r.value > best.value) best = {r.value, r.t2, r.t3, best.grid_value};
  }
  if (std::isfinite(best.value) &&
      std::abs(best.value - best.grid_value) > 0.01 * std::abs(best.grid_value))
    throw Error(ErrorKind::GridTooCoarse,
                std::string(what) + ": refinement moved the maximum by more than 1%");
  double t2 = 0, t3 = 0;
  chart.map(best.t2, best.t3, t2, t3);
  best.t2 = t2;
  best.t3 = t3;
  return best;
}

}  // namespace

bool in_selection_set(const MainProfileParams& p, double t2, double t3) {
  const Sums s = sums(t2, t3);
  // Relative slack of a few ulps keeps chart corners inside after rounding.
  constexpr double slack = 1 + 1e-12;
  return s.sp <= slack * p.A_plus * p.A_plus && s.sm <= slack * p.A_minus * p.A_minus;
}

bool in_mixed_region(const MainProfileParams& p, double t2, double t3) {
  if (!in_selection_set(p, t2, t3)) return false;
  const double x = std::exp(t2 - t3);
  const double bb = p.B_plus * p.B_plus * p.B_minus * p.B_minus;
  return x >= bb / 4 || x <= 4 / bb;
}

AlphaCoeffs alpha_coefficients(const MainProfileParams& p, double t2, double t3) {
  const Sums s = sums(t2, t3);
  const double x = s.a / s.b;
  const double P = s.sp - p.B_plus * p.B_plus;
  const double Q = s.sm - p.B_minus * p.B_minus;
  const double r = std::sqrt(x) - 1 / std::sqrt(x);
  AlphaCoeffs c;
  c.a11 = (x - 1 / x) * (x - 1 / x);
  c.a10 = -x * x / s.b - 1 / (x * x * s.a);
  c.a01 = -x * x * s.a - s.b / (x * x);
  c.a00 = -2 * P * Q * (4 + P * Q * r * r);
  return c;
}

double M_objective(int sign, const MainProfileParams& p, double t2, double t3) {
  if (!in_selection_set(p, t2, t3)) return kNaN;
  const Sums s = sums(t2, t3);
  const double B2 = sign > 0 ? p.B_plus * p.B_plus : p.B_minus * p.B_minus;
  const double T = sign > 0 ? s.sp : s.sm;
  if (!(T > B2)) return kNaN;
  const double prod = sign > 0 ? 1 / (s.a * s.b) : s.a * s.b;
  const double first = T - B2 * B2 / T;
  return first * (0.5 + 0.5 * std::sqrt(1 + 4 * prod * T * T * (T - B2) / (T + B2)));
}

double N_plus_objective(const MainProfileParams& p, double t2, double t3) {
  if (!in_mixed_region(p, t2, t3)) return kNaN;
  const AlphaCoeffs c = alpha_coefficients(p, t2, t3);
  return -c.a01 / c.a11;
}

double N_minus_objective(const MainProfileParams& p, double c_plus, double t2, double t3) {
  if (!in_mixed_region(p, t2, t3)) return kNaN;
  const AlphaCoeffs c = alpha_coefficients(p, t2, t3);
  const double den = c.a11 * c_plus + c.a01;
  // No finite c- works when the leading coefficient is not positive.
  if (!(den > 0)) return std::numeric_limits<double>::infinity();
  return (-c.a10 * c_plus - c.a00) / den;
}

SelectionResult select_constants(const MainProfileParams& shape, const SelectionOptions& opt,
                                 Exec exec) {
  shape.validate(false);
  if (opt.grid < 8) throw Error(ErrorKind::InvalidParams, "grid resolution must be >= 8");
  const SetChart box{shape.A_plus * shape.A_plus, shape.A_minus * shape.A_minus};
  SelectionResult r;
  r.M_plus = maximize([&](double a, double b) { return M_objective(+1, shape, a, b); }, box, opt,
                      exec, "M+");
  r.M_minus = maximize([&](double a, double b) { return M_objective(-1, shape, a, b); }, box,
                       opt, exec, "M-");
  r.N_plus = maximize([&](double a, double b) { return N_plus_objective(shape, a, b); }, box,
                      opt, exec, "N+");
  auto finite_or = [](double v, double d) { return std::isfinite(v) ? v : d; };
  const double Ap2 = shape.A_plus * shape.A_plus, Am2 = shape.A_minus * shape.A_minus;
  r.c_plus = (1 + opt.delta) * std::max({Ap2, finite_or(r.M_plus.value, Ap2),
                                         finite_or(r.N_plus.value, Ap2)});
  r.N_minus = maximize(
      [&](double a, double b) { return N_minus_objective(shape, r.c_plus, a, b); }, box, opt,
      exec, "N-");
  if (std::isinf(r.N_minus.value))
    throw Error(ErrorKind::InvalidParams, "c+ does not dominate the N+ bound");
  r.c_minus = (1 + opt.delta) * std::max({Am2, finite_or(r.M_minus.value, Am2),
                                          finite_or(r.N_minus.value, Am2)});
  r.params = shape;
  r.params.c_plus = r.c_plus;
  r.params.c_minus = r.c_minus;
  return r;
}

}  // namespace worm3
