#include "worm3/strip_weight.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace worm3 {

namespace {

constexpr double kPi = std::numbers::pi;

// c * s^p * e^{lambda s}
struct Term {
  double c;
  int p;
  double lambda;
};

double antiderivative(const Term& t, double s) {
  if (t.lambda == 0) return t.p == 0 ? t.c * s : t.c * 0.5 * s * s;
  const double e = std::exp(t.lambda * s);
  if (t.p == 0) return t.c * e / t.lambda;
  return t.c * e * (s / t.lambda - 1 / (t.lambda * t.lambda));
}

double integrate(const std::vector<Term>& terms, double a, double b) {
  double acc = 0;
  for (const Term& t : terms) acc += antiderivative(t, b) - antiderivative(t, a);
  return acc;
}

}  // namespace

double sinh_ratio(double a, double x) {
  const double ax = a * x;
  if (std::abs(ax) < 1e-4) return a * (1 + ax * ax / 6 + ax * ax * ax * ax / 120);
  return std::sinh(ax) / x;
}

double StripWeight::beta() const { return 2 * mu + kPi / 2; }

double StripWeight::spatial(double y) const {
  const double J = j + 1, K = k + 1, D = j - k;
  // h = (e^{(j+1).} chi) * (e^{(k+1).} chi) on [-2mu, 0] and [0, 2mu].
  std::vector<Term> left, right;
  if (D == 0) {
    left = {{1, 1, J}, {2 * mu, 0, J}};
    right = {{-1, 1, J}, {2 * mu, 0, J}};
  } else {
    const double ep = std::exp(D * mu) / D, em = std::exp(-D * mu) / D;
    left = {{ep, 0, J}, {-em, 0, K}};
    right = {{ep, 0, K}, {-em, 0, J}};
  }
  const double lo = y - kPi / 2, hi = y + kPi / 2;
  double acc = 0;
  const double a1 = std::max(lo, -2 * mu), b1 = std::min(hi, 0.0);
  if (b1 > a1) acc += integrate(left, a1, b1);
  const double a2 = std::max(lo, 0.0), b2 = std::min(hi, 2 * mu);
  if (b2 > a2) acc += integrate(right, a2, b2);
  return kPi * kPi * acc;
}

double StripWeight::spectral(double xi) const {
  return kPi * kPi * sinh_ratio(2 * mu, xi - 0.5 * (j + 1)) *
         sinh_ratio(2 * mu, xi - 0.5 * (k + 1)) * sinh_ratio(kPi, xi);
}

}  // namespace worm3
