#include "worm3/eta_profiles.hpp"

#include <algorithm>
#include <cmath>

#include "worm3/errors.hpp"

namespace worm3 {

namespace {

constexpr double kUnderflowExponent = -700.0;

}  // namespace

EtaJet& EtaJet::operator+=(const EtaJet& o) {
  value += o.value;
  d2 += o.d2;
  d3 += o.d3;
  d22 += o.d22;
  d23 += o.d23;
  d33 += o.d33;
  return *this;
}

Box Box::dilated(double frac) const {
  const double c2 = 0.5 * (t2_lo + t2_hi), c3 = 0.5 * (t3_lo + t3_hi);
  const double h2 = 0.5 * (t2_hi - t2_lo) * (1 + frac);
  const double h3 = 0.5 * (t3_hi - t3_lo) * (1 + frac);
  return {c2 - h2, c2 + h2, c3 - h3, c3 + h3};
}

Box Box::intersect(const Box& o) const {
  return {std::max(t2_lo, o.t2_lo), std::min(t2_hi, o.t2_hi), std::max(t3_lo, o.t3_lo),
          std::min(t3_hi, o.t3_hi)};
}

std::array<double, 2> EtaProfile::grad(double t2, double t3) const {
  const EtaJet j = jet(t2, t3);
  return {j.d2, j.d3};
}

std::array<double, 3> EtaProfile::hess(double t2, double t3) const {
  const EtaJet j = jet(t2, t3);
  return {j.d22, j.d23, j.d33};
}

Bump1D Bump1D::make(double mu, double mu_prime) {
  if (!(mu > 0) || !(mu_prime > mu))
    throw Error(ErrorKind::InvalidParams, "bump profile needs 0 < mu < mu'");
  return {mu, mu_prime, mu_prime * mu_prime};
}

Bump1D::Jet Bump1D::eval(double t) const {
  Jet out;
  const double q = t * t - mu * mu;
  if (q <= 0) return out;
  const double g = c / (mu_prime * mu_prime - mu * mu) - c / q;
  if (g < kUnderflowExponent) return out;
  out.g = g;
  out.g1 = 2 * c * t / (q * q);
  out.g2 = -2 * c * (3 * t * t + mu * mu) / (q * q * q);
  out.v = std::exp(g);
  out.d1 = out.v * out.g1;
  out.d2 = out.v * (out.g2 + out.g1 * out.g1);
  return out;
}

CharSquareProfile::CharSquareProfile(double mu) : mu_(mu) {
  if (!(mu > 0)) throw Error(ErrorKind::InvalidParams, "char-square profile needs mu > 0");
}

EtaJet CharSquareProfile::jet(double t2, double t3) const {
  EtaJet j;
  j.value = (std::abs(t2) < mu_ && std::abs(t3) < mu_) ? 0.0 : 1.0;
  return j;
}

bool CharSquareProfile::smooth_at(double t2, double t3) const {
  const bool on_edge2 = std::abs(t2) == mu_ && std::abs(t3) <= mu_;
  const bool on_edge3 = std::abs(t3) == mu_ && std::abs(t2) <= mu_;
  return !(on_edge2 || on_edge3);
}

ConvexSumProfile::ConvexSumProfile(Bump1D phi) : phi_(phi) {}

EtaJet ConvexSumProfile::jet(double t2, double t3) const {
  const auto b = phi_.eval(t2 + t3);
  return {b.v, b.d1, b.d1, b.d2, b.d2, b.d2};
}

std::optional<LogJet> ConvexSumProfile::log_jet(double t2, double t3) const {
  const auto b = phi_.eval(t2 + t3);
  if (b.v <= 0) return std::nullopt;
  return LogJet{b.g, b.g1, b.g1, b.g2, b.g2, b.g2};
}

SeparableProfile::SeparableProfile(Bump1D phi, Bump1D psi) : phi_(phi), psi_(psi) {}

EtaJet SeparableProfile::jet(double t2, double t3) const {
  const auto a = phi_.eval(t2);
  const auto b = psi_.eval(t3);
  return {a.v + b.v, a.d1, b.d1, a.d2, 0.0, b.d2};
}

std::optional<Box> SeparableProfile::sublevel_box() const {
  return Box{-phi_.mu_prime, phi_.mu_prime, -psi_.mu_prime, psi_.mu_prime};
}

double SeparableProfile::flat_mu() const { return std::min(phi_.mu, psi_.mu); }

MainProfileParams MainProfileParams::from_factors(double mu, double b_factor, double a_over_b) {
  MainProfileParams p;
  p.mu = mu;
  p.B_plus = p.B_minus = std::sqrt(b_factor * 2 * std::exp(mu));
  p.A_plus = p.A_minus = a_over_b * p.B_plus;
  return p;
}

void MainProfileParams::validate(bool require_c) const {
  const double floor2 = 2 * std::exp(mu);
  auto fail = [](const char* msg) { throw Error(ErrorKind::InvalidParams, msg); };
  if (!(mu > 0)) fail("mu must be positive");
  // Relative slack so that B^2 = 2e^mu computed in floating point is accepted.
  if (!(B_plus * B_plus >= floor2 * (1 - 1e-14)) || !(B_minus * B_minus >= floor2 * (1 - 1e-14)))
    fail("B^2 must be at least 2e^mu");
  if (!(A_plus > B_plus) || !(A_minus > B_minus)) fail("A must exceed B");
  if (require_c && (!(c_plus > 0) || !(c_minus > 0))) fail("c must be positive");
}

ExpSummand::ExpSummand(int sign, double A, double B, double c, double mu)
    : sign_(sign >= 0 ? 1 : -1), A2_(A * A), B2_(B * B), c_(c), mu_(mu) {}

std::optional<LogJet> ExpSummand::log_jet(double t2, double t3) const {
  const double u2 = std::exp(sign_ * t2), u3 = std::exp(sign_ * t3);
  const double P = u2 + u3 - B2_;
  if (P <= 0) return std::nullopt;
  LogJet L;
  L.f = c_ / (A2_ - B2_) - c_ / P;
  const double P2 = P * P, P3 = P2 * P;
  L.f2 = sign_ * c_ * u2 / P2;
  L.f3 = sign_ * c_ * u3 / P2;
  L.f22 = c_ * u2 * (P - 2 * u2) / P3;
  L.f33 = c_ * u3 * (P - 2 * u3) / P3;
  L.f23 = -2 * c_ * u2 * u3 / P3;
  return L;
}

EtaJet ExpSummand::jet(double t2, double t3) const {
  const auto L = log_jet(t2, t3);
  if (!L || L->f < kUnderflowExponent) return {};
  const double e = std::exp(L->f);
  return {e,
          e * L->f2,
          e * L->f3,
          e * (L->f2 * L->f2 + L->f22),
          e * (L->f2 * L->f3 + L->f23),
          e * (L->f3 * L->f3 + L->f33)};
}

MainProfile::MainProfile(const MainProfileParams& params)
    : params_(params),
      plus_(+1, params.A_plus, params.B_plus, params.c_plus, params.mu),
      minus_(-1, params.A_minus, params.B_minus, params.c_minus, params.mu) {
  params_.validate(true);
}

EtaJet MainProfile::jet(double t2, double t3) const {
  EtaJet j = plus_.jet(t2, t3);
  j += minus_.jet(t2, t3);
  return j;
}

ProfileDerivBundle MainProfile::bundle(double t2, double t3) const {
  ProfileDerivBundle b;
  b.plus = plus_.jet(t2, t3);
  b.minus = minus_.jet(t2, t3);
  b.total = b.plus;
  b.total += b.minus;
  b.f_plus = plus_.log_jet(t2, t3);
  b.f_minus = minus_.log_jet(t2, t3);
  return b;
}

std::optional<Box> MainProfile::sublevel_box() const {
  return Box{-2 * std::log(params_.A_minus), 2 * std::log(params_.A_plus),
             -2 * std::log(params_.A_minus), 2 * std::log(params_.A_plus)};
}

EtaPtr make_zero_profile() { return std::make_shared<ZeroProfile>(); }

EtaPtr make_char_square_profile(double mu) { return std::make_shared<CharSquareProfile>(mu); }

EtaPtr make_convex_sum_profile(double mu, double mu_prime) {
  return std::make_shared<ConvexSumProfile>(Bump1D::make(mu, mu_prime));
}

EtaPtr make_separable_profile(double mu, double mu_prime) {
  const Bump1D b = Bump1D::make(mu, mu_prime);
  return std::make_shared<SeparableProfile>(b, b);
}

std::shared_ptr<const MainProfile> make_main_profile(const MainProfileParams& params) {
  return std::make_shared<MainProfile>(params);
}

bool CompactLevelSet::contains(double t2, double t3) const {
  return profile->value(t2, t3) <= 1.0;
}

CompactLevelSet level_set_compact(const MainProfileParams& params) {
  auto prof = make_main_profile(params);
  return {*prof->sublevel_box(), prof};
}

std::optional<double> find_level_on_ray(const EtaProfile& eta, double theta, double level,
                                        double r_max) {
  const double c = std::cos(theta), s = std::sin(theta);
  auto g = [&](double r) { return eta.value(r * c, r * s) - level; };
  if (g(r_max) < 0) return std::nullopt;
  double lo = 0, hi = r_max;
  if (g(lo) >= 0) return lo;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0 ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace worm3
