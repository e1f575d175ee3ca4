#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>

namespace worm3 {

/// Value, gradient and Hessian of a profile at (t2, t3).
struct EtaJet {
  double value = 0, d2 = 0, d3 = 0, d22 = 0, d23 = 0, d33 = 0;

  EtaJet& operator+=(const EtaJet& o);
};

/// Derivatives of f where the profile equals exp(f).
struct LogJet {
  double f = 0, f2 = 0, f3 = 0, f22 = 0, f23 = 0, f33 = 0;
};

struct Box {
  double t2_lo = 0, t2_hi = 0, t3_lo = 0, t3_hi = 0;

  bool contains(double t2, double t3) const {
    return t2 >= t2_lo && t2 <= t2_hi && t3 >= t3_lo && t3 <= t3_hi;
  }
  /// Box scaled about its center by (1 + frac).
  Box dilated(double frac) const;
  Box intersect(const Box& o) const;
};

/// Conditions (I) smoothness, (II) gradient nonvanishing on {eta = 1},
/// (III) bounded sublevel set {eta <= 1}.
struct ProfileFlags {
  bool smooth = true;
  bool gradient_on_level_one = true;
  bool bounded_sublevel = false;
};

class EtaProfile {
 public:
  virtual ~EtaProfile() = default;

  virtual EtaJet jet(double t2, double t3) const = 0;
  virtual std::string name() const = 0;
  virtual ProfileFlags flags() const = 0;
  /// Whether the value 1 is attained, i.e. there are arcs with z1 = e^{iL}.
  virtual bool attains_one() const = 0;
  virtual bool smooth_at(double, double) const { return true; }
  /// A box enclosing {eta <= 1} when that set is bounded.
  virtual std::optional<Box> sublevel_box() const { return std::nullopt; }
  /// Half-width of the square on which the profile vanishes (0 if none).
  virtual double flat_mu() const = 0;

  double value(double t2, double t3) const { return jet(t2, t3).value; }
  std::array<double, 2> grad(double t2, double t3) const;
  /// (eta22, eta23, eta33)
  std::array<double, 3> hess(double t2, double t3) const;
};

using EtaPtr = std::shared_ptr<const EtaProfile>;

/// Profiles written as exp(f) on their support expose the log derivatives.
class LogFormProfile {
 public:
  virtual ~LogFormProfile() = default;
  virtual std::optional<LogJet> log_jet(double t2, double t3) const = 0;
};

/// phi(t) = exp(c/(mu'^2 - mu^2) - c/(t^2 - mu^2)) for |t| > mu, else 0.
struct Bump1D {
  double mu = 0, mu_prime = 0, c = 0;

  struct Jet {
    double v = 0, d1 = 0, d2 = 0;
    double g = 0, g1 = 0, g2 = 0;  // log derivatives, valid when v > 0
  };

  static Bump1D make(double mu, double mu_prime);
  Jet eval(double t) const;
};

class ZeroProfile final : public EtaProfile {
 public:
  EtaJet jet(double, double) const override { return {}; }
  std::string name() const override { return "zero"; }
  ProfileFlags flags() const override { return {true, true, false}; }
  bool attains_one() const override { return false; }
  double flat_mu() const override { return 0.0; }
};

class CharSquareProfile final : public EtaProfile {
 public:
  explicit CharSquareProfile(double mu);
  EtaJet jet(double t2, double t3) const override;
  std::string name() const override { return "char_square"; }
  ProfileFlags flags() const override { return {false, false, false}; }
  bool attains_one() const override { return true; }
  bool smooth_at(double t2, double t3) const override;
  double flat_mu() const override { return mu_; }

 private:
  double mu_;
};

class ConvexSumProfile final : public EtaProfile, public LogFormProfile {
 public:
  explicit ConvexSumProfile(Bump1D phi);
  EtaJet jet(double t2, double t3) const override;
  std::optional<LogJet> log_jet(double t2, double t3) const override;
  std::string name() const override { return "convex_sum"; }
  ProfileFlags flags() const override { return {true, true, false}; }
  bool attains_one() const override { return true; }
  double flat_mu() const override { return 0.0; }
  const Bump1D& phi() const { return phi_; }

 private:
  Bump1D phi_;
};

class SeparableProfile final : public EtaProfile {
 public:
  SeparableProfile(Bump1D phi, Bump1D psi);
  EtaJet jet(double t2, double t3) const override;
  std::string name() const override { return "separable"; }
  ProfileFlags flags() const override { return {true, true, true}; }
  bool attains_one() const override { return true; }
  std::optional<Box> sublevel_box() const override;
  double flat_mu() const override;
  const Bump1D& phi() const { return phi_; }
  const Bump1D& psi() const { return psi_; }

 private:
  Bump1D phi_, psi_;
};

struct MainProfileParams {
  double mu = 0;
  double A_plus = 0, A_minus = 0, B_plus = 0, B_minus = 0;
  double c_plus = 0, c_minus = 0;

  /// B^2 = b_factor * 2e^mu on both sides, A = a_over_b * B.
  static MainProfileParams from_factors(double mu, double b_factor, double a_over_b);
  /// Throws InvalidParams; c is only checked when require_c.
  void validate(bool require_c = true) const;
};

/// One summand chi(s > B^2) exp(f) with s = e^{sign t2} + e^{sign t3}.
class ExpSummand final : public EtaProfile, public LogFormProfile {
 public:
  ExpSummand(int sign, double A, double B, double c, double mu);
  EtaJet jet(double t2, double t3) const override;
  std::optional<LogJet> log_jet(double t2, double t3) const override;
  std::string name() const override { return sign_ > 0 ? "eta_plus" : "eta_minus"; }
  ProfileFlags flags() const override { return {true, true, false}; }
  bool attains_one() const override { return true; }
  double flat_mu() const override { return mu_; }
  int sign() const { return sign_; }

 private:
  int sign_;
  double A2_, B2_, c_, mu_;
};

struct ProfileDerivBundle {
  EtaJet total, plus, minus;
  std::optional<LogJet> f_plus, f_minus;
};

class MainProfile final : public EtaProfile {
 public:
  explicit MainProfile(const MainProfileParams& params);
  EtaJet jet(double t2, double t3) const override;
  ProfileDerivBundle bundle(double t2, double t3) const;
  std::string name() const override { return "main"; }
  ProfileFlags flags() const override { return {true, true, true}; }
  bool attains_one() const override { return true; }
  std::optional<Box> sublevel_box() const override;
  double flat_mu() const override { return params_.mu; }
  const MainProfileParams& params() const { return params_; }
  const ExpSummand& plus() const { return plus_; }
  const ExpSummand& minus() const { return minus_; }

 private:
  MainProfileParams params_;
  ExpSummand plus_, minus_;
};

EtaPtr make_zero_profile();
EtaPtr make_char_square_profile(double mu);
EtaPtr make_convex_sum_profile(double mu, double mu_prime);
EtaPtr make_separable_profile(double mu, double mu_prime);
std::shared_ptr<const MainProfile> make_main_profile(const MainProfileParams& params);

/// K = {eta <= 1} for the main profile, with its enclosing box.
struct CompactLevelSet {
  Box box;
  std::shared_ptr<const MainProfile> profile;
  bool contains(double t2, double t3) const;
};

CompactLevelSet level_set_compact(const MainProfileParams& params);

/// Radius r along direction theta from the origin where eta crosses level,
/// by bisection on [0, r_max]. Empty if eta(r_max) < level.
std::optional<double> find_level_on_ray(const EtaProfile& eta, double theta, double level,
                                        double r_max);

}  // namespace worm3
