#pragma once

namespace worm3 {

/// S(a, x) = sinh(a x) / x, with S(a, 0) = a.
double sinh_ratio(double a, double x);

/// The weight omega_{j,k} on the strip |Im| < beta = 2 mu + pi/2.
struct StripWeight {
  double mu = 0;
  int j = -1, k = -1;

  double beta() const;
  /// omega(y) by closed-form piecewise integration of the triple convolution.
  double spatial(double y) const;
  /// alpha~(xi) = integral of omega(y) e^{-2 y xi} dy, closed product form.
  double spectral(double xi) const;
  /// Total mass, equal to spectral(0).
  double mass() const { return spectral(0.0); }
};

inline double weight_spatial(const StripWeight& w, double y) { return w.spatial(y); }
inline double weight_spectral(const StripWeight& w, double xi) { return w.spectral(xi); }

}  // namespace worm3
