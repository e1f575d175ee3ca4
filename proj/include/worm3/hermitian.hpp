#pragma once

#include <array>
#include <complex>

#include <Eigen/Core>

namespace worm3 {

/// [[a, b], [conj(b), d]] with a, d real.
struct HermitianForm2 {
  double a = 0, d = 0;
  std::complex<double> b = 0;

  /// Ascending eigenvalues from the quadratic formula; the smaller root is
  /// recovered through det / larger root to avoid cancellation.
  std::array<double, 2> eigenvalues() const;
  double det() const { return a * d - std::norm(b); }
  double frobenius() const;
  /// h(u, v) = u^t M conj(v)
  std::complex<double> h(const Eigen::Vector2cd& u, const Eigen::Vector2cd& v) const;
};

struct HermitianForm3 {
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();

  std::complex<double> h(const Eigen::Vector3cd& u, const Eigen::Vector3cd& v) const {
    return u.transpose() * m * v.conjugate();
  }
  /// max |m(j,k) - conj(m(k,j))|
  double hermitian_defect() const;
  std::array<double, 3> eigenvalues() const;
  double frobenius() const { return m.norm(); }
  /// All principal minors >= -tol * (matching power of the Frobenius norm).
  bool is_psd(double rel_tol) const;
};

}  // namespace worm3
