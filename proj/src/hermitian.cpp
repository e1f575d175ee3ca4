#include "worm3/hermitian.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace worm3 {

std::array<double, 2> HermitianForm2::eigenvalues() const {
  const double m = 0.5 * (a + d);
  const double r = std::hypot(0.5 * (a - d), std::abs(b));
  if (m == 0 && r == 0) return {0.0, 0.0};
  if (m >= 0) {
    const double hi = m + r;
    return {det() / hi, hi};
  }
  const double lo = m - r;
  return {lo, det() / lo};
}

double HermitianForm2::frobenius() const { return std::sqrt(a * a + d * d + 2 * std::norm(b)); }

std::complex<double> HermitianForm2::h(const Eigen::Vector2cd& u,
                                       const Eigen::Vector2cd& v) const {
  const std::complex<double> bc = std::conj(b);
  const std::complex<double> v0 = std::conj(v(0)), v1 = std::conj(v(1));
  return u(0) * (a * v0 + b * v1) + u(1) * (bc * v0 + d * v1);
}

double HermitianForm3::hermitian_defect() const {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

std::array<double, 3> HermitianForm3::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(m, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return {ev(0), ev(1), ev(2)};
}

bool HermitianForm3::is_psd(double rel_tol) const {
  const double s = frobenius();
  for (int j = 0; j < 3; ++j)
    if (m(j, j).real() < -rel_tol * s) return false;
  for (int j = 0; j < 3; ++j)
    for (int k = j + 1; k < 3; ++k) {
      const double minor = m(j, j).real() * m(k, k).real() - std::norm(m(j, k));
      if (minor < -rel_tol * s * s) return false;
    }
  return m.determinant().real() >= -rel_tol * s * s * s;
}

}  // namespace worm3
