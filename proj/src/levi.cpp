#include "worm3/levi.hpp"

#include <cmath>

#include "worm3/errors.hpp"

namespace worm3 {

namespace {

const cplx I(0.0, 1.0);

}  // namespace

IneqValues ineq_values_from_jet(const EtaJet& j) {
  IneqValues r;
  const double dd = j.d2 - j.d3;
  r.ineq1 = j.value + j.d22;
  r.ineq3 = j.d22 * j.d33 - j.d23 * j.d23 + j.value * (j.d22 + j.d33 - 2 * j.d23) - dd * dd;
  r.scale1 = std::abs(j.value) + std::abs(j.d22);
  r.scale3 = std::abs(j.d22 * j.d33) + j.d23 * j.d23 +
             std::abs(j.value) * (std::abs(j.d22) + std::abs(j.d33) + 2 * std::abs(j.d23)) +
             dd * dd;
  return r;
}

IneqValues ineq_values(const EtaProfile& eta, double t2, double t3) {
  if (!eta.smooth_at(t2, t3)) throw Error(ErrorKind::NonSmoothPoint, "profile not smooth here");
  return ineq_values_from_jet(eta.jet(t2, t3));
}

HermitianForm2 matrix_C(const EtaJet& j) {
  HermitianForm2 c;
  c.a = j.value + j.d22;
  c.d = j.value + j.d33;
  c.b = cplx(j.value + j.d23, j.d2 - j.d3);
  return c;
}

HessianPair hessian_matrices(const Point3& p, const EtaProfile& eta) {
  p.require_L();
  const double t2 = p.t2(), t3 = p.t3();
  if (!eta.smooth_at(t2, t3)) throw Error(ErrorKind::NonSmoothPoint, "profile not smooth here");
  const EtaJet j = eta.jet(t2, t3);
  const cplx z1 = p.z1, z2 = p.z2, z3 = p.z3;
  const cplx z1b = std::conj(z1), z2b = std::conj(z2), z3b = std::conj(z3);
  const double a1 = std::norm(z1), a2 = std::norm(z2), a3 = std::norm(z3);

  HessianPair out;
  auto& M = out.M.m;
  M(0, 0) = 1.0;
  M(0, 1) = I * z1b / z2b;
  M(0, 2) = I * z1b / z3b;
  M(1, 0) = -I * z1 / z2;
  M(1, 1) = a1 / a2;
  M(1, 2) = a1 / (z2 * z3b);
  M(2, 0) = -I * z1 / z3;
  M(2, 1) = a1 / (z2b * z3);
  M(2, 2) = a1 / a3;

  auto& N = out.N.m;
  N.setZero();
  N(1, 1) = (j.value + j.d22) / a2;
  N(1, 2) = (j.value + j.d23 + I * (j.d2 - j.d3)) / (z2 * z3b);
  N(2, 1) = (j.value + j.d23 + I * (j.d3 - j.d2)) / (z2b * z3);
  N(2, 2) = (j.value + j.d33) / a3;
  return out;
}

LeviData restricted_levi(const Point3& p, const EtaProfile& eta) {
  LeviData out;
  out.frame = tangent_frame(p, eta);
  const HermitianForm3 H = hessian_matrices(p, eta).sum();
  const Vec3c& v = out.frame.v;
  const Vec3c& w = out.frame.w;
  out.form.a = H.h(v, v).real();
  out.form.d = H.h(w, w).real();
  out.form.b = H.h(v, w);
  out.eig = out.form.eigenvalues();
  out.norm = out.form.frobenius();
  return out;
}

LogFormValues logform_values(const LogJet& f) {
  LogFormValues r;
  r.hvv = f.f22 * f.f3 * f.f3 - 2 * f.f23 * f.f2 * f.f3 + f.f33 * f.f2 * f.f2;
  r.det = f.f22 * f.f33 - f.f23 * f.f23;
  r.huu = f.f22 - 2 * f.f23 + f.f33;
  r.ineq4 = f.f2 * f.f2 + f.f22 + 1;
  r.ineq6 = r.hvv + r.det + r.huu;
  return r;
}

LogFormValues logform_check(const LogFormProfile& prof, double t2, double t3) {
  const auto f = prof.log_jet(t2, t3);
  if (!f) throw Error(ErrorKind::OutsideSupport, "point outside the summand support");
  return logform_values(*f);
}

double p_value(const EtaJet& j) { return ineq_values_from_jet(j).ineq3; }

PDecomposition p_decompose(const EtaJet& j0, const EtaJet& j1) {
  EtaJet t = j0;
  t += j1;
  PDecomposition r;
  r.P_total = p_value(t);
  r.P0 = p_value(j0);
  r.P1 = p_value(j1);
  r.mixed_hessian = j0.d22 * j1.d33 + j1.d22 * j0.d33 - 2 * j0.d23 * j1.d23;
  const double hu0 = j0.d22 + j0.d33 - 2 * j0.d23;
  const double hu1 = j1.d22 + j1.d33 - 2 * j1.d23;
  r.weighted_u = j0.value * hu1 + j1.value * hu0;
  r.gradient_cross = -2 * (j0.d2 - j0.d3) * (j1.d2 - j1.d3);
  r.printed_det_cross = j0.value * (j1.d22 * j1.d33 - j1.d23 * j1.d23) +
                        j1.value * (j0.d22 * j0.d33 - j0.d23 * j0.d23);
  r.residual = r.P_total - (r.P0 + r.P1 + r.mixed_hessian + r.weighted_u + r.gradient_cross);
  r.scale = ineq_values_from_jet(t).scale3 + ineq_values_from_jet(j0).scale3 +
            ineq_values_from_jet(j1).scale3 + std::abs(r.mixed_hessian) +
            std::abs(r.weighted_u) + std::abs(r.gradient_cross);
  r.identity_holds = std::abs(r.residual) <= 1e-10 * r.scale;
  return r;
}

PDecomposition p_functional(const EtaProfile& eta0, const EtaProfile& eta1, double t2,
                            double t3) {
  if (!eta0.smooth_at(t2, t3) || !eta1.smooth_at(t2, t3))
    throw Error(ErrorKind::NonSmoothPoint, "summand not smooth here");
  return p_decompose(eta0.jet(t2, t3), eta1.jet(t2, t3));
}

}  // namespace worm3
