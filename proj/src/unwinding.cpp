#include "worm3/unwinding.hpp"

#include <cmath>

#include "worm3/errors.hpp"

namespace worm3 {

cplx ell(const Point3& p) {
  p.require_L();
  const cplx w = p.z1 * std::polar(1.0, -p.L);
  if (w.imag() == 0 && w.real() <= 0)
    throw Error(ErrorKind::BranchViolation, "z1 e^{-iL} on the non-positive real axis");
  return std::log(w) + cplx(0, p.L);
}

Unwound unwind(const Point3& p) { return {ell(p), p.z2, p.z3}; }

Point3 wind(const Unwound& w) { return Point3(std::exp(w.w1), w.w2, w.w3); }

cplx eval_E(cplx kappa, const Point3& p) { return std::exp(kappa * ell(p)); }

bool in_model_domain(const Point3& p, double mu) {
  if (!p.has_L()) return false;
  const cplx w = p.z1 * std::polar(1.0, -p.L);
  return w.real() > 0 && std::abs(p.t2()) < mu && std::abs(p.t3()) < mu;
}

}  // namespace worm3
