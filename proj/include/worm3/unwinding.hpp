#pragma once

#include "worm3/geometry.hpp"

namespace worm3 {

struct Unwound {
  cplx w1, w2, w3;
};

/// l(z) = Log(z1 e^{-iL}) + iL with the principal logarithm.
/// Throws BranchViolation if z1 e^{-iL} lies on (-inf, 0].
cplx ell(const Point3& p);

Unwound unwind(const Point3& p);
Point3 wind(const Unwound& w);

/// E_kappa(z) = exp(kappa l(z)).
cplx eval_E(cplx kappa, const Point3& p);

/// Membership in the model domain D_mu.
bool in_model_domain(const Point3& p, double mu);

}  // namespace worm3
