#pragma once

#include <functional>

#include "worm3/geometry.hpp"

namespace worm3 {

using PointFunction = std::function<cplx(const Point3&)>;

/// Q_{j,k}F(p): N x N trapezoid over the torus orbit of p, weighted by the
/// conjugate characters. Exact for trigonometric polynomials of degree < N.
cplx sector_project(const PointFunction& F, int j, int k, const Point3& p, int N = 64);

/// The theta2-average alone, as a new function: (1/N) sum F(z1, e^{i t} z2, z3) e^{-i j t}.
PointFunction theta2_average(PointFunction F, int j, int N = 64);

}  // namespace worm3
