#pragma once

#include <array>

#include "worm3/eta_profiles.hpp"
#include "worm3/geometry.hpp"
#include "worm3/hermitian.hpp"

namespace worm3 {

/// Left-hand sides of the two pseudoconvexity inequalities, each with the sum
/// of absolute values of its terms as a scale for relative tolerances.
struct IneqValues {
  double ineq1 = 0, ineq3 = 0;
  double scale1 = 0, scale3 = 0;
};

IneqValues ineq_values_from_jet(const EtaJet& j);
IneqValues ineq_values(const EtaProfile& eta, double t2, double t3);

/// The 2x2 matrix C acting on the (n2, n3) coordinates.
HermitianForm2 matrix_C(const EtaJet& j);

struct HessianPair {
  HermitianForm3 M, N;
  HermitianForm3 sum() const { return {M.m + N.m}; }
};

/// Complex Hessian pieces of the local defining function, without the factor
/// e^{arg (z2 z3)^2}. Entry (j,k) is d^2/dz_j dzbar_k.
HessianPair hessian_matrices(const Point3& p, const EtaProfile& eta);

struct LeviData {
  HermitianForm2 form;
  std::array<double, 2> eig{};  // ascending
  double norm = 0;              // Frobenius norm of form
  TangentFrame frame;
};

LeviData restricted_levi(const Point3& p, const EtaProfile& eta);

struct LogFormValues {
  double ineq4 = 0, ineq6 = 0;
  double hvv = 0, det = 0, huu = 0;
};

LogFormValues logform_values(const LogJet& f);
/// Throws OutsideSupport when the point is not in the support of the summand.
LogFormValues logform_check(const LogFormProfile& prof, double t2, double t3);

/// P(eta) = det H + eta h_H(u,u) - (eta2 - eta3)^2 with u = (1,-1).
double p_value(const EtaJet& j);

struct PDecomposition {
  double P_total = 0, P0 = 0, P1 = 0;
  double mixed_hessian = 0;   // H0_22 H1_33 + H1_22 H0_33 - 2 H0_23 H1_23
  double weighted_u = 0;      // eta0 h_{H1}(u,u) + eta1 h_{H0}(u,u)
  double gradient_cross = 0;  // -2 (eta0_2 - eta0_3)(eta1_2 - eta1_3)
  double printed_det_cross = 0;  // eta0 det H1 + eta1 det H0, for comparison
  double residual = 0;
  double scale = 0;
  bool identity_holds = false;  // |residual| <= 1e-10 scale
};

PDecomposition p_decompose(const EtaJet& j0, const EtaJet& j1);
PDecomposition p_functional(const EtaProfile& eta0, const EtaProfile& eta1, double t2,
                            double t3);

}  // namespace worm3
