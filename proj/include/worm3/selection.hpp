#pragma once

#include "worm3/eta_profiles.hpp"
#include "worm3/exec.hpp"

namespace worm3 {

struct ArgMax {
  double value = 0, t2 = 0, t3 = 0;
  double grid_value = 0;  // before local refinement
};

struct SelectionOptions {
  int grid = 400;
  double delta = 0.05;
  int refine_starts = 5;
};

struct SelectionResult {
  ArgMax M_plus, M_minus, N_plus, N_minus;
  double c_plus = 0, c_minus = 0;
  MainProfileParams params;  // input shape with the chosen c filled in
};

/// Coefficients of the bilinear lower bound
/// a11 c+ c- + a10 c+ + a01 c- + a00 for the mixed term of the two summands.
struct AlphaCoeffs {
  double a11 = 0, a10 = 0, a01 = 0, a00 = 0;
};

/// c-independent compact set {e^t2 + e^t3 <= A+^2, e^-t2 + e^-t3 <= A-^2}.
bool in_selection_set(const MainProfileParams& p, double t2, double t3);
/// Selection set restricted to x >= B+^2 B-^2 / 4 or x <= 4 / (B+^2 B-^2).
bool in_mixed_region(const MainProfileParams& p, double t2, double t3);

AlphaCoeffs alpha_coefficients(const MainProfileParams& p, double t2, double t3);

/// Objectives return NaN outside their region.
double M_objective(int sign, const MainProfileParams& p, double t2, double t3);
double N_plus_objective(const MainProfileParams& p, double t2, double t3);
double N_minus_objective(const MainProfileParams& p, double c_plus, double t2, double t3);

/// Throws GridTooCoarse when refinement moves a maximum by more than 1%.
SelectionResult select_constants(const MainProfileParams& shape,
                                 const SelectionOptions& opt = {},
                                 Exec exec = Exec::parallel);

}  // namespace worm3
