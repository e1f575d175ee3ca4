#pragma once

#include <string>
#include <vector>

#include "worm3/exec.hpp"
#include "worm3/sector.hpp"

namespace worm3 {

/// Annulus e^{a/2} < |z| < e^{a/2 + pi}; outer circle counterclockwise, inner clockwise.
struct AnnulusContour {
  double a = 0;
  int nodes = 512;

  double inner() const;
  double outer() const;
  /// Distance from z to the nearer circle relative to that circle's radius.
  double clearance(cplx z) const;
};

/// F_a(p): iterated Cauchy integral of f over the boundaries of the fiber annuli
/// in z2 and z3, with z1 held fixed.
cplx cauchy_extend(const PointFunction& f, double a, const Point3& p, double mu, int nodes = 512,
                   Exec exec = Exec::parallel);

struct NebenhulleRow {
  std::string function;
  std::string point;
  bool in_worm = false;
  bool extendable = false;
  cplx extended, direct;
  double rel_mismatch = 0;
  bool pass = false;
};

struct NebenhulleReport {
  double mu = 0, a = 0;
  int nodes = 0;
  std::vector<NebenhulleRow> rows;
  bool verdict = false;
};

/// Runs F_a on Laurent monomials (expected to reproduce) and on E_kappa for
/// non-integer kappa (expected to fail) at a deep interior point, plus the
/// monomials at a point of the extension region outside the worm.
NebenhulleReport nebenhulle_report(double mu, int nodes = 512, Exec exec = Exec::parallel);

}  // namespace worm3
