#include "worm3/cauchy.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "worm3/errors.hpp"
#include "worm3/unwinding.hpp"

namespace worm3 {

namespace {

constexpr double kPi = std::numbers::pi;

struct Node {
  cplx zeta;
  double sign;
};

std::vector<Node> contour_nodes(const AnnulusContour& c) {
  std::vector<Node> out;
  out.reserve(2 * c.nodes);
  for (double R : {c.outer(), c.inner()}) {
    const double sign = R == c.outer() ? 1.0 : -1.0;
    for (int n = 0; n < c.nodes; ++n)
      out.push_back({std::polar(R, 2 * kPi * (n + 0.5) / c.nodes), sign});
  }
  return out;
}

}  // namespace

double AnnulusContour::inner() const { return std::exp(a / 2); }
double AnnulusContour::outer() const { return std::exp(a / 2 + kPi); }

double AnnulusContour::clearance(cplx z) const {
  const double r = std::abs(z);
  return std::min((r - inner()) / inner(), (outer() - r) / outer());
}

cplx cauchy_extend(const PointFunction& f, double a, const Point3& p, double mu, int nodes,
                   Exec exec) {
  if (!(a > -mu / 2 && a < mu / 2 - 2 * kPi))
    throw Error(ErrorKind::OutOfRange, "a outside (-mu/2, mu/2 - 2 pi)");
  if (std::abs(p.z1 - std::polar(1.0, 2 * a)) >= 1)
    throw Error(ErrorKind::InvalidPoint, "z1 outside the disk around e^{2ia}");
  const AnnulusContour c{a, nodes};
  if (c.clearance(p.z2) < 0.05 || c.clearance(p.z3) < 0.05)
    throw Error(ErrorKind::TooCloseToContour, "z2 or z3 within 5% of a contour circle");

  const auto zs = contour_nodes(c);
  const long long n = static_cast<long long>(zs.size());
  std::vector<cplx> rows(zs.size());
  // (1/2 pi i) \oint g dz over a circle = mean of g(zeta) zeta over equispaced nodes.
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (long long i = 0; i < n; ++i) {
    const Node& u = zs[i];
    cplx acc = 0;
    for (const Node& v : zs)
      acc += v.sign * f(Point3(p.z1, u.zeta, v.zeta)) * v.zeta / (v.zeta - p.z3);
    rows[i] = u.sign * acc * u.zeta / (u.zeta - p.z2);
  }
  cplx total = 0;
  for (const cplx& r : rows) total += r;
  return total / (static_cast<double>(nodes) * nodes);
}

NebenhulleReport nebenhulle_report(double mu, int nodes, Exec exec) {
  if (!(mu > 4 * kPi)) throw Error(ErrorKind::InvalidParams, "requires mu > 4 pi");
  NebenhulleReport rep;
  rep.mu = mu;
  rep.a = 0.5 * (-mu / 2 + mu / 2 - 2 * kPi);
  rep.nodes = nodes;
  const double a = rep.a;
  const double r = std::exp(a / 2 + kPi / 2);
  const Point3 inside(std::polar(1.0, 2 * a), r, r * std::polar(1.0, kPi / 4));
  // |z_j|^2 = e^{a + pi/2}: still in the extension region, but L = 2a + pi puts
  // e^{iL} opposite e^{2ia}, so the point is outside the worm.
  const double ro = std::exp(a / 2 + kPi / 4);
  const Point3 outside(std::polar(1.0, 2 * a), ro, ro * std::polar(1.0, -kPi / 3));

  struct Mono {
    int p1, p2, p3;
  };
  const std::vector<Mono> monos{{0, 0, 0},  {1, 0, 0},  {1, 3, -2}, {0, -1, 0}, {0, 0, 2},
                                {2, 1, 1},  {0, -3, 3}, {-1, 2, 0}, {1, -2, -2}, {3, 4, -1}};
  auto mono_name = [](const Mono& m) {
    std::ostringstream os;
    os << "z1^" << m.p1 << " z2^" << m.p2 << " z3^" << m.p3;
    return os.str();
  };
  auto add_row = [&](const std::string& name, const std::string& where, const Point3& p,
                     const PointFunction& f, bool extendable) {
    NebenhulleRow row;
    row.function = name;
    row.point = where;
    row.in_worm = std::abs(p.z1 - std::polar(1.0, p.L)) < 1 && std::abs(p.t2()) < mu &&
                  std::abs(p.t3()) < mu;
    row.extendable = extendable;
    row.extended = cauchy_extend(f, a, p, mu, nodes, exec);
    row.direct = f(p);
    row.rel_mismatch = std::abs(row.extended - row.direct) / std::max(std::abs(row.direct), 1e-300);
    row.pass = extendable ? row.rel_mismatch <= 1e-9 : row.rel_mismatch > 1e-3;
    rep.rows.push_back(row);
  };

  for (const Mono& m : monos) {
    const PointFunction f = [m](const Point3& q) {
      return std::pow(q.z1, m.p1) * std::pow(q.z2, m.p2) * std::pow(q.z3, m.p3);
    };
    add_row(mono_name(m), "interior", inside, f, true);
  }
  for (const Mono& m : {monos[2], monos[8]}) {
    const PointFunction f = [m](const Point3& q) {
      return std::pow(q.z1, m.p1) * std::pow(q.z2, m.p2) * std::pow(q.z3, m.p3);
    };
    add_row(mono_name(m), "outside_worm", outside, f, true);
  }
  const std::vector<std::pair<std::string, cplx>> kappas{
      {"E_1/2", cplx(0.5, 0)}, {"E_-1/3", cplx(-1.0 / 3, 0)}, {"E_i", cplx(0, 1)}};
  for (const auto& [name, kappa] : kappas) {
    const PointFunction f = [kappa](const Point3& q) { return eval_E(kappa, q); };
    add_row(name, "interior", inside, f, false);
  }
  rep.verdict = true;
  for (const auto& row : rep.rows) rep.verdict = rep.verdict && row.pass;
  return rep;
}

}  // namespace worm3
