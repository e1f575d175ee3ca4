#include "worm3/sector.hpp"

#include <numbers>
#include <vector>

#include "worm3/errors.hpp"

namespace worm3 {

namespace {

std::vector<cplx> roots_of_unity(int N) {
  std::vector<cplx> r(N);
  for (int n = 0; n < N; ++n) r[n] = std::polar(1.0, 2 * std::numbers::pi * n / N);
  return r;
}

// e^{-i m theta_n} via index arithmetic, so characters are exact roots of unity.
cplx character(const std::vector<cplx>& r, int m, int n) {
  const int N = static_cast<int>(r.size());
  long long idx = (-static_cast<long long>(m) * n) % N;
  if (idx < 0) idx += N;
  return r[idx];
}

}  // namespace

cplx sector_project(const PointFunction& F, int j, int k, const Point3& p, int N) {
  if (N < 1) throw Error(ErrorKind::InvalidParams, "node count must be positive");
  const auto r = roots_of_unity(N);
  cplx acc = 0;
  for (int n2 = 0; n2 < N; ++n2) {
    cplx row = 0;
    for (int n3 = 0; n3 < N; ++n3)
      row += F(Point3(p.z1, r[n2] * p.z2, r[n3] * p.z3)) * character(r, k, n3);
    acc += row * character(r, j, n2);
  }
  return acc / (static_cast<double>(N) * N);
}

PointFunction theta2_average(PointFunction F, int j, int N) {
  if (N < 1) throw Error(ErrorKind::InvalidParams, "node count must be positive");
  return [F = std::move(F), j, N](const Point3& p) {
    const auto r = roots_of_unity(N);
    cplx acc = 0;
    for (int n = 0; n < N; ++n) acc += F(Point3(p.z1, r[n] * p.z2, p.z3)) * character(r, j, n);
    return acc / static_cast<double>(N);
  };
}

}  // namespace worm3
