#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

namespace worm3 {

/// 20-point Gauss-Legendre nodes and weights on panels of width <= max_width
/// covering [a, b], appended to out.
inline void append_gauss_panels(double a, double b, double max_width,
                                std::vector<std::pair<double, double>>& out) {
  using GL = boost::math::quadrature::gauss<double, 20>;
  if (!(b > a)) return;
  const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / max_width)));
  const double w = (b - a) / panels;
  const auto& x = GL::abscissa();
  const auto& wt = GL::weights();
  for (int p = 0; p < panels; ++p) {
    const double c = a + (p + 0.5) * w, r = 0.5 * w;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) {
        out.emplace_back(c, r * wt[i]);
        continue;
      }
      out.emplace_back(c - r * x[i], r * wt[i]);
      out.emplace_back(c + r * x[i], r * wt[i]);
    }
  }
}

}  // namespace worm3
