#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "constants.hpp"
#include "numerics.hpp"
#include "susceptibility.hpp"

namespace embody {

// Im chi tabulated on the uniform grid w_k = k * omega_max / (n - 1).
// The table must extend far enough that Im chi(omega_max) is negligible.
struct ImChiTable {
  double omega_max = 0.0;
  std::vector<double> values;

  double spacing() const {
    return omega_max / static_cast<double>(values.size() - 1);
  }
};

inline ImChiTable tabulate_im_chi(const SusceptibilityModel& model,
                                  double omega_max, std::size_t n,
                                  ResponseFamily family = ResponseFamily::electric) {
  if (n < 8) throw std::invalid_argument("tabulate_im_chi: need n >= 8");
  ImChiTable t;
  t.omega_max = omega_max;
  t.values.resize(n);
  const double h = omega_max / static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k)
    t.values[k] = im_chi(model, static_cast<double>(k) * h, family);
  return t;
}

struct KkResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
};

// Dispersion integral
//   Re chi(W) = (2/pi) P int_0^inf  w Im chi(w) / (w^2 - W^2) dw,
// rewritten over the full line with the odd extension Im chi(-w) = -Im chi(w)
// and evaluated on nodes placed symmetrically about W, half a spacing off it,
// so the pole contributions cancel pairwise.  The error estimate compares the
// sum against the same rule at doubled spacing.
inline KkResult kk_real_from_imag(const ImChiTable& table, double Omega,
                                  double tolerance = 1e-3) {
  const std::size_t n = table.values.size();
  if (n < 8) throw std::invalid_argument("kk_real_from_imag: table too small");
  if (!(Omega >= 0.0) || Omega >= table.omega_max)
    throw std::domain_error("kk_real_from_imag: Omega must lie inside the grid");

  const double h = table.spacing();
  const UniformCubicInterpolant interp(table.values, h);
  // odd extension; zero beyond the table
  auto im = [&](double w) {
    return w >= 0.0 ? interp(w) : -interp(-w);
  };

  auto pair_sum = [&](double step) {
    const double reach = table.omega_max + Omega + step;
    const std::size_t jmax =
        static_cast<std::size_t>(std::ceil(reach / step)) + 1;
    double s = 0.0;
    for (std::size_t j = 1; j <= jmax; ++j) {
      const double d = (static_cast<double>(j) - 0.5) * step;
      s += (im(Omega + d) - im(Omega - d)) / d;
    }
    return s * step / pi;
  };

  KkResult r;
  r.value = pair_sum(h);
  const double coarse = pair_sum(2.0 * h);
  r.error_estimate = std::abs(r.value - coarse) / 3.0;

  // reference scale: the largest Im chi on the table
  double scale = 0.0;
  for (double v : table.values) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) scale = 1.0;
  r.converged = r.error_estimate <= tolerance * scale;
  return r;
}

}  // namespace embody
