#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "greens.hpp"
#include "numerics.hpp"

namespace embody {

// Node counts for the (xi, k_par) quadrature of the vacuum-stress integral.
// xi runs over (0, inf) through xi = -xi_scale ln v with Gauss-Legendre nodes
// on v in (0,1) (open rule: no node at xi = 0, where Drude-type eps(i xi)
// diverges).  At fixed xi the transverse integral is taken over kappa =
// sqrt(k_par^2 + xi^2/c^2) via u = kappa d and v = exp(-2(u - u_min)), which
// makes the exponentially decaying integrand uniformly smooth in the gap size.
struct QuadratureSpec {
  std::size_t n_xi = 48;
  std::size_t n_k = 48;
  double xi_scale = 0.0;     // rad/s; 0 = choose c/(2 d_char) automatically
  double tolerance = 5e-3;   // relative doubling change accepted as converged
};

struct StressResult {
  double value = 0.0;           // Pa
  double error_estimate = 0.0;  // Pa, |doubled nodes - base nodes|
  bool converged = true;
  std::size_t n_xi = 0, n_k = 0;
};

struct CasimirResult {
  double pressure = 0.0;        // Pa, negative = attractive
  double error_estimate = 0.0;  // Pa
  bool converged = true;
  std::size_t n_xi = 0, n_k = 0;
};

namespace detail {

// Regularized vacuum-stress integrand [tau - (1/2) tr(tau)]_xx at (xi, kpar),
// assembled from the layer scattering amplitudes.  The wall terms u1, u2
// carry the coefficient (c^2 k_L^2 - W^2)/2 (TE) and 0 (TM): both vanish in
// vacuum, which is the divergence-free statement that makes the gap stress
// uniform and the stress in outer free space identically zero.
inline double stress_xx_integrand(const LayerStack& stack,
                                  const StackWaves& w, double x) {
  const auto s = layer_scattering(stack, w, x, x);
  const std::size_t L = stack.locate(x);
  const cplx em = w.eps[L] * w.mu[L];  // exactly 1 in vacuum
  const cplx W2 = w.omega * w.omega;
  const double c2kp2 = c_light * c_light * w.kpar * w.kpar;

  // written in terms of eps*mu so the wall-term coefficient vanishes exactly
  // in free space (the divergence-free property of the regularized stress)
  const cplx coeff_m_te = 0.5 * W2 * (em - 1.0);
  const cplx coeff_a_te = c2kp2 - 0.5 * W2 * (em + 1.0);
  const cplx coeff_a_tm = c2kp2 / em - 0.5 * W2 * (em + 1.0);

  const cplx m_te = s.u1[0] + s.u2[0];
  const cplx a_te = s.w3[0] + s.w4[0];
  const cplx a_tm = s.w3[1] + s.w4[1];

  const cplx sum = (coeff_m_te * m_te + coeff_a_te * a_te) / s.den[0] +
                   coeff_a_tm * a_tm / s.den[1];
  const cplx val = s.mu * mu_0 * cplx(0.0, 0.5) / s.q * sum;
  return val.real();
}

inline double characteristic_distance(const LayerStack& stack, double x) {
  const std::size_t L = stack.locate(x);
  const Layer& lay = stack.layer(L);
  if (std::isfinite(lay.thickness)) return lay.thickness;
  const double edge = L == 0 ? stack.interface_position(0)
                             : stack.interface_position(L - 1);
  return std::max(std::abs(x - edge), 1e-30);
}

inline double stress_xx_once(const LayerStack& stack, double x,
                             std::size_t n_xi, std::size_t n_k,
                             double xi_scale, unsigned threads) {
  const double d_char = characteristic_distance(stack, x);
  const double xi0 = xi_scale > 0.0 ? xi_scale : 0.5 * c_light / d_char;
  const Quadrature1D qxi = gauss_legendre(n_xi, 0.0, 1.0);
  const Quadrature1D qk = gauss_legendre(n_k, 0.0, 1.0);

  auto outer = [&](std::size_t i) {
    const double v = qxi.nodes[i];
    const double xi = -xi0 * std::log(v);
    const double w_xi = xi0 * qxi.weights[i] / v;
    const double kappa_min = xi / c_light;
    double inner = 0.0;
    const auto waves_template = Frequency::imaginary_axis(xi);
    for (std::size_t j = 0; j < n_k; ++j) {
      const double vk = qk.nodes[j];
      const double u = kappa_min * d_char - 0.5 * std::log(vk);
      const double kappa = u / d_char;
      const double kp2 = kappa * kappa - kappa_min * kappa_min;
      const double kpar = kp2 > 0.0 ? std::sqrt(kp2) : 0.0;
      // k dk = kappa dkappa, dkappa = dv / (2 v d_char)
      const double w_k = qk.weights[j] * kappa / (2.0 * vk * d_char);
      const auto w = stack_waves(stack, waves_template, kpar);
      inner += w_k * stress_xx_integrand(stack, w, x);
    }
    return w_xi * inner;
  };

  const auto per_xi = indexed_map(n_xi, threads, outer);
  return hbar * eps_0 / (pi * 2.0 * pi) * ordered_sum(per_xi);
}

}  // namespace detail

// Regularized vacuum stress sigma_xx at point x (off-interface) in a planar
// stack, by imaginary-frequency integration of the subtracted Green function.
// The value at the doubled node count is returned; the difference against the
// base count is the error estimate.
inline StressResult vacuum_stress_xx(const LayerStack& stack, double x,
                                     const QuadratureSpec& quad = {},
                                     unsigned threads = 1) {
  StressResult r;
  const double v1 = detail::stress_xx_once(stack, x, quad.n_xi, quad.n_k,
                                           quad.xi_scale, threads);
  const double v2 = detail::stress_xx_once(stack, x, 2 * quad.n_xi,
                                           2 * quad.n_k, quad.xi_scale, threads);
  r.value = v2;
  r.error_estimate = std::abs(v2 - v1);
  r.n_xi = 2 * quad.n_xi;
  r.n_k = 2 * quad.n_k;
  r.converged = r.error_estimate <= quad.tolerance * std::abs(v2) ||
                r.error_estimate == 0.0;
  return r;
}

// Net vacuum pressure on either of two half-spaces separated by a vacuum gap
// of width d.  Negative = attraction.  The gap-side stress alone carries the
// force: the stress in the outer free space vanishes identically.
inline CasimirResult casimir_pressure_halfspaces(
    const SusceptibilityModel& left, const SusceptibilityModel& right,
    double d, const QuadratureSpec& quad = {}, unsigned threads = 1) {
  if (!(d > 0.0))
    throw std::invalid_argument("casimir_pressure_halfspaces: need d > 0");
  const LayerStack stack({half_space(left), vacuum_gap(d), half_space(right)});
  const StressResult s = vacuum_stress_xx(stack, 0.5 * d, quad, threads);
  CasimirResult r;
  r.pressure = -s.value;
  r.error_estimate = s.error_estimate;
  r.converged = s.converged;
  r.n_xi = s.n_xi;
  r.n_k = s.n_k;
  return r;
}

// Net vacuum force per unit area on a single slab surrounded by vacuum:
// difference of the outer-face stresses.  Contract: numerically zero.
inline double net_vacuum_force_isolated(const SusceptibilityModel& slab,
                                        double thickness,
                                        const QuadratureSpec& quad = {},
                                        unsigned threads = 1) {
  if (!(thickness > 0.0))
    throw std::invalid_argument("net_vacuum_force_isolated: need thickness > 0");
  const LayerStack stack(
      {vacuum_half_space(), slab_layer(slab, thickness), vacuum_half_space()});
  const double margin = 0.25 * thickness;
  const StressResult right =
      vacuum_stress_xx(stack, thickness + margin, quad, threads);
  const StressResult left = vacuum_stress_xx(stack, -margin, quad, threads);
  return right.value - left.value;
}

// Ideal-mirror Lifshitz pressure, the closed-form oracle -pi^2 hbar c/(240 d^4).
inline double ideal_mirror_pressure(double d) {
  return -pi * pi * hbar * c_light / (240.0 * d * d * d * d);
}

}  // namespace embody
