#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "constants.hpp"
#include "numerics.hpp"
#include "susceptibility.hpp"

namespace embody {

// Gaussian centre-of-mass packet (alpha/pi)^{3/4} exp(-(alpha/2)(R-R0)^2).
struct WavePacketParams {
  double mass = 0.0;    // kg
  double alpha = 0.0;   // 1/m^2, inverse squared width
  double centre = 0.0;  // m

  void validate() const {
    if (!(mass > 0.0) || !(alpha > 0.0))
      throw std::invalid_argument("WavePacketParams: need mass > 0, alpha > 0");
  }

  double kappa() const { return hbar * alpha / mass; }  // 1/s
};

// T_s = M / (hbar alpha), the time for the variance to double.
inline double spreading_time(double mass, double alpha) {
  if (!(mass > 0.0) || !(alpha > 0.0))
    throw std::invalid_argument("spreading_time: need mass > 0, alpha > 0");
  return mass / (hbar * alpha);
}

// sigma^2(t) = (1 + (hbar alpha t / M)^2) / (2 alpha), per axis.
inline double packet_variance(const WavePacketParams& p, double t) {
  p.validate();
  if (t < 0.0) throw std::domain_error("packet_variance: t must be >= 0");
  const double s = p.kappa() * t;
  return (1.0 + s * s) / (2.0 * p.alpha);
}

// Oscillatory pair-creation factor
//   F(t, W, W') = e^{i th t} - [1/(1 + i k t)] [1 + k (e^{i th t} - 1)/th],
// th = W + W', k = hbar alpha / M.  F(0) = 0; k -> 0 gives e^{i th t} - 1.
inline std::complex<double> f_factor(double t, double omega1, double omega2,
                                     double kappa) {
  if (t < 0.0) throw std::domain_error("f_factor: t must be >= 0");
  if (!(omega1 > 0.0) || !(omega2 > 0.0))
    throw std::domain_error("f_factor: frequencies must be > 0");
  const double th = omega1 + omega2;
  const std::complex<double> e(std::cos(th * t), std::sin(th * t));
  const std::complex<double> gate = 1.0 + kappa * (e - 1.0) / th;
  return e - gate / std::complex<double>(1.0, kappa * t);
}

// Two-frequency weight of the pair-creation term.  Either a separable kernel
// W(W) W(W') tabulated on a uniform grid, or a full symmetric table S(W, W').
// The scale field carries the matrix-element magnitude that fixes the units
// of the envelope; the shape is what the dynamics tests exercise.
struct FluctuationKernel {
  std::vector<double> omega;    // uniform ascending grid, > 0
  std::vector<double> weight;   // W(omega_k) for the separable form
  std::vector<double> table;    // optional row-major S(w_i, w_j); empty = separable
  double scale = 1.0;

  bool separable() const { return table.empty(); }

  void validate() const {
    if (omega.size() < 2)
      throw std::invalid_argument("FluctuationKernel: need >= 2 grid points");
    if (weight.size() != omega.size() && separable())
      throw std::invalid_argument("FluctuationKernel: weight/grid size mismatch");
    if (!separable() && table.size() != omega.size() * omega.size())
      throw std::invalid_argument("FluctuationKernel: table size mismatch");
    for (std::size_t k = 0; k < omega.size(); ++k) {
      if (omega[k] <= 0.0 || (k && omega[k] <= omega[k - 1]))
        throw std::invalid_argument("FluctuationKernel: grid must be ascending, > 0");
    }
  }

  double spacing() const { return omega[1] - omega[0]; }

  double value(std::size_t i, std::size_t j) const {
    return separable() ? weight[i] * weight[j]
                       : table[i * omega.size() + j];
  }
};

// Default kernel shape for a dielectric body: W(w) proportional to
// w Im chi(w), normalized to unit integral over the grid.
inline FluctuationKernel default_kernel(const SusceptibilityModel& model,
                                        double omega_max, std::size_t n,
                                        double scale = 1.0) {
  if (n < 2) throw std::invalid_argument("default_kernel: need n >= 2");
  FluctuationKernel k;
  k.scale = scale;
  k.omega.resize(n);
  k.weight.resize(n);
  const double h = omega_max / static_cast<double>(n);
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = h * static_cast<double>(i + 1);  // open grid, no w = 0
    k.omega[i] = w;
    k.weight[i] = w * im_chi(model, w, ResponseFamily::electric);
    norm += k.weight[i] * h;
  }
  if (norm > 0.0)
    for (double& v : k.weight) v /= norm;
  return k;
}

struct PacketDiagnostics {
  std::vector<double> t;
  std::vector<double> variance;    // m^2
  std::vector<double> mean_shift;  // m
  std::vector<double> envelope;    // kernel-scale units
};

// Fluctuation envelope
//   A(t) = scale * int dW dW' S(W,W') |F(t,W,W')| / (hbar (W + W')).
// F depends on W + W' only, so a separable kernel factorizes through the
// autocorrelation C(th) = int dW W(W) W(th - W) before the modulus is taken.
inline std::vector<double> fluctuation_envelope(const FluctuationKernel& kernel,
                                                const WavePacketParams& params,
                                                const std::vector<double>& t_grid) {
  kernel.validate();
  params.validate();
  const double kap = params.kappa();
  const std::size_t n = kernel.omega.size();
  const double h = kernel.spacing();
  std::vector<double> out(t_grid.size(), 0.0);

  if (kernel.separable()) {
    // C(th_m) on the doubled grid, th = w_i + w_j
    std::vector<double> corr(2 * n - 1, 0.0);
    std::vector<double> theta(2 * n - 1, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        corr[i + j] += kernel.weight[i] * kernel.weight[j] * h * h;
    for (std::size_t m = 0; m < corr.size(); ++m)
      theta[m] = kernel.omega[0] * 2.0 + h * static_cast<double>(m);
    for (std::size_t s = 0; s < t_grid.size(); ++s) {
      double acc = 0.0;
      for (std::size_t m = 0; m < corr.size(); ++m) {
        if (corr[m] == 0.0) continue;
        const double th = theta[m];
        acc += corr[m] *
               std::abs(f_factor(t_grid[s], 0.5 * th, 0.5 * th, kap)) /
               (hbar * th);
      }
      out[s] = kernel.scale * acc;
    }
    return out;
  }

  for (std::size_t s = 0; s < t_grid.size(); ++s) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const double sv = kernel.value(i, j);
        if (sv == 0.0) continue;
        acc += sv *
               std::abs(f_factor(t_grid[s], kernel.omega[i], kernel.omega[j], kap)) /
               (hbar * (kernel.omega[i] + kernel.omega[j])) * h * h;
      }
    out[s] = kernel.scale * acc;
  }
  return out;
}

// Ehrenfest contract: the packet mean accelerates as F / M, whether the
// force is a classical surface-stress record or a vacuum (Casimir) pressure
// times the illuminated area.
inline double mean_acceleration(double force, const WavePacketParams& params) {
  params.validate();
  return force / params.mass;
}

// Scalar ordering channel: the classical stand-in for the divergence of the
// effective vector potential, from a caller-supplied Gamma(R) by central
// differences.  Reported separately from the envelope.
inline double gamma_divergence(const std::function<double(double)>& gamma_of_r,
                               double r0, double dr) {
  if (!(dr > 0.0)) throw std::invalid_argument("gamma_divergence: need dr > 0");
  return (gamma_of_r(r0 + dr) - gamma_of_r(r0 - dr)) / (2.0 * dr);
}

// Diagnostics series for a packet under constant acceleration.
inline PacketDiagnostics packet_diagnostics(const WavePacketParams& params,
                                            const FluctuationKernel& kernel,
                                            const std::vector<double>& t_grid,
                                            double acceleration) {
  PacketDiagnostics d;
  d.t = t_grid;
  d.variance.reserve(t_grid.size());
  d.mean_shift.reserve(t_grid.size());
  for (double t : t_grid) {
    d.variance.push_back(packet_variance(params, t));
    d.mean_shift.push_back(0.5 * acceleration * t * t);
  }
  d.envelope = fluctuation_envelope(kernel, params, t_grid);
  return d;
}

}  // namespace embody
