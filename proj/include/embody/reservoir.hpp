#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "numerics.hpp"
#include "susceptibility.hpp"

namespace embody {

// Discrete stand-in for the continuum of reservoir oscillators: Gauss-Legendre
// nodes w_j on [0, omega_max] with couplings a_j = alpha(w_j) sqrt(weight_j).
// The rescaled amplitudes X_j = sqrt(weight_j) X_{w_j} turn every continuum
// integral over omega into a plain sum over j.
struct ReservoirDiscretization {
  std::vector<double> omega;       // strictly increasing, all > 0
  std::vector<double> weight;      // rad/s
  std::vector<double> coupling_e;  // electric family a_j
  std::vector<double> coupling_b;  // magnetic family a_j
  double omega_max = 0.0;
  std::size_t requested_n = 0;
  bool raised = false;  // true when n was increased to meet the horizon

  std::size_t size() const { return omega.size(); }
  bool empty() const { return omega.empty(); }

  double min_spacing() const {
    if (omega.size() < 2) return std::numeric_limits<double>::infinity();
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j < omega.size(); ++j)
      d = std::min(d, omega[j] - omega[j - 1]);
    return d;
  }

  // Time at which the discrete reservoir stops mimicking the continuum.
  double recurrence_time() const {
    const double d = min_spacing();
    return d > 0.0 && std::isfinite(d) ? 2.0 * pi / d
                                       : std::numeric_limits<double>::infinity();
  }
};

struct ReservoirOptions {
  std::size_t hard_limit = 1u << 16;  // refuse to raise n beyond this
  double max_tail_fraction = 1e-4;    // Im chi(omega_max) / peak allowed
};

// omega_max at which the model's absorption has decayed to cutoff * peak.
inline double default_reservoir_omega_max(const SusceptibilityModel& model,
                                          double cutoff = 1e-6) {
  return response_cutoff_frequency(model, cutoff);
}

// Builds the discrete reservoir.  n is raised (doubling) until the recurrence
// time exceeds the horizon; throws if that would exceed opts.hard_limit.
inline ReservoirDiscretization discretize_reservoir(
    const SusceptibilityModel& model, std::size_t n, double omega_max,
    double horizon, const ReservoirOptions& opts = {}) {
  model.validate();
  ReservoirDiscretization r;
  r.requested_n = n;
  r.omega_max = omega_max;
  if (model.is_vacuum()) return r;  // empty node set, P identically 0

  if (n < 2) throw std::invalid_argument("discretize_reservoir: n must be >= 2");
  if (!(omega_max > 0.0))
    throw std::invalid_argument("discretize_reservoir: omega_max must be > 0");

  // tail check: the grid must cover essentially all absorption
  double peak = 0.0;
  const double probe_top = response_cutoff_frequency(model, 1e-3);
  for (int k = 1; k <= 256; ++k) {
    const double w = omega_max * k / 256.0;
    peak = std::max(peak, im_chi(model, w, ResponseFamily::electric) +
                              im_chi(model, w, ResponseFamily::magnetic));
  }
  const double tail = im_chi(model, omega_max, ResponseFamily::electric) +
                      im_chi(model, omega_max, ResponseFamily::magnetic);
  if (probe_top > omega_max && tail > opts.max_tail_fraction * peak)
    throw std::invalid_argument(
        "discretize_reservoir: Im chi(omega_max) is not negligible; "
        "raise omega_max");

  while (true) {
    const Quadrature1D q = gauss_legendre(n, 0.0, omega_max);
    r.omega = q.nodes;
    r.weight = q.weights;
    if (r.recurrence_time() > horizon) break;
    if (2 * n > opts.hard_limit)
      throw std::runtime_error(
          "discretize_reservoir: horizon demands more nodes than the hard "
          "limit allows");
    n *= 2;
    r.raised = true;
  }

  r.coupling_e.resize(r.size());
  r.coupling_b.resize(r.size());
  for (std::size_t j = 0; j < r.size(); ++j) {
    const double sw = std::sqrt(r.weight[j]);
    r.coupling_e[j] =
        coupling_alpha(model, r.omega[j], ResponseFamily::electric) * sw;
    r.coupling_b[j] =
        coupling_alpha(model, r.omega[j], ResponseFamily::magnetic) * sw;
  }
  return r;
}

// Exact memory kernel of a Lorentz-pole sum: response P(t) = int K(t-t') E(t') dt'
// with K(T) = sum_p plasma^2 e^{-damping T/2} sin(nu T)/nu, nu = sqrt(res^2 - damping^2/4).
// Used as the independent convolution oracle for the discretized reservoir.
inline double lorentz_memory_kernel(const SusceptibilityModel& model, double T,
                                    ResponseFamily family = ResponseFamily::electric) {
  if (T < 0.0) return 0.0;
  double k = 0.0;
  for (const LorentzPole& p : model.poles(family)) {
    const double disc = p.resonance * p.resonance - 0.25 * p.damping * p.damping;
    const double amp = p.plasma * p.plasma * std::exp(-0.5 * p.damping * T);
    if (disc > 0.0) {
      const double nu = std::sqrt(disc);
      k += amp * std::sin(nu * T) / nu;
    } else if (disc < 0.0) {  // overdamped
      const double nu = std::sqrt(-disc);
      k += amp * std::sinh(nu * T) / nu;
    } else {
      k += amp * T;
    }
  }
  return k;
}

}  // namespace embody
