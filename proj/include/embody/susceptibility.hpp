#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "constants.hpp"

namespace embody {

// One resonance of a causal Lorentz-oscillator response,
//   chi(W) = plasma^2 / (resonance^2 - W^2 - i*damping*W).
struct LorentzPole {
  double plasma = 0.0;     // rad/s
  double resonance = 0.0;  // rad/s
  double damping = 0.0;    // rad/s, must be > 0 (passivity)
};

enum class ResponseFamily { electric, magnetic };

// Causal linear response as Lorentz-pole sums.  Both pole sums are
// dimensionless: chi_EE is measured in units of eps_0 and chi_BB in units
// of 1/mu_0, so eps(W) = eps_0 (1 + chiE(W)) and 1/mu(W) = (1/mu_0)(1 - chiB(W)).
struct SusceptibilityModel {
  std::vector<LorentzPole> electric;
  std::vector<LorentzPole> magnetic;

  const std::vector<LorentzPole>& poles(ResponseFamily f) const {
    return f == ResponseFamily::electric ? electric : magnetic;
  }

  bool is_vacuum() const { return electric.empty() && magnetic.empty(); }

  // Throws std::invalid_argument on a pole violating
  // plasma >= 0, resonance >= 0, damping > 0.
  void validate() const {
    auto check = [](const std::vector<LorentzPole>& ps, const char* which) {
      for (const LorentzPole& p : ps) {
        if (!(p.plasma >= 0.0) || !(p.resonance >= 0.0) || !(p.damping > 0.0))
          throw std::invalid_argument(
              std::string("susceptibility model: invalid ") + which +
              " pole (need plasma >= 0, resonance >= 0, damping > 0)");
      }
    };
    check(electric, "electric");
    check(magnetic, "magnetic");
  }
};

// chi(W) on the closed upper half plane.  Rejects Im W < 0, where the
// causal response is not defined.
inline std::complex<double> eval_chi(const SusceptibilityModel& model,
                                     std::complex<double> Omega,
                                     ResponseFamily family) {
  if (Omega.imag() < 0.0)
    throw std::domain_error("eval_chi: Omega must satisfy Im(Omega) >= 0");
  std::complex<double> chi = 0.0;
  const std::complex<double> i(0.0, 1.0);
  for (const LorentzPole& p : model.poles(family)) {
    chi += p.plasma * p.plasma /
           (p.resonance * p.resonance - Omega * Omega - i * p.damping * Omega);
  }
  return chi;
}

// Im chi at real frequency, evaluated without cancellation.
inline double im_chi(const SusceptibilityModel& model, double omega,
                     ResponseFamily family) {
  double im = 0.0;
  for (const LorentzPole& p : model.poles(family)) {
    const double d = p.resonance * p.resonance - omega * omega;
    const double g = p.damping * omega;
    im += p.plasma * p.plasma * g / (d * d + g * g);
  }
  return im;
}

inline double re_chi(const SusceptibilityModel& model, double omega,
                     ResponseFamily family) {
  double re = 0.0;
  for (const LorentzPole& p : model.poles(family)) {
    const double d = p.resonance * p.resonance - omega * omega;
    const double g = p.damping * omega;
    re += p.plasma * p.plasma * d / (d * d + g * g);
  }
  return re;
}

// chi(i xi): real, positive, monotonically decreasing for xi > 0.
inline double chi_imag_axis(const SusceptibilityModel& model, double xi,
                            ResponseFamily family) {
  if (xi < 0.0) throw std::domain_error("chi_imag_axis: xi must be >= 0");
  double chi = 0.0;
  for (const LorentzPole& p : model.poles(family)) {
    chi += p.plasma * p.plasma /
           (p.resonance * p.resonance + xi * xi + p.damping * xi);
  }
  return chi;
}

// Reservoir coupling alpha(w) = sqrt(2 w Im chi(w) / pi); zero where Im chi = 0.
inline double coupling_alpha(const SusceptibilityModel& model, double omega,
                             ResponseFamily family) {
  if (omega < 0.0) throw std::domain_error("coupling_alpha: omega must be >= 0");
  if (omega == 0.0) return 0.0;
  return std::sqrt(2.0 * omega * im_chi(model, omega, family) / pi);
}

// Relative permittivity / permeability at real frequency.
inline std::complex<double> eps_rel(const SusceptibilityModel& m,
                                    std::complex<double> Omega) {
  return 1.0 + eval_chi(m, Omega, ResponseFamily::electric);
}

inline std::complex<double> mu_rel(const SusceptibilityModel& m,
                                   std::complex<double> Omega) {
  return 1.0 / (1.0 - eval_chi(m, Omega, ResponseFamily::magnetic));
}

// Same on the imaginary axis, evaluated in real arithmetic.
inline double eps_rel_imag_axis(const SusceptibilityModel& m, double xi) {
  return 1.0 + chi_imag_axis(m, xi, ResponseFamily::electric);
}

inline double mu_rel_imag_axis(const SusceptibilityModel& m, double xi) {
  return 1.0 / (1.0 - chi_imag_axis(m, xi, ResponseFamily::magnetic));
}

// Frequency beyond which Im chi (both families) stays below
// cutoff * max(Im chi).  Scans upward from the highest resonance.
inline double response_cutoff_frequency(const SusceptibilityModel& model,
                                        double cutoff = 1e-6) {
  if (model.is_vacuum()) return 0.0;
  double w_top = 0.0, peak = 0.0;
  for (auto fam : {ResponseFamily::electric, ResponseFamily::magnetic}) {
    for (const LorentzPole& p : model.poles(fam)) {
      const double w_ref = p.resonance > 0.0 ? p.resonance : p.damping;
      w_top = std::max(w_top, p.resonance + p.damping);
      for (double s : {0.5, 0.8, 1.0, 1.2, 2.0})
        peak = std::max(peak, im_chi(model, s * w_ref, fam));
    }
  }
  double w = std::max(w_top, 1e-30);
  const double threshold = cutoff * peak;
  for (int iter = 0; iter < 4000; ++iter) {
    const double imE = im_chi(model, w, ResponseFamily::electric);
    const double imB = im_chi(model, w, ResponseFamily::magnetic);
    if (imE + imB < threshold) return w;
    w *= 1.02;
  }
  return w;
}

}  // namespace embody
