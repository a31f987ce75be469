#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include "constants.hpp"
#include "susceptibility.hpp"

namespace embody {

using cplx = std::complex<double>;

// Frequency argument of a Green-function evaluation: either a real frequency
// Omega or a point i*xi on the positive imaginary axis.  On the imaginary
// axis every derived quantity (q, r, Gbar) stays exactly real by arithmetic
// structure: squares of i*xi and products with real eps, mu never leave the
// real axis.
struct Frequency {
  double value = 0.0;  // Omega [rad/s] or xi [rad/s]
  bool imag_axis = false;

  static Frequency real_axis(double omega) { return {omega, false}; }
  static Frequency imaginary_axis(double xi) { return {xi, true}; }

  cplx omega() const { return imag_axis ? cplx(0.0, value) : cplx(value, 0.0); }
};

// One planar layer; terminal layers are half-infinite.
struct Layer {
  SusceptibilityModel medium;
  double thickness = std::numeric_limits<double>::infinity();  // m
};

inline Layer half_space(SusceptibilityModel m) { return {std::move(m)}; }
inline Layer slab_layer(SusceptibilityModel m, double t) { return {std::move(m), t}; }
inline Layer vacuum_gap(double t) { return {SusceptibilityModel{}, t}; }
inline Layer vacuum_half_space() { return {SusceptibilityModel{}}; }

// Layers ordered along +x.  The first interface sits at x = 0; interface i
// separates layers i and i+1.
class LayerStack {
 public:
  explicit LayerStack(std::vector<Layer> layers) : layers_(std::move(layers)) {
    if (layers_.size() < 2)
      throw std::invalid_argument("LayerStack: need at least two layers");
    if (std::isfinite(layers_.front().thickness) ||
        std::isfinite(layers_.back().thickness))
      throw std::invalid_argument(
          "LayerStack: terminal layers must be half-infinite");
    for (std::size_t i = 1; i + 1 < layers_.size(); ++i)
      if (!(layers_[i].thickness > 0.0) || !std::isfinite(layers_[i].thickness))
        throw std::invalid_argument(
            "LayerStack: interior layers need finite positive thickness");
    for (const Layer& l : layers_) l.medium.validate();
    positions_.resize(layers_.size() - 1);
    positions_[0] = 0.0;
    for (std::size_t i = 1; i < positions_.size(); ++i)
      positions_[i] = positions_[i - 1] + layers_[i].thickness;
  }

  std::size_t size() const { return layers_.size(); }
  std::size_t interfaces() const { return positions_.size(); }
  const Layer& layer(std::size_t i) const { return layers_.at(i); }
  double interface_position(std::size_t i) const { return positions_.at(i); }
  double total_interior_thickness() const { return positions_.back(); }

  // Layer containing x; evaluation exactly on an interface is an error.
  std::size_t locate(double x) const {
    const double scale =
        std::max(1.0, std::abs(positions_.back()) + std::abs(positions_.front()));
    for (std::size_t i = 0; i < positions_.size(); ++i) {
      if (std::abs(x - positions_[i]) < 1e-12 * scale)
        throw std::domain_error(
            "LayerStack::locate: evaluation point lies on an interface");
      if (x < positions_[i]) return i;
    }
    return layers_.size() - 1;
  }

 private:
  std::vector<Layer> layers_;
  std::vector<double> positions_;
};

namespace detail {

// Per-layer wave parameters at one (frequency, k_par) point.
struct StackWaves {
  cplx omega;               // frequency argument as a complex number
  double kpar = 0.0;        // transverse wavenumber [1/m]
  std::vector<cplx> eps;    // relative permittivity eps(W)
  std::vector<cplx> mu;     // relative permeability mu(W)
  std::vector<cplx> q;      // longitudinal wavenumber, Im q >= 0
  std::vector<cplx> phase;  // exp(2 i q t) across interior layers, 1 at ends
  // effective reflections per polarization {TE, TM}:
  // looking_right[p][i]: everything right of interface i, seen from layer i
  // looking_left[p][i]:  everything left of interface i, seen from layer i+1
  std::array<std::vector<cplx>, 2> looking_right;
  std::array<std::vector<cplx>, 2> looking_left;
};

// Fresnel coefficient at the interface from layer a into layer b.
// Both polarizations reduce to (n_a - n_b)/(n_a + n_b) at normal incidence.
inline cplx fresnel(const StackWaves& w, std::size_t a, std::size_t b, int pol) {
  if (pol == 0)  // TE
    return (w.mu[b] * w.q[a] - w.mu[a] * w.q[b]) /
           (w.mu[b] * w.q[a] + w.mu[a] * w.q[b]);
  return (w.eps[a] * w.q[b] - w.eps[b] * w.q[a]) /
         (w.eps[a] * w.q[b] + w.eps[b] * w.q[a]);
}

inline StackWaves stack_waves(const LayerStack& stack, Frequency f, double kpar) {
  if (kpar < 0.0) throw std::domain_error("stack_waves: kpar must be >= 0");
  if (!f.imag_axis && f.value < 0.0)
    throw std::domain_error("stack_waves: frequency must be >= 0");
  const std::size_t n = stack.size();
  StackWaves w;
  w.omega = f.omega();
  w.kpar = kpar;
  w.eps.resize(n);
  w.mu.resize(n);
  w.q.resize(n);
  w.phase.assign(n, cplx(1.0, 0.0));
  const cplx w2_c2 = w.omega * w.omega / (c_light * c_light);
  for (std::size_t i = 0; i < n; ++i) {
    w.eps[i] = eps_rel(stack.layer(i).medium, w.omega);
    w.mu[i] = mu_rel(stack.layer(i).medium, w.omega);
    cplx q = std::sqrt(w.eps[i] * w.mu[i] * w2_c2 - kpar * kpar);
    if (q.imag() < 0.0) q = -q;  // decaying / outgoing branch
    w.q[i] = q;
    if (std::isfinite(stack.layer(i).thickness))
      w.phase[i] = std::exp(cplx(0.0, 2.0) * q * stack.layer(i).thickness);
  }

  const std::size_t ni = stack.interfaces();
  for (int pol = 0; pol < 2; ++pol) {
    auto& right = w.looking_right[pol];
    auto& left = w.looking_left[pol];
    right.resize(ni);
    left.resize(ni);
    right[ni - 1] = fresnel(w, ni - 1, ni, pol);
    for (std::size_t k = ni - 1; k-- > 0;) {
      const cplx rho = fresnel(w, k, k + 1, pol);
      const cplx rp = right[k + 1] * w.phase[k + 1];
      right[k] = (rho + rp) / (1.0 + rho * rp);
    }
    left[0] = fresnel(w, 1, 0, pol);
    for (std::size_t k = 1; k < ni; ++k) {
      const cplx rho = fresnel(w, k + 1, k, pol);
      const cplx lp = left[k - 1] * w.phase[k];
      left[k] = (rho + lp) / (1.0 + rho * lp);
    }
  }
  return w;
}

// Scattering-wave amplitudes of the regularized Green function for x, x'
// inside layer L: Gbar is exactly the multiply-reflected part, the primary
// wave and its delta term cancel against the homogeneous G0 of the layer.
struct LayerScattering {
  cplx q;              // longitudinal wavenumber in the layer
  cplx mu;             // relative permeability of the layer
  cplx k2;             // q^2 + kpar^2 = eps mu W^2 / c^2
  // per polarization {TE, TM}:
  std::array<cplx, 2> u1;  // r_left  exp(i q (l + l'))
  std::array<cplx, 2> u2;  // r_right exp(i q (2t - l - l'))
  std::array<cplx, 2> w3;  // r_l r_r exp(2iqt) exp(+i q (l - l'))
  std::array<cplx, 2> w4;  // r_l r_r exp(2iqt) exp(-i q (l - l'))
  std::array<cplx, 2> den;  // 1 - r_l r_r exp(2 i q t)
};

inline LayerScattering layer_scattering(const LayerStack& stack,
                                        const StackWaves& w, double x,
                                        double xp) {
  const std::size_t L = stack.locate(x);
  if (stack.locate(xp) != L)
    throw std::domain_error("green_regularized: x and x' must share a layer");
  LayerScattering s;
  s.q = w.q[L];
  s.mu = w.mu[L];
  s.k2 = w.eps[L] * w.mu[L] * w.omega * w.omega / (c_light * c_light);

  const bool has_left = L > 0;
  const bool has_right = L + 1 < stack.size();
  const double xl = has_left ? stack.interface_position(L - 1) : 0.0;
  const double xr = has_right ? stack.interface_position(L) : 0.0;
  const cplx iq = cplx(0.0, 1.0) * s.q;

  for (int pol = 0; pol < 2; ++pol) {
    const cplx rl = has_left ? w.looking_left[pol][L - 1] : cplx(0.0);
    const cplx rr = has_right ? w.looking_right[pol][L] : cplx(0.0);
    s.u1[pol] = has_left ? rl * std::exp(iq * ((x - xl) + (xp - xl))) : cplx(0.0);
    s.u2[pol] = has_right ? rr * std::exp(iq * ((xr - x) + (xr - xp))) : cplx(0.0);
    cplx ww(0.0);
    if (has_left && has_right) ww = rl * rr * std::exp(iq * 2.0 * (xr - xl));
    s.w3[pol] = ww * std::exp(iq * (x - xp));
    s.w4[pol] = ww * std::exp(-iq * (x - xp));
    s.den[pol] = 1.0 - ww;
  }
  return s;
}

}  // namespace detail

struct FresnelPair {
  cplx r_te;
  cplx r_tm;
};

// Reflection of the whole stack for a wave arriving from the first layer,
// referenced at the first interface.  Exact for piecewise-constant layers.
inline FresnelPair reflection_coeffs(const LayerStack& stack, Frequency f,
                                     double kpar) {
  const auto w = detail::stack_waves(stack, f, kpar);
  return {w.looking_right[0][0], w.looking_right[1][0]};
}

// Azimuth-averaged regularized Green dyadic (paper normalization: the
// operator is curl mu^{-1} curl - W^2 eps with dimensionful eps, mu, so a
// homogeneous medium has G = mu G_helmholtz).  Off-diagonal components
// average to zero over the k_par azimuth; the stored diagonal is what the
// coincidence-limit stress needs.  Real on the imaginary axis.
struct GreenEval {
  cplx r_te;
  cplx r_tm;
  cplx gxx;  // x along the stratification axis
  cplx gyy;
  cplx gzz;

  cplx trace() const { return gxx + gyy + gzz; }
};

inline GreenEval green_regularized(const LayerStack& stack, Frequency f,
                                   double kpar, double x, double xp) {
  const auto w = detail::stack_waves(stack, f, kpar);
  const auto s = detail::layer_scattering(stack, w, x, xp);
  GreenEval g;
  g.r_te = w.looking_right[0][0];
  g.r_tm = w.looking_right[1][0];

  const cplx pref = s.mu * mu_0 * cplx(0.0, 0.5) / s.q;  // mu * i/(2q)
  const cplx q2 = s.q * s.q;
  const double kp2 = kpar * kpar;

  // TE: unit transverse dyad for every term
  const cplx te_sum =
      (s.u1[0] + s.u2[0] + s.w3[0] + s.w4[0]) / s.den[0];
  // TM: in-plane transverse part carries sign s*s' = -1 on the single-wall
  // terms, +1 on the double-wall terms; the xx part is +1 throughout
  const cplx tm_trans =
      (q2 / s.k2) * (-s.u1[1] - s.u2[1] + s.w3[1] + s.w4[1]) / s.den[1];
  const cplx tm_xx = (kp2 / s.k2) * (s.u1[1] + s.u2[1] + s.w3[1] + s.w4[1]) / s.den[1];

  g.gxx = pref * tm_xx;
  g.gyy = pref * 0.5 * (te_sum + tm_trans);
  g.gzz = g.gyy;
  return g;
}

// Im g(x, x; Omega) of the 1D-reduced scalar problem (TE at k_par = 0,
// primary wave included): g solves (d^2/dx^2 + q^2) g = -delta, so a uniform
// medium gives Im g = 1/(2 Omega n / c).  Must be >= 0 by fluctuation-
// dissipation; a negative value signals a solver defect.
inline double im_green_coincident(const LayerStack& stack, double omega,
                                  double x) {
  if (!(omega > 0.0))
    throw std::domain_error("im_green_coincident: need omega > 0");
  const auto w = detail::stack_waves(stack, Frequency::real_axis(omega), 0.0);
  const auto s = detail::layer_scattering(stack, w, x, x);
  const cplx g = cplx(0.0, 0.5) / s.q *
                 (1.0 + (s.u1[0] + s.u2[0] + s.w3[0] + s.w4[0]) / s.den[0]);
  const double im = g.imag();
  if (im < -1e-12 * std::abs(g))
    throw std::runtime_error(
        "im_green_coincident: negative spectral weight (solver defect)");
  return im;
}

}  // namespace embody
