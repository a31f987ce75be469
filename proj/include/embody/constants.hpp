#pragma once

// Physical constants, SI (CODATA 2018).
namespace embody {

inline constexpr double c_light   = 299792458.0;       // m/s (exact)
inline constexpr double mu_0      = 1.25663706212e-6;  // H/m
inline constexpr double eps_0     = 8.8541878128e-12;  // F/m
inline constexpr double hbar      = 1.054571817e-34;   // J s
inline constexpr double eta_0     = 376.730313668;     // Ohm, sqrt(mu_0/eps_0)

inline constexpr double pi = 3.14159265358979323846;

}  // namespace embody
