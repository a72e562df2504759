#ifndef CASIMIR_CONSTANTS_HPP
#define CASIMIR_CONSTANTS_HPP

// Single source of truth for every physical constant used in the library.
// CODATA 2018 values; do not duplicate these numbers elsewhere.

namespace casimir::phys {

inline constexpr double hbar = 1.054571817e-34;        // reduced Planck constant, J s
inline constexpr double c_light = 2.99792458e8;        // speed of light, m/s (exact)
inline constexpr double k_boltzmann = 1.380649e-23;    // Boltzmann constant, J/K (exact)
inline constexpr double eps0 = 8.8541878128e-12;       // vacuum permittivity, F/m
inline constexpr double elementary_charge = 1.602176634e-19;  // C (exact)

inline constexpr double hbar_c = hbar * c_light;       // J m

// Riemann zeta values used by the closed-form limits.
inline constexpr double zeta_3 = 1.2020569032;
inline constexpr double zeta_7_2 = 1.1267338673;

inline constexpr double pi = 3.14159265358979323846;

}  // namespace casimir::phys

#endif
