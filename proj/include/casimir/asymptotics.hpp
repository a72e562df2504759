#ifndef CASIMIR_ASYMPTOTICS_HPP
#define CASIMIR_ASYMPTOTICS_HPP

#include "casimir/materials.hpp"

namespace casimir {

/// Perfect-conductor zero-temperature limits.
double ideal_pp_pressure(double d);                       // pi^2 hbar c / (240 d^4), Pa
double ideal_cp_force(double L, double a, double d);      // pi^3 hbar c L sqrt(a) / (384 sqrt(2) d^{7/2}), N

/// High-temperature (thermal photon) limits.
double thermal_pp_pressure(double d, double T);           // zeta(3) kB T / (4 pi d^3), Pa
double thermal_cp_force(double L, double a, double d, double T);  // 3 zeta(3) kB T L sqrt(a) / (16 sqrt(2) d^{5/2}), N

/// Inputs of the low-temperature plasma-model expansions: t = T/T_eff and
/// delta/d with delta = c/omega_p the finite-conductivity length.
struct ExpansionInputs {
    double t_ratio;
    double delta_over_d;

    void validate() const;  // both must be >= 0 and finite
};

/// Expansion value plus a validity advisory; the series are first order in
/// delta/d and assume T << T_eff, so the flag trips at t_ratio >= 1 or
/// delta_over_d >= 0.2. Advisory only, never an error.
struct ExpansionValue {
    double ratio;
    bool within_validity;
};

/// F_pp / F_pp(T=0) = 1 + (1/3) t^4 - (16 delta / 3 d) [1 - (45 zeta(3)/8 pi^3) t^3]
ExpansionValue lowT_ratio_pp(const ExpansionInputs& x);

/// F_cp / F_cp(T=0) = 1 + (132.096 zeta(7/2)/pi^{9/2}) t^{7/2}
///                      - (delta/d) [14/3 - (48 zeta(3)/pi^3) t^3]
ExpansionValue lowT_ratio_cp(const ExpansionInputs& x);

/// T_eff = hbar c / (2 kB d): thermal photons dominate above this temperature.
double t_eff(double d);

/// delta = c / omega_p. Requires a record carrying omega_p.
double plasma_delta(const MaterialRecord& mat);

}  // namespace casimir

#endif
