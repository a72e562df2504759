#include "casimir/asymptotics.hpp"

#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

using phys::pi;

double ideal_pp_pressure(double d) {
    if (!(d > 0.0)) throw ValidationError("gap must be > 0 m");
    return pi * pi * phys::hbar_c / (240.0 * d * d * d * d);
}

double ideal_cp_force(double L, double a, double d) {
    if (!(L > 0.0 && a > 0.0 && d > 0.0))
        throw ValidationError("cylinder-plane dimensions must be > 0 m");
    return pi * pi * pi * phys::hbar_c * L * std::sqrt(a) /
           (384.0 * std::sqrt(2.0) * d * d * d * std::sqrt(d));
}

double thermal_pp_pressure(double d, double T) {
    if (!(d > 0.0 && T > 0.0)) throw ValidationError("gap and temperature must be > 0");
    return phys::zeta_3 * phys::k_boltzmann * T / (4.0 * pi * d * d * d);
}

double thermal_cp_force(double L, double a, double d, double T) {
    if (!(L > 0.0 && a > 0.0 && d > 0.0 && T > 0.0))
        throw ValidationError("cylinder-plane dimensions and temperature must be > 0");
    return 3.0 * phys::zeta_3 * phys::k_boltzmann * T * L * std::sqrt(a) /
           (16.0 * std::sqrt(2.0) * d * d * std::sqrt(d));
}

void ExpansionInputs::validate() const {
    if (!(t_ratio >= 0.0) || !std::isfinite(t_ratio))
        throw ValidationError("t_ratio must be finite and >= 0");
    if (!(delta_over_d >= 0.0) || !std::isfinite(delta_over_d))
        throw ValidationError("delta_over_d must be finite and >= 0");
}

namespace {
bool advisory_ok(const ExpansionInputs& x) {
    return x.t_ratio < 1.0 && x.delta_over_d < 0.2;
}
}  // namespace

ExpansionValue lowT_ratio_pp(const ExpansionInputs& x) {
    x.validate();
    const double t = x.t_ratio;
    const double t3 = t * t * t;
    const double ratio = 1.0 + (1.0 / 3.0) * t3 * t -
                         (16.0 * x.delta_over_d / 3.0) *
                             (1.0 - 45.0 * phys::zeta_3 / (8.0 * pi * pi * pi) * t3);
    return {ratio, advisory_ok(x)};
}

ExpansionValue lowT_ratio_cp(const ExpansionInputs& x) {
    x.validate();
    const double t = x.t_ratio;
    const double t3 = t * t * t;
    const double ratio = 1.0 +
                         132.096 * phys::zeta_7_2 / std::pow(pi, 4.5) * t3 * std::sqrt(t) -
                         x.delta_over_d *
                             (14.0 / 3.0 - 48.0 * phys::zeta_3 / (pi * pi * pi) * t3);
    return {ratio, advisory_ok(x)};
}

double t_eff(double d) {
    if (!(d > 0.0)) throw ValidationError("gap must be > 0 m");
    return phys::hbar_c / (2.0 * phys::k_boltzmann * d);
}

double plasma_delta(const MaterialRecord& mat) {
    if (!(mat.plasma_frequency > 0.0))
        throw ValidationError("material '" + mat.name +
                              "' carries no plasma frequency; delta = c/omega_p is undefined");
    return phys::c_light / mat.plasma_frequency;
}

}  // namespace casimir
