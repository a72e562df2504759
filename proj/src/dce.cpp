#include "casimir/dce.hpp"

#include <cmath>
#include <string>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir::dce {

namespace {
constexpr double kMaxExponent = 350.0;  // sinh^2 stays finite in double below this

double sinh_sq_guarded(double x, const char* what) {
    if (x > kMaxExponent)
        throw OutOfModelError(std::string(what) + " exponent " + std::to_string(x) +
                              " exceeds " + std::to_string(kMaxExponent) +
                              "; the parametric-growth estimate is out of its regime");
    const double s = std::sinh(x);
    return s * s;
}
}  // namespace

void DceParams::validate() const {
    if (!(q_factor > 0.0)) throw ValidationError("Q must be > 0");
    if (!(epsilon_mod > 0.0 && epsilon_mod < 1.0))
        throw ValidationError("modulation amplitude eps must lie in (0, 1)");
    if (!(omega > 0.0)) throw ValidationError("omega must be > 0 rad/s");
    if (lambda_geom < 0.0) throw ValidationError("lambda must be >= 0 rad/s");
}

double photon_number(const DceParams& p, double t) {
    p.validate();
    if (!(t >= 0.0)) throw ValidationError("time must be >= 0 s");
    return sinh_sq_guarded(p.lambda() * p.epsilon_mod * t, "photon growth");
}

double photon_number_saturated(const DceParams& p) {
    p.validate();
    return sinh_sq_guarded(p.lambda() * p.epsilon_mod * p.q_factor / p.omega,
                           "saturated photon growth");
}

double saturation_time(const DceParams& p) {
    p.validate();
    return p.q_factor / p.omega;
}

double photon_power(double n, double omega, double tau) {
    if (!(n >= 0.0)) throw ValidationError("photon count must be >= 0");
    if (!(omega > 0.0)) throw ValidationError("omega must be > 0 rad/s");
    if (!(tau > 0.0)) throw ValidationError("tau must be > 0 s");
    return n * phys::hbar * omega / tau;
}

void TransitionSpec::validate() const {
    if (!(omega_t > 0.0)) throw ValidationError("transition frequency must be > 0 rad/s");
    if (!(dipole_moment > 0.0)) throw ValidationError("dipole moment must be > 0 C m");
    if (kind == TransitionKind::magnetic_dipole && !(v_over_c > 0.0 && v_over_c < 1.0))
        throw ValidationError("magnetic-dipole transitions need v_over_c in (0, 1)");
}

double spontaneous_rate(const TransitionSpec& t) {
    t.validate();
    const double w3 = t.omega_t * t.omega_t * t.omega_t;
    const double c3 = phys::c_light * phys::c_light * phys::c_light;
    double rate = w3 * t.dipole_moment * t.dipole_moment /
                  (phys::pi * phys::eps0 * phys::hbar * c3);
    if (t.kind == TransitionKind::magnetic_dipole) rate *= t.v_over_c * t.v_over_c;
    return rate;
}

DetectionBudget detection_budget(const DceParams& p, const TransitionSpec& t,
                                 const TransitionSpec& reference) {
    DetectionBudget b{};
    b.photons_saturated = photon_number_saturated(p);
    b.power_w = photon_power(b.photons_saturated, p.omega, saturation_time(p));
    b.rate_spont = spontaneous_rate(t);
    b.comparison_ratio = b.rate_spont / spontaneous_rate(reference);
    return b;
}

}  // namespace casimir::dce
