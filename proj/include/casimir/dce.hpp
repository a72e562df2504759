#ifndef CASIMIR_DCE_HPP
#define CASIMIR_DCE_HPP

namespace casimir::dce {

/// Parametric photon production in a modulated cavity.
struct DceParams {
    double q_factor;       // cavity quality factor Q
    double epsilon_mod;    // modulation amplitude eps = dL/L, in (0, 1)
    double omega;          // cavity/drive angular frequency, rad/s
    double lambda_geom = 0.0;  // geometry factor lambda, rad/s; 0 means "use omega"

    double lambda() const { return lambda_geom > 0.0 ? lambda_geom : omega; }
    void validate() const;
};

/// N = sinh^2(lambda eps t). The exponent is capped at 350; beyond that the
/// parametric-growth model has left the regime where a photon count means
/// anything, and an OutOfModelError is raised instead of returning inf.
double photon_number(const DceParams& p, double t);

/// Saturated count sinh^2(lambda eps Q / omega), = sinh^2(Q eps) for the
/// default lambda = omega.
double photon_number_saturated(const DceParams& p);

/// tau_sat = Q / omega.
double saturation_time(const DceParams& p);

/// n hbar omega / tau, W.
double photon_power(double n, double omega, double tau);

enum class TransitionKind { electric_dipole, magnetic_dipole };

struct TransitionSpec {
    double omega_t;        // transition angular frequency, rad/s
    double dipole_moment;  // |D_ij|, C m
    TransitionKind kind = TransitionKind::electric_dipole;
    double v_over_c = 0.0;  // required in (0,1) for magnetic_dipole

    void validate() const;
};

/// A = omega^3 D^2 / (pi eps0 hbar c^3), times (v/c)^2 for magnetic dipoles.
double spontaneous_rate(const TransitionSpec& t);

struct DetectionBudget {
    double photons_saturated;
    double power_w;
    double rate_spont;       // 1/s
    double comparison_ratio; // rate_spont / spontaneous_rate(reference)
};

/// Bundle of the saturated photon count, the radiated power at the cavity
/// frequency, and the transition rate compared against a caller-provided
/// reference transition.
DetectionBudget detection_budget(const DceParams& p, const TransitionSpec& t,
                                 const TransitionSpec& reference);

// Named presets: the lowest ground-state hyperfine splitting among the
// alkalis (6Li) and the matching parametric drive at twice that frequency.
inline constexpr double li6_hyperfine_freq_hz = 228e6;
inline constexpr double li6_drive_freq_hz = 456e6;

}  // namespace casimir::dce

#endif
