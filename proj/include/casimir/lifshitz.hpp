#ifndef CASIMIR_LIFSHITZ_HPP
#define CASIMIR_LIFSHITZ_HPP

#include <vector>

#include "casimir/constants.hpp"
#include "casimir/materials.hpp"

namespace casimir {

/// Temperature/gap bookkeeping for the Matsubara sum.
struct ThermalContext {
    double temperature;  // K
    double beta;         // 1/(kB T), 1/J
    double gap;          // plate separation d, m
    double gamma;        // 2 pi d kB T / (hbar c), dimensionless

    ThermalContext(double T, double d);
};

/// xi_m = 2 pi m kB T / hbar, rad/s.
double matsubara_frequency(const ThermalContext& ctx, long m);

enum class AreaConvention { cylinder, plane, geometric_mean };
std::string to_string(AreaConvention c);
AreaConvention area_convention_from_string(const std::string& s);

/// How the zero-frequency TE reflection is treated. by_model resolves from
/// the dielectric model (plasma keeps the mode, drude drops it) and refuses
/// to guess for tabulated data, which cannot be extrapolated to xi = 0.
enum class M0Policy { by_model, plasma_like, drude_like };
std::string to_string(M0Policy p);
M0Policy m0_policy_from_string(const std::string& s);

struct NumericsConfig {
    double y_cut_offset = 50.0;   // per-term integration window above m*gamma
    double zeta_max = 1e17;       // Matsubara frequency cutoff, rad/s
    double quad_rel_tol = 1e-9;   // per-term adaptive quadrature tolerance
    double phi_max = phys::pi / 20.0;  // angular cutoff for the cylinder-plane integral
    AreaConvention area_convention = AreaConvention::cylinder;
    M0Policy m0_policy = M0Policy::by_model;

    bool ideal_reflectivity = false;  // diagnostic: force every reflection factor to 1
    bool record_terms = false;        // keep the per-m breakdown in the result

    void validate() const;
};

/// Inverse squared reflection coefficients of one interface at imaginary
/// frequency, r_TM^-2 and r_TE^-2, both >= 1. p = y/(m gamma) >= 1 and
/// s = sqrt(eps - 1 + p^2):
///   r_TM^-2 = ((eps p + s)/(eps p - s))^2,  r_TE^-2 = ((s + p)/(s - p))^2.
struct ReflectionFactors {
    double tm;
    double te;
};
ReflectionFactors reflection_factors(double eps, double p);

/// r_TE^-2 in the xi -> 0 limit at dimensionless momentum y for gap d.
/// Plasma: ((n + y)/(n - y))^2 with n = sqrt(alpha^2 + y^2), alpha = omega_p d / c
/// (the exact limit of the finite-m factor along p = y c/(xi d)).
/// Drude and tabulated: +inf, i.e. the TE zero-frequency mode drops out.
double m0_te_factor(const MaterialRecord& mat, double y, double d);

struct TermContribution {
    long m;
    double value;  // contribution to the pressure, Pa (half weight applied at m = 0)
};

/// A force or pressure magnitude with convergence diagnostics. Forces are
/// attractive; magnitudes are reported.
struct ForceResult {
    double magnitude = 0.0;          // Pa for pressures, N for forces
    long m_terms_used = 0;           // Matsubara terms actually summed
    double rel_error_estimate = 0.0; // quadrature + truncation estimate
    std::vector<TermContribution> per_term_breakdown;  // populated when record_terms
    bool pfa_warning = false;        // set by the cylinder-plane path when d/a >= 0.01
};

/// Casimir pressure magnitude between two identical parallel plates:
///   P = 1/(pi beta d^3) sum'_m  int_{m gamma}^{m gamma + y_cut} dy y^2
///         [ 1/(r_TM^-2 e^{2y} - 1) + 1/(r_TE^-2 e^{2y} - 1) ],
/// the m = 0 term counted with half weight and evaluated through its
/// analytic limits (TM factor 1 for both models; TE per m0_te_factor).
/// The sum runs to m_max = floor(zeta_max / xi_1); terms are accumulated in
/// ascending m with compensated summation, stopping early only when a
/// rigorous bound on the remainder falls below double rounding.
ForceResult pressure_pp(const MaterialRecord& mat, double d, double T,
                        const NumericsConfig& cfg = {});

struct ParallelPlates {
    double area;  // S, m^2
    double gap;   // d, m
};

/// F = S * P_pp.
ForceResult force_pp(const MaterialRecord& mat, const ParallelPlates& geom, double T,
                     const NumericsConfig& cfg = {});

}  // namespace casimir

#endif
