#include "casimir/lifshitz.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

ThermalContext::ThermalContext(double T, double d) {
    if (!(T > 0.0)) throw ValidationError("temperature must be > 0 K");
    if (!(d > 0.0)) throw ValidationError("gap must be > 0 m");
    temperature = T;
    gap = d;
    beta = 1.0 / (phys::k_boltzmann * T);
    gamma = 2.0 * phys::pi * d * phys::k_boltzmann * T / phys::hbar_c;
}

double matsubara_frequency(const ThermalContext& ctx, long m) {
    if (m < 0) throw ValidationError("Matsubara index must be >= 0");
    return static_cast<double>(m) *
           (2.0 * phys::pi * phys::k_boltzmann * ctx.temperature / phys::hbar);
}

std::string to_string(AreaConvention c) {
    switch (c) {
        case AreaConvention::cylinder: return "cylinder";
        case AreaConvention::plane: return "plane";
        case AreaConvention::geometric_mean: return "geometric_mean";
    }
    return "?";
}

AreaConvention area_convention_from_string(const std::string& s) {
    if (s == "cylinder") return AreaConvention::cylinder;
    if (s == "plane") return AreaConvention::plane;
    if (s == "geometric_mean" || s == "geometric-mean") return AreaConvention::geometric_mean;
    throw ValidationError("unknown area convention '" + s + "'");
}

std::string to_string(M0Policy p) {
    switch (p) {
        case M0Policy::by_model: return "by-model";
        case M0Policy::plasma_like: return "plasma-like";
        case M0Policy::drude_like: return "drude-like";
    }
    return "?";
}

M0Policy m0_policy_from_string(const std::string& s) {
    if (s == "by-model" || s == "by_model") return M0Policy::by_model;
    if (s == "plasma-like" || s == "plasma_like") return M0Policy::plasma_like;
    if (s == "drude-like" || s == "drude_like") return M0Policy::drude_like;
    throw ValidationError("unknown m0 policy '" + s + "'");
}

void NumericsConfig::validate() const {
    if (!(y_cut_offset >= 10.0))
        throw ValidationError("y_cut_offset must be >= 10");
    if (!(quad_rel_tol > 0.0))
        throw ValidationError("quad_rel_tol must be > 0");
    if (!(phi_max > 0.0 && phi_max <= phys::pi / 2.0))
        throw ValidationError("phi_max must lie in (0, pi/2]");
    if (!(zeta_max > 0.0))
        throw ValidationError("zeta_max must be > 0");
}

namespace {

// r^-2 - 1 for both polarizations, in cancellation-free form:
//   TE: 4 s p (s+p)^2 / (eps-1)^2
//   TM: 4 eps p s (eps p + s)^2 / [ (eps-1)^2 (p^2 (eps+1) - 1)^2 ]
// using s - p = (eps-1)/(s+p) and eps p - s = (eps-1)(p^2(eps+1)-1)/(eps p + s).
struct ReflectionM1 {
    double tm;
    double te;
};

inline ReflectionM1 reflection_minus_one(double eps, double p) {
    const double em1 = eps - 1.0;
    const double s = std::sqrt(em1 + p * p);
    const double sp = s + p;
    const double te = 4.0 * s * p * sp * sp / (em1 * em1);
    const double ep = eps * p;
    const double den = em1 * (p * p * (eps + 1.0) - 1.0);
    const double num = ep + s;
    const double tm = 4.0 * ep * s * num * num / (den * den);
    return {tm, te};
}

// 1/(r^-2 e^{2y} - 1) with a = r^-2 - 1 >= 0, evaluated as
// e^{-2y} / (a + (1 - e^{-2y})); exact for the ideal a = 0 case.
inline double mode_occupancy(double a, double y) {
    return std::exp(-2.0 * y) / (a - std::expm1(-2.0 * y));
}

// Plasma-model zero-frequency TE factor minus one: with n = hypot(alpha, y),
// ((n+y)/(n-y))^2 - 1 = 4 n y (n+y)^2 / alpha^4.
inline double m0_te_minus_one_plasma(double alpha, double y) {
    const double n = std::hypot(alpha, y);
    const double npy = n + y;
    return 4.0 * n * y * npy * npy / (alpha * alpha * alpha * alpha);
}

// Resolved treatment of the m = 0 TE mode.
enum class M0Kind { plasma_like, drude_like };

M0Kind resolve_m0(const MaterialRecord& mat, const NumericsConfig& cfg) {
    switch (cfg.m0_policy) {
        case M0Policy::plasma_like:
            if (!(mat.plasma_frequency > 0.0))
                throw ValidationError("material '" + mat.name +
                                      "': plasma-like m0 policy needs plasma_frequency_eV");
            return M0Kind::plasma_like;
        case M0Policy::drude_like:
            return M0Kind::drude_like;
        case M0Policy::by_model:
            switch (mat.model) {
                case DielectricModel::plasma: return M0Kind::plasma_like;
                case DielectricModel::drude: return M0Kind::drude_like;
                case DielectricModel::tabulated:
                    throw ValidationError(
                        "material '" + mat.name +
                        "': tabulated permittivity cannot be extrapolated to zero frequency; "
                        "select an explicit m0 policy (plasma-like or drude-like)");
            }
    }
    throw ValidationError("unreachable m0 policy");
}

// Upper bound on sum_{m >= m_start} of the raw (unprefixed) term values,
// using bracket <= e^{-2y}/(1 - e^{-2u}) for y >= u = m_start*gamma and
// int_u^inf y^2 e^{-2y} dy = e^{-2u} (u^2/2 + u/2 + 1/4). The geometric
// series over m is summed in closed form.
double tail_bound(double u, double gamma) {
    if (!(u > 1.0)) return std::numeric_limits<double>::infinity();
    const double q = std::exp(-2.0 * gamma);
    const double omq = -std::expm1(-2.0 * gamma);  // 1 - q
    const double g0 = 0.5 * u * u + 0.5 * u + 0.25;
    const double s = g0 / omq + gamma * (u + 0.5) * q / (omq * omq) +
                     0.5 * gamma * gamma * q * (1.0 + q) / (omq * omq * omq);
    const double front = 2.0 * std::exp(-2.0 * u) / (-std::expm1(-2.0 * u));
    return front * s;
}

struct KahanAccumulator {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

ReflectionFactors reflection_factors(double eps, double p) {
    if (!(eps > 1.0))
        throw ValidationError("reflection_factors requires eps > 1 (the s = p "
                              "singularity sits at eps = 1)");
    if (!(p >= 1.0))
        throw ValidationError("reflection_factors requires p >= 1");
    const ReflectionM1 m1 = reflection_minus_one(eps, p);
    return {m1.tm + 1.0, m1.te + 1.0};
}

double m0_te_factor(const MaterialRecord& mat, double y, double d) {
    if (!(y > 0.0)) throw ValidationError("m0_te_factor requires y > 0");
    if (!(d > 0.0)) throw ValidationError("m0_te_factor requires d > 0");
    switch (mat.model) {
        case DielectricModel::plasma: {
            const double alpha = mat.plasma_frequency * d / phys::c_light;
            return 1.0 + m0_te_minus_one_plasma(alpha, y);
        }
        case DielectricModel::drude:
        case DielectricModel::tabulated:
            // the mode contributes exactly nothing
            return std::numeric_limits<double>::infinity();
    }
    throw ValidationError("unreachable model");
}

ForceResult pressure_pp(const MaterialRecord& mat, double d, double T,
                        const NumericsConfig& cfg) {
    mat.validate();
    cfg.validate();
    const ThermalContext ctx(T, d);
    const double xi_1 = matsubara_frequency(ctx, 1);
    if (!(cfg.zeta_max > xi_1))
        throw ValidationError("zeta_max must exceed the first Matsubara frequency (" +
                              std::to_string(xi_1) + " rad/s)");
    const long m_max = static_cast<long>(std::floor(cfg.zeta_max / xi_1));
    const double gamma = ctx.gamma;
    const double y_cut = cfg.y_cut_offset;
    const double prefactor = 1.0 / (phys::pi * ctx.beta * d * d * d);

    const M0Kind m0 = cfg.ideal_reflectivity
                          ? M0Kind::plasma_like  // unused; factors forced below
                          : resolve_m0(mat, cfg);
    const double alpha = mat.plasma_frequency * d / phys::c_light;

    ForceResult res;
    KahanAccumulator acc;
    double abs_err = 0.0;

    // m = 0, half weight. TM factor is exactly 1 for both models (eps
    // diverges as xi -> 0); TE per the resolved policy.
    const auto integrand0 = [&](double y) {
        const double tm = mode_occupancy(0.0, y);
        double te = 0.0;
        if (cfg.ideal_reflectivity) {
            te = tm;
        } else if (m0 == M0Kind::plasma_like) {
            te = mode_occupancy(m0_te_minus_one_plasma(alpha, y), y);
        }
        return y * y * (tm + te);
    };
    const QuadResult q0 = integrate_gk(integrand0, 0.0, y_cut, cfg.quad_rel_tol);
    acc.add(0.5 * q0.value);
    abs_err += 0.5 * q0.abs_error;
    res.m_terms_used = 1;
    if (cfg.record_terms)
        res.per_term_breakdown.push_back({0, prefactor * 0.5 * q0.value});

    double truncation = 0.0;
    for (long m = 1; m <= m_max; ++m) {
        const double mg = static_cast<double>(m) * gamma;
        double eps = 0.0;
        if (!cfg.ideal_reflectivity)
            eps = permittivity_iw(mat, matsubara_frequency(ctx, m));
        const auto integrand = [&](double y) {
            if (cfg.ideal_reflectivity) {
                const double occ = mode_occupancy(0.0, y);
                return y * y * 2.0 * occ;
            }
            const double p = y / mg;
            const ReflectionM1 m1 = reflection_minus_one(eps, p);
            return y * y * (mode_occupancy(m1.tm, y) + mode_occupancy(m1.te, y));
        };
        const QuadResult q = integrate_gk(integrand, mg, mg + y_cut, cfg.quad_rel_tol);
        acc.add(q.value);
        abs_err += q.abs_error;
        res.m_terms_used = m + 1;
        if (cfg.record_terms) res.per_term_breakdown.push_back({m, prefactor * q.value});

        // certified early exit: remaining terms provably below double rounding
        if (m < m_max) {
            const double u_next = static_cast<double>(m + 1) * gamma;
            if (u_next > 2.0) {
                const double tb = tail_bound(u_next, gamma);
                if (tb <= 0.25 * std::numeric_limits<double>::epsilon() * acc.sum) {
                    truncation = tb;
                    break;
                }
            }
        }
    }
    if (truncation == 0.0 && m_max >= 1) {
        const double u_past_end = static_cast<double>(m_max + 1) * gamma;
        if (u_past_end > 2.0) truncation = tail_bound(u_past_end, gamma);
    }

    res.magnitude = prefactor * acc.sum;
    if (acc.sum > 0.0) res.rel_error_estimate = (abs_err + truncation) / acc.sum;
    return res;
}

ForceResult force_pp(const MaterialRecord& mat, const ParallelPlates& geom, double T,
                     const NumericsConfig& cfg) {
    if (!(geom.area > 0.0)) throw ValidationError("plate area must be > 0 m^2");
    ForceResult res = pressure_pp(mat, geom.gap, T, cfg);
    res.magnitude *= geom.area;
    for (auto& t : res.per_term_breakdown) t.value *= geom.area;
    return res;
}

}  // namespace casimir
