#include "casimir/pfa.hpp"

#include <algorithm>
#include <cmath>

#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

void CylinderPlaneGeometry::validate() const {
    if (!(length > 0.0)) throw ValidationError("cylinder length must be > 0 m");
    if (!(radius > 0.0)) throw ValidationError("cylinder radius must be > 0 m");
    if (!(gap > 0.0)) throw ValidationError("gap must be > 0 m");
}

double CpForces::by_convention(AreaConvention c) const {
    switch (c) {
        case AreaConvention::cylinder: return cylinder;
        case AreaConvention::plane: return plane;
        case AreaConvention::geometric_mean: return geometric_mean;
    }
    return cylinder;
}

CpForces force_cp_all(const MaterialRecord& mat, const CylinderPlaneGeometry& geom,
                      double T, const NumericsConfig& cfg) {
    geom.validate();
    cfg.validate();

    long max_terms = 0;
    double max_pressure_rel_err = 0.0;
    NumericsConfig inner = cfg;
    inner.record_terms = false;

    const auto integrand = [&](double phi) -> std::array<double, 3> {
        // 1 - cos(phi) as 2 sin^2(phi/2), stable for small phi
        const double sh = std::sin(0.5 * phi);
        const double local_gap = geom.gap + geom.radius * 2.0 * sh * sh;
        const ForceResult pr = pressure_pp(mat, local_gap, T, inner);
        max_terms = std::max(max_terms, pr.m_terms_used);
        max_pressure_rel_err = std::max(max_pressure_rel_err, pr.rel_error_estimate);
        const double cphi = std::cos(phi);
        return {pr.magnitude, pr.magnitude * cphi, pr.magnitude * std::sqrt(cphi)};
    };

    const QuadResult3 q = integrate_gk3(integrand, 0.0, cfg.phi_max, cfg.quad_rel_tol);
    const double scale = 2.0 * geom.length * geom.radius;

    CpForces out{};
    out.cylinder = scale * q.value[0];
    out.plane = scale * q.value[1];
    out.geometric_mean = scale * q.value[2];
    out.m_terms_used = max_terms;
    double phi_rel = 0.0;
    for (int i = 0; i < 3; ++i)
        if (q.value[i] > 0.0) phi_rel = std::max(phi_rel, q.abs_error[i] / q.value[i]);
    out.rel_error_estimate = phi_rel + max_pressure_rel_err;
    out.pfa_warning = !geom.pfa_valid();
    return out;
}

ForceResult force_cp(const MaterialRecord& mat, const CylinderPlaneGeometry& geom,
                     double T, const NumericsConfig& cfg) {
    const CpForces all = force_cp_all(mat, geom, T, cfg);
    ForceResult res;
    res.magnitude = all.by_convention(cfg.area_convention);
    res.m_terms_used = all.m_terms_used;
    res.rel_error_estimate = all.rel_error_estimate;
    res.pfa_warning = all.pfa_warning;
    return res;
}

double pfa_spread(const MaterialRecord& mat, const CylinderPlaneGeometry& geom,
                  double T, const NumericsConfig& cfg) {
    const CpForces all = force_cp_all(mat, geom, T, cfg);
    const double lo = std::min({all.cylinder, all.plane, all.geometric_mean});
    const double hi = std::max({all.cylinder, all.plane, all.geometric_mean});
    return (hi - lo) / lo;
}

double phi_limit_robustness(const MaterialRecord& mat, const CylinderPlaneGeometry& geom,
                            double T, const NumericsConfig& cfg) {
    const ForceResult base = force_cp(mat, geom, T, cfg);
    NumericsConfig wide = cfg;
    wide.phi_max = phys::pi / 2.0;
    const ForceResult full = force_cp(mat, geom, T, wide);
    return std::fabs(full.magnitude - base.magnitude) / base.magnitude;
}

}  // namespace casimir
