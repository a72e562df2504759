#ifndef CASIMIR_PFA_HPP
#define CASIMIR_PFA_HPP

#include <array>

#include "casimir/lifshitz.hpp"

namespace casimir {

struct CylinderPlaneGeometry {
    double length;  // L, m
    double radius;  // a, m
    double gap;     // d, m

    /// The proximity force approximation holds for d << a.
    bool pfa_valid() const { return gap / radius < 0.01; }
    void validate() const;
};

/// Cylinder-plane force under all three infinitesimal-area conventions,
/// computed from one shared set of parallel-plate pressure evaluations:
///   F = 2 int_0^{phi_max} P_pp(d + a(1 - cos phi)) w(phi) dphi
/// with w = L a (cylinder), L a cos phi (plane), L a sqrt(cos phi)
/// (geometric mean).
struct CpForces {
    double cylinder;
    double plane;
    double geometric_mean;
    long m_terms_used;          // largest Matsubara depth among pressure evaluations
    double rel_error_estimate;
    bool pfa_warning;

    double by_convention(AreaConvention c) const;
};

CpForces force_cp_all(const MaterialRecord& mat, const CylinderPlaneGeometry& geom,
                      double T, const NumericsConfig& cfg = {});

/// Force under the convention selected in cfg.area_convention.
ForceResult force_cp(const MaterialRecord& mat, const CylinderPlaneGeometry& geom,
                     double T, const NumericsConfig& cfg = {});

/// (max - min)/min across the three conventions.
double pfa_spread(const MaterialRecord& mat, const CylinderPlaneGeometry& geom,
                  double T, const NumericsConfig& cfg = {});

/// Relative change of force_cp when phi_max is raised from cfg.phi_max to pi/2.
double phi_limit_robustness(const MaterialRecord& mat, const CylinderPlaneGeometry& geom,
                            double T, const NumericsConfig& cfg = {});

}  // namespace casimir

#endif
