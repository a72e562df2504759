#ifndef CASIMIR_QUADRATURE_HPP
#define CASIMIR_QUADRATURE_HPP

#include <array>
#include <functional>

namespace casimir {

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;   // accumulated error estimate
    long evaluations = 0;
};

struct QuadResult3 {
    std::array<double, 3> value{};
    std::array<double, 3> abs_error{};
    long evaluations = 0;
};

/// Adaptive Gauss-Kronrod (7,15) integration of f over [a, b].
/// A panel is accepted when its error estimate is within rel_tol of its own
/// contribution; subdivision is depth-first left-to-right, so results are
/// deterministic. Throws ConvergenceError when the panel budget runs out.
QuadResult integrate_gk(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, int max_depth = 48, long max_panels = 20000);

/// Same scheme for a 3-component integrand sharing one set of nodes; a panel
/// is accepted only when every component meets the tolerance.
QuadResult3 integrate_gk3(const std::function<std::array<double, 3>(double)>& f,
                          double a, double b, double rel_tol, int max_depth = 48,
                          long max_panels = 20000);

}  // namespace casimir

#endif
