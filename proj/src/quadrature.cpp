#include "casimir/quadrature.hpp"

#include <cmath>
#include <cstdlib>

#include "casimir/errors.hpp"

namespace casimir {
namespace {

// Nodes and weights of the 15-point Kronrod extension of the 7-point
// Gauss rule on [-1, 1] (abscissae symmetric about 0).
constexpr int kNodes = 8;  // positive half including 0
constexpr double xgk[kNodes] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double wgk[kNodes] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <typename Value>
struct Panel {
    Value integral;
    Value error;
};

inline double comp_abs(double v) { return std::fabs(v); }
inline double comp_sub(double a, double b) { return a - b; }
inline double comp_add(double a, double b) { return a + b; }

// One GK15 evaluation over [a, b] for a scalar integrand.
Panel<double> gk15(const std::function<double(double)>& f, double a, double b, long& evals) {
    const double hl = 0.5 * (b - a);
    const double center = 0.5 * (a + b);
    double res_g = 0.0, res_k = 0.0;
    for (int j = 0; j < kNodes; ++j) {
        const double dx = hl * xgk[j];
        double fsum;
        if (j == kNodes - 1) {
            fsum = f(center);
            evals += 1;
        } else {
            fsum = f(center - dx) + f(center + dx);
            evals += 2;
        }
        res_k += wgk[j] * fsum;
        if (j % 2 == 1) res_g += wg[j / 2] * fsum;
    }
    res_g *= hl;
    res_k *= hl;
    return {res_k, std::fabs(res_k - res_g)};
}

Panel<std::array<double, 3>> gk15v(const std::function<std::array<double, 3>(double)>& f,
                                   double a, double b, long& evals) {
    const double hl = 0.5 * (b - a);
    const double center = 0.5 * (a + b);
    std::array<double, 3> res_g{}, res_k{};
    for (int j = 0; j < kNodes; ++j) {
        const double dx = hl * xgk[j];
        std::array<double, 3> fsum{};
        if (j == kNodes - 1) {
            fsum = f(center);
            evals += 1;
        } else {
            const auto fl = f(center - dx);
            const auto fr = f(center + dx);
            for (int i = 0; i < 3; ++i) fsum[i] = fl[i] + fr[i];
            evals += 2;
        }
        for (int i = 0; i < 3; ++i) {
            res_k[i] += wgk[j] * fsum[i];
            if (j % 2 == 1) res_g[i] += wg[j / 2] * fsum[i];
        }
    }
    Panel<std::array<double, 3>> out;
    for (int i = 0; i < 3; ++i) {
        out.integral[i] = hl * res_k[i];
        out.error[i] = std::fabs(hl * (res_k[i] - res_g[i]));
    }
    return out;
}

bool accepted(const Panel<double>& p, double rel_tol) {
    return p.error <= rel_tol * std::fabs(p.integral);
}

bool accepted(const Panel<std::array<double, 3>>& p, double rel_tol) {
    for (int i = 0; i < 3; ++i)
        if (p.error[i] > rel_tol * std::fabs(p.integral[i])) return false;
    return true;
}

}  // namespace

QuadResult integrate_gk(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, int max_depth, long max_panels) {
    QuadResult out;
    if (a == b) return out;
    long panels = 0;
    // depth-first, left child before right child
    const std::function<void(double, double, int)> descend = [&](double lo, double hi, int depth) {
        if (++panels > max_panels)
            throw ConvergenceError("quadrature panel budget exhausted (rel_tol=" +
                                   std::to_string(rel_tol) + ")");
        const Panel<double> p = gk15(f, lo, hi, out.evaluations);
        if (accepted(p, rel_tol)) {
            out.value += p.integral;
            out.abs_error += p.error;
            return;
        }
        if (depth >= max_depth)
            throw ConvergenceError("quadrature failed to converge to rel_tol=" +
                                   std::to_string(rel_tol) + " within depth limit");
        const double mid = 0.5 * (lo + hi);
        descend(lo, mid, depth + 1);
        descend(mid, hi, depth + 1);
    };
    descend(a, b, 0);
    return out;
}

QuadResult3 integrate_gk3(const std::function<std::array<double, 3>(double)>& f,
                          double a, double b, double rel_tol, int max_depth,
                          long max_panels) {
    QuadResult3 out;
    if (a == b) return out;
    long panels = 0;
    const std::function<void(double, double, int)> descend = [&](double lo, double hi, int depth) {
        if (++panels > max_panels)
            throw ConvergenceError("quadrature panel budget exhausted (rel_tol=" +
                                   std::to_string(rel_tol) + ")");
        const auto p = gk15v(f, lo, hi, out.evaluations);
        if (accepted(p, rel_tol)) {
            for (int i = 0; i < 3; ++i) {
                out.value[i] += p.integral[i];
                out.abs_error[i] += p.error[i];
            }
            return;
        }
        if (depth >= max_depth)
            throw ConvergenceError("quadrature failed to converge to rel_tol=" +
                                   std::to_string(rel_tol) + " within depth limit");
        const double mid = 0.5 * (lo + hi);
        descend(lo, mid, depth + 1);
        descend(mid, hi, depth + 1);
    };
    descend(a, b, 0);
    return out;
}

}  // namespace casimir
