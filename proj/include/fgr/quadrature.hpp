#ifndef FGR_QUADRATURE_HPP
#define FGR_QUADRATURE_HPP

// Adaptive trapezoid with step halving on a finite interval. The callers
// transform their integrals so the integrand is analytic and decays fast
// toward both endpoints (cosh / double-exponential substitutions), where the
// trapezoid rule converges geometrically.

#include <cmath>
#include <complex>
#include <functional>
#include <limits>

#include "fgr/errors.hpp"
#include "fgr/special.hpp"

namespace fgr::quad {

using Complex = std::complex<double>;

struct Result {
    Complex value{0.0, 0.0};
    double error_estimate = 0.0;
    int nodes = 0;
    bool converged = false;
};

// Integrate f over [a, b]. Starts from `initial_intervals` panels and halves
// the step until two successive refinements agree to cfg.rel_tol (with an
// absolute floor of abs_floor plus the roundoff level of the accumulated
// |f| mass). Throws convergence_error if cfg.max_nodes is exhausted.
template <typename F>
Result trapezoid(F&& f, double a, double b, const special::QuadratureConfig& cfg,
                 double abs_floor = 0.0, int initial_intervals = 16) {
    Result res;
    const double len = b - a;
    int n = initial_intervals;
    Complex sum = 0.5 * (f(a) + f(b));
    double abs_sum = std::abs(f(a)) * 0.5 + std::abs(f(b)) * 0.5;
    for (int k = 1; k < n; ++k) {
        Complex v = f(a + len * k / n);
        sum += v;
        abs_sum += std::abs(v);
    }
    Complex prev = sum * (len / n);
    res.nodes = n + 1;
    while (true) {
        // refine: add midpoints of the current panels
        for (int k = 0; k < n; ++k) {
            Complex v = f(a + len * (k + 0.5) / n);
            sum += v;
            abs_sum += std::abs(v);
        }
        n *= 2;
        res.nodes += n / 2;
        Complex cur = sum * (len / n);
        double diff = std::abs(cur - prev);
        double floor_eff = abs_floor + 64.0 * std::numeric_limits<double>::epsilon() *
                                           abs_sum * (len / n);
        if (diff <= std::max(cfg.rel_tol * std::abs(cur), floor_eff)) {
            res.value = cur;
            res.error_estimate = diff;
            res.converged = true;
            return res;
        }
        if (res.nodes > cfg.max_nodes) {
            throw convergence_error("trapezoid: node budget exhausted before convergence");
        }
        prev = cur;
    }
}

} // namespace fgr::quad

#endif
