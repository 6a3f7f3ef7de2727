#ifndef FGR_SPECIAL_HPP
#define FGR_SPECIAL_HPP

// Complex special functions used throughout: log-Gamma (Lanczos), K-Bessel of
// complex (chiefly purely imaginary) order via the cosh integral
// representation, and the Riemann zeta / completed zeta by Euler-Maclaurin.
//
// Everything here is pure and re-entrant; all tables are compile-time
// constants. IEEE double throughout.

#include <complex>

#include "fgr/errors.hpp"

namespace fgr::special {

using Complex = std::complex<double>;

struct QuadratureConfig {
    int max_nodes = 4096;
    double abs_tol = 1e-18;
    double rel_tol = 1e-12;

    void validate() const {
        if (max_nodes < 16) throw domain_error("QuadratureConfig: max_nodes must be >= 16");
        if (!(abs_tol > 0) || !(rel_tol > 0))
            throw domain_error("QuadratureConfig: tolerances must be positive");
    }
};

// Principal branch (continuation from the positive real axis) of log Gamma.
// Throws domain_error at non-positive integers.
Complex log_gamma(Complex z);

// exp(log_gamma(z)).
Complex gamma(Complex z);

// True when z is within tol of a pole of Gamma (non-positive integers).
bool near_gamma_pole(Complex z, double tol = 1e-6);

// K_nu(x) for x > 0 via K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt,
// trapezoidal rule with step halving (the integrand decays doubly
// exponentially, so the trapezoid converges spectrally). Working range
// |Im nu| <= 50, |Re nu| <= 12. Throws underflow_error when exp(-x)
// underflows double range (x >= 690), convergence_error when the node budget
// is exhausted.
Complex bessel_k(Complex nu, double x, const QuadratureConfig& cfg = {});

// Riemann zeta by Euler-Maclaurin with a rigorous remainder bound, for
// |Im s| <= 50 and Re s > -25. Throws domain_error at s = 1.
Complex zeta(Complex s);

// Completed zeta, entire normalization:
//   xi(s) = (1/2) s (s-1) pi^{-s/2} Gamma(s/2) zeta(s),
// computed as (s-1) pi^{-s/2} Gamma(s/2+1) zeta(s) which is the same function
// without the removable Gamma-pole issue at s = 0. Satisfies xi(s) = xi(1-s).
// Note: ratios derived from the scattering closed form use Lambda = xi / (s(s-1)/2),
// where the polynomial factor cancels.
Complex xi(Complex s);

} // namespace fgr::special

#endif
