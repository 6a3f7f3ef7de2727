#include "fgr/special.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "fgr/quadrature.hpp"

namespace fgr::special {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLogPi = 1.1447298858494001741;
constexpr double kHalfLog2Pi = 0.91893853320467274178;

// Lanczos, g = 607/128, 15 terms (Godfrey's coefficients). Relative error of
// the reconstructed Gamma is ~1e-15 in the right half-plane.
constexpr double kLanczosG = 4.7421875;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,   -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978, 0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

Complex lanczos_log_gamma(Complex z) {
    // valid for Re z >= 0.5
    Complex sum = kLanczos[0];
    for (std::size_t k = 1; k < kLanczos.size(); ++k) {
        sum += kLanczos[k] / (z - 1.0 + static_cast<double>(k));
    }
    Complex t = z + (kLanczosG - 0.5);
    return kHalfLog2Pi + (z - 0.5) * std::log(t) - t + std::log(sum);
}

// log sin(pi z) with the branch that makes the reflection formula below
// produce the continuation of log Gamma from the positive axis. For
// Im z >= 0 use sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z}); the last
// factor stays in the unit disc around 1, so its principal log is continuous.
Complex log_sin_pi(Complex z) {
    if (z.imag() >= 0.0) {
        Complex w = std::exp(Complex(0.0, 2.0 * kPi) * z);
        return Complex(-std::log(2.0), 0.5 * kPi) - Complex(0.0, kPi) * z +
               std::log(1.0 - w);
    }
    return std::conj(log_sin_pi(std::conj(z)));
}

// Bernoulli numbers B_2, B_4, ..., B_30.
constexpr std::array<double, 15> kBernoulli2k = {
    1.0 / 6,
    -1.0 / 30,
    1.0 / 42,
    -1.0 / 30,
    5.0 / 66,
    -691.0 / 2730,
    7.0 / 6,
    -3617.0 / 510,
    43867.0 / 798,
    -174611.0 / 330,
    854513.0 / 138,
    -236364091.0 / 2730,
    8553103.0 / 6,
    -23749461029.0 / 870,
    8615841276005.0 / 14322,
};

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

bool near_gamma_pole(Complex z, double tol) {
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) < tol && std::abs(z.imag()) < tol;
}

Complex log_gamma(Complex z) {
    if (near_gamma_pole(z, 1e-12)) {
        throw domain_error("log_gamma: pole at non-positive integer");
    }
    if (z.real() >= 0.5) {
        return lanczos_log_gamma(z);
    }
    return kLogPi - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
}

Complex gamma(Complex z) {
    Complex lg = log_gamma(z);
    if (lg.real() > 700.0) {
        throw domain_error("gamma: overflow (|Gamma| exceeds double range)");
    }
    return std::exp(lg);
}

Complex bessel_k(Complex nu, double x, const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(x > 0.0)) throw domain_error("bessel_k: requires x > 0");
    if (std::abs(nu.imag()) > 50.0 || std::abs(nu.real()) > 12.0) {
        throw domain_error("bessel_k: order outside working range |Im nu| <= 50, |Re nu| <= 12");
    }
    if (x >= 690.0) {
        throw underflow_error("bessel_k: K_nu(x) ~ e^{-x} underflows for x >= 690");
    }

    // Truncation point: exp(-x cosh T + |Re nu| T) <= abs_tol * exp(-x).
    const double abs_nu_re = std::abs(nu.real());
    const double budget = x + std::log(1.0 / cfg.abs_tol);
    double t_end = 3.0;
    for (int i = 0; i < 6; ++i) {
        t_end = std::acosh((budget + abs_nu_re * t_end) / x + 1.0);
    }
    t_end += 0.5;

    auto f = [&](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(nu * t); };

    // Initial step must resolve both the cos(Im nu * t) oscillation and the
    // exp(-x cosh t) peak of width ~ 1/sqrt(x).
    double h0 = std::min({0.5, kPi / (4.0 * (1.0 + std::abs(nu.imag()))),
                          0.5 / std::sqrt(std::max(x, 1.0))});
    int n0 = std::max(16, static_cast<int>(std::ceil(t_end / h0)));
    double floor = cfg.abs_tol * std::exp(-x);
    auto res = quad::trapezoid(f, 0.0, t_end, cfg, floor, n0);
    return res.value;
}

Complex zeta(Complex s) {
    if (std::abs(s - 1.0) < 1e-12) throw domain_error("zeta: pole at s = 1");
    if (std::abs(s.imag()) > 55.0) {
        throw domain_error("zeta: |Im s| outside documented range (<= 50)");
    }
    if (s.real() < -25.0) {
        throw domain_error("zeta: Re s outside documented range (> -25)");
    }

    constexpr int kTerms = 13; // Bernoulli terms B_2 .. B_26; B_28 bounds the tail
    int n = 24 + static_cast<int>(std::ceil(std::abs(s.imag()) / 3.0));
    for (int attempt = 0; attempt < 4; ++attempt) {
        Complex sum = 0.0;
        for (int k = 1; k < n; ++k) {
            sum += std::exp(-s * std::log(static_cast<double>(k)));
        }
        Complex npow = std::exp(-s * std::log(static_cast<double>(n))); // n^{-s}
        sum += npow * static_cast<double>(n) / (s - 1.0);               // n^{1-s}/(s-1)
        sum += 0.5 * npow;

        // Euler-Maclaurin correction terms:
        //   B_{2k}/(2k)! * s(s+1)...(s+2k-2) * n^{-s-2k+1}
        Complex poch = s;                     // (s)_{2k-1}
        Complex scale = npow / static_cast<double>(n); // n^{-s-2k+1} at k=1
        const double inv_n2 = 1.0 / (static_cast<double>(n) * n);
        for (int k = 1; k <= kTerms; ++k) {
            sum += kBernoulli2k[k - 1] / factorial(2 * k) * poch * scale;
            poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
            scale *= inv_n2;
        }
        // Rigorous remainder bound: first omitted term times |s+2K+1|/(sigma+2K+1).
        const int big_k = kTerms + 1;
        double bound = std::abs(kBernoulli2k[big_k - 1] / factorial(2 * big_k) * poch * scale) *
                       std::abs((s + static_cast<double>(2 * kTerms + 1)) /
                                (s.real() + 2 * kTerms + 1));
        if (bound <= 1e-17 * std::max(1.0, std::abs(sum))) {
            return sum;
        }
        n *= 2;
    }
    throw convergence_error("zeta: Euler-Maclaurin bound did not reach tolerance");
}

Complex xi(Complex s) {
    // (s-1) pi^{-s/2} Gamma(s/2+1) zeta(s); the (s-1)zeta(s) product is
    // regular at s = 1 and handled by its Laurent expansion there.
    constexpr double kEulerGamma = 0.57721566490153286061;
    Complex zpart;
    if (std::abs(s - 1.0) < 1e-6) {
        zpart = 1.0 + kEulerGamma * (s - 1.0);
    } else {
        zpart = (s - 1.0) * zeta(s);
    }
    return zpart * std::exp(-0.5 * s * kLogPi + log_gamma(0.5 * s + 1.0));
}

} // namespace fgr::special
