#include "fgr/qform.hpp"

#include <cmath>
#include <string>

namespace fgr::qform {

namespace {

// Leading principal minor of order k (k <= 4), exact in int64 for the entry
// sizes accepted here.
std::int64_t leading_minor(const Gram& g, int k) {
    auto det2 = [](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
        return a * d - b * c;
    };
    switch (k) {
        case 1:
            return g[0][0];
        case 2:
            return det2(g[0][0], g[0][1], g[1][0], g[1][1]);
        case 3: {
            std::int64_t d = 0;
            d += g[0][0] * det2(g[1][1], g[1][2], g[2][1], g[2][2]);
            d -= g[0][1] * det2(g[1][0], g[1][2], g[2][0], g[2][2]);
            d += g[0][2] * det2(g[1][0], g[1][1], g[2][0], g[2][1]);
            return d;
        }
        default: {
            std::int64_t d = 0;
            for (int j = 0; j < 4; ++j) {
                // minor of (0, j)
                std::array<std::array<std::int64_t, 3>, 3> m{};
                for (int r = 1; r < 4; ++r) {
                    int cc = 0;
                    for (int c = 0; c < 4; ++c) {
                        if (c == j) continue;
                        m[r - 1][cc++] = g[r][c];
                    }
                }
                std::int64_t d3 = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                                  m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                                  m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
                d += ((j % 2 == 0) ? 1 : -1) * g[0][j] * d3;
            }
            return d;
        }
    }
}

} // namespace

QuadraticForm::QuadraticForm(const Gram& gram) : gram_(gram) {
    for (int i = 0; i < 4; ++i) {
        if (gram[i][i] % 2 != 0) {
            throw domain_error("QuadraticForm: diagonal entries must be even");
        }
        for (int j = 0; j < i; ++j) {
            if (gram[i][j] != gram[j][i]) {
                throw domain_error("QuadraticForm: Gram matrix must be symmetric");
            }
        }
    }
    for (int k = 1; k <= 4; ++k) {
        if (leading_minor(gram, k) <= 0) {
            throw domain_error("QuadraticForm: not positive definite (minor of order " +
                               std::to_string(k) + " is <= 0)");
        }
    }
}

std::int64_t QuadraticForm::evaluate(const std::array<std::int64_t, 4>& x) const {
    std::int64_t q2 = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            q2 += gram_[i][j] * x[i] * x[j];
        }
    }
    return q2 / 2; // q2 is even: even diagonal and the symmetric cross terms pair up
}

const QuadraticForm& QuadraticForm::form_b() {
    static const QuadraticForm b(Gram{{{{2, 1, 0, 1}},
                                       {{1, 8, 1, -3}},
                                       {{0, 1, 10, 2}},
                                       {{1, -3, 2, 12}}}});
    return b;
}

const QuadraticForm& QuadraticForm::form_c() {
    static const QuadraticForm c(Gram{{{{4, 1, 2, 1}},
                                       {{1, 4, 1, 0}},
                                       {{2, 1, 6, -2}},
                                       {{1, 0, -2, 20}}}});
    return c;
}

ThetaCoefficients theta_coefficients(const QuadraticForm& form, std::int64_t upto) {
    if (upto < 0) throw domain_error("theta_coefficients: upto must be >= 0");
    if (upto > 10000) {
        throw domain_error("theta_coefficients: upto exceeds the desk-scale bound 10^4");
    }

    const Gram& g = form.gram();

    // LDL^T of the Gram matrix in doubles; Q(x) = (1/2) sum_i d_i (x_i + sum_{j>i} l_ji x_j)^2.
    double a[4][4];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a[i][j] = static_cast<double>(g[i][j]);
    double d[4], l[4][4] = {};
    for (int i = 0; i < 4; ++i) l[i][i] = 1.0;
    for (int j = 0; j < 4; ++j) {
        double dj = a[j][j];
        for (int k = 0; k < j; ++k) dj -= l[j][k] * l[j][k] * d[k];
        d[j] = dj;
        for (int i = j + 1; i < 4; ++i) {
            double v = a[i][j];
            for (int k = 0; k < j; ++k) v -= l[i][k] * l[j][k] * d[k];
            l[i][j] = v / dj;
        }
    }

    ThetaCoefficients out;
    out.upto = upto;
    out.r.assign(static_cast<std::size_t>(upto) + 1, 0);
    out.r[0] = 1; // the zero vector

    const double q_cap = 2.0 * static_cast<double>(upto); // x^T M x <= 2 upto

    // Enumerate the half-space where the last nonzero coordinate (in the
    // order x4, x3, x2, x1) is positive; count each vector twice.
    std::array<std::int64_t, 4> x{};
    std::int64_t budget = 0;
    const std::int64_t budget_cap = 500000000;

    // residual[i] = remaining quadratic budget at level i; shift[i] = sum_{j>i} l_ji x_j
    double shift[4];

    auto bound_for = [&](int i, double residual) {
        // d_i (x_i + shift_i)^2 <= residual, +-1 integer slack
        double w = std::sqrt(std::max(residual, 0.0) / d[i]);
        return w;
    };

    // recursive lambda over coordinates i = 3, 2, 1, 0
    auto recurse = [&](auto&& self, int i, double residual, bool all_above_zero) -> void {
        shift[i] = 0.0;
        for (int j = i + 1; j < 4; ++j) shift[i] += l[j][i] * static_cast<double>(x[j]);
        double w = bound_for(i, residual);
        std::int64_t lo = static_cast<std::int64_t>(std::floor(-w - shift[i])) - 1;
        std::int64_t hi = static_cast<std::int64_t>(std::ceil(w - shift[i])) + 1;
        if (all_above_zero) lo = 0; // half-space: first nonzero coordinate positive
        for (std::int64_t v = lo; v <= hi; ++v) {
            if (++budget > budget_cap) {
                throw convergence_error("theta_coefficients: enumeration budget exceeded");
            }
            x[i] = v;
            double t = static_cast<double>(v) + shift[i];
            double used = d[i] * t * t;
            if (i == 0) {
                if (all_above_zero && v == 0) continue; // skip the zero vector
                std::int64_t q = form.evaluate(x);
                if (q >= 1 && q <= upto) out.r[static_cast<std::size_t>(q)] += 2;
            } else {
                double rem = residual - used;
                if (rem < -2.0 * d[i]) continue; // outside even with slack
                self(self, i - 1, std::max(rem, 2.0), all_above_zero && v == 0);
            }
        }
        x[i] = 0;
    };
    recurse(recurse, 3, q_cap + 2.0, true);
    return out;
}

std::vector<std::int64_t> phi37_coefficients(std::int64_t upto) {
    if (upto < 1) throw domain_error("phi37_coefficients: upto must be >= 1");
    ThetaCoefficients rb = theta_coefficients(QuadraticForm::form_b(), upto);
    ThetaCoefficients rc = theta_coefficients(QuadraticForm::form_c(), upto);
    std::vector<std::int64_t> a(static_cast<std::size_t>(upto) + 1, 0);
    for (std::int64_t n = 1; n <= upto; ++n) {
        std::int64_t diff = rb.r[static_cast<std::size_t>(n)] - rc.r[static_cast<std::size_t>(n)];
        if (diff % 2 != 0) {
            throw domain_error("phi37_coefficients: r_B(n) - r_C(n) odd at n = " +
                               std::to_string(n));
        }
        a[static_cast<std::size_t>(n)] = diff / 2;
    }
    a.erase(a.begin()); // 1-based list a_1..a_upto
    return a;
}

} // namespace fgr::qform
