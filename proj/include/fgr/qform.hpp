#ifndef FGR_QFORM_HPP
#define FGR_QFORM_HPP

// Integral quaternary quadratic forms Q(x) = (1/2) x^T M x with even diagonal,
// exact lattice-point counting by bounded enumeration, and the explicit
// weight-2 newform of level 37 built from the theta-series difference
// (1/2)(theta_B - theta_C).

#include <array>
#include <cstdint>
#include <vector>

#include "fgr/errors.hpp"

namespace fgr::qform {

using Gram = std::array<std::array<std::int64_t, 4>, 4>;

class QuadraticForm {
  public:
    // Validates: symmetric, even diagonal, positive definite (all leading
    // principal minors > 0, checked in exact integer arithmetic).
    explicit QuadraticForm(const Gram& gram);

    // Q(x) = (1/2) x^T M x, exact.
    std::int64_t evaluate(const std::array<std::int64_t, 4>& x) const;

    const Gram& gram() const { return gram_; }

    // The two level-37 forms whose theta difference is the newform.
    static const QuadraticForm& form_b();
    static const QuadraticForm& form_c();

  private:
    Gram gram_;
};

struct ThetaCoefficients {
    std::int64_t upto = 0;
    std::vector<std::int64_t> r; // r[n] = #{x in Z^4 : Q(x) = n}, n = 0..upto
};

// Exact counts by nested enumeration (floating Cholesky bounds with an
// integer-safe +-1 slack, then exact integer evaluation of Q). Desk-scale
// bound upto <= 10^4.
ThetaCoefficients theta_coefficients(const QuadraticForm& form, std::int64_t upto);

// a_n = (r_B(n) - r_C(n)) / 2 for n = 1..upto; the halving is exact.
std::vector<std::int64_t> phi37_coefficients(std::int64_t upto);

} // namespace fgr::qform

#endif
