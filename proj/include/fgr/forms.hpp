#ifndef FGR_FORMS_HPP
#define FGR_FORMS_HPP

// Fourier-coefficient data models: the weight-2 holomorphic newform f, its
// antiderivative (Eichler integral) F, and Maass cusp form data; Hecke
// extension/validation and plain-text coefficient file ingestion.

#include <complex>
#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "fgr/errors.hpp"
#include "fgr/special.hpp"

namespace fgr::forms {

using Complex = std::complex<double>;

enum class Parity { even, odd };
enum class Source { synthetic, ingested };

// s_j = 1/2 + i r_j on the critical line, with multiplicity.
struct SpectralPoint {
    Complex s;
    double r = 0.0;
    int multiplicity = 1;

    static SpectralPoint from_r(double r, int multiplicity = 1) {
        if (multiplicity < 1) throw domain_error("SpectralPoint: multiplicity must be >= 1");
        return SpectralPoint{Complex(0.5, r), r, multiplicity};
    }
};

class HolomorphicCuspForm {
  public:
    // values = a_1, a_2, ... ; requires a_1 = 1 (newform normalization).
    HolomorphicCuspForm(int level, std::vector<double> values);

    double a(std::int64_t n) const;
    std::int64_t n_max() const { return static_cast<std::int64_t>(a_.size()); }
    int level() const { return level_; }

  private:
    int level_;
    std::vector<double> a_; // a_[k] = a_{k+1}
};

// Extends/validates via the weight-2 Hecke relations:
//   a_{p^{k+1}} = a_p a_{p^k} - p a_{p^{k-1}}   (p not dividing the level)
//   a_{p^k}     = a_p^k                         (p dividing the level)
//   a_{mn}      = a_m a_n                       (gcd(m, n) = 1)
// Throws domain_error naming the index on a missing prime or a mismatch with
// an already-stored value.
HolomorphicCuspForm hecke_extend(const HolomorphicCuspForm& f, std::int64_t primes_upto,
                                 std::int64_t upto);

// F(z) = sum a_n/(2 pi i n) e(nz); stores the base form, exposes the complex
// coefficients A_n and the real convolution weights a_n/n.
struct EichlerIntegral {
    HolomorphicCuspForm base;

    explicit EichlerIntegral(HolomorphicCuspForm f) : base(std::move(f)) {}
    Complex coefficient(std::int64_t n) const; // A_n = a_n / (2 pi i n)
    double weight(std::int64_t n) const;       // a_n / n
    std::vector<double> weights(std::int64_t upto) const; // 1-based packed w[0] = a_1/1
};

struct MaassFormData {
    double r = 0.0; // spectral parameter, s_j = 1/2 + i r
    Parity parity = Parity::even;
    std::vector<double> b; // b[k] = b_{k+1}; b_1 = 1 enforced
    Source source = Source::synthetic;
    std::vector<std::string> warnings; // growth-envelope notices, non-fatal

    double b_at(std::int64_t n) const;
    // b_{-n} through the realness convention: +b_n (even), -b_n (odd).
    double b_neg(std::int64_t n) const;
    std::int64_t n_max() const { return static_cast<std::int64_t>(b.size()); }
    SpectralPoint spectral_point() const { return SpectralPoint::from_r(r); }
};

// Validates b_1 = 1 and the growth sanity |b_n| <= C sqrt(n)(1 + log n)
// (violations become warnings on the returned object, not errors).
MaassFormData make_maass(double r, Parity parity, std::vector<double> values,
                         Source source = Source::synthetic, double growth_c = 10.0);

struct MaassEvaluation {
    double value = 0.0;
    double tail_bound = 0.0;    // heuristic, from the e^{-2 pi n y} decay
    bool truncation_ok = true;  // tail_bound below tolerance
};

// u(z) = sum_{n=1}^{trunc} b_n sqrt(y) K_{i r}(2 pi n y) * trig(2 pi n x),
// trig = 2cos (even) / 2sin (odd).
MaassEvaluation maass_evaluate(const MaassFormData& u, Complex z, int trunc,
                               const special::QuadratureConfig& cfg = {},
                               double tail_tol = 1e-10);

using IngestResult = std::variant<HolomorphicCuspForm, MaassFormData>;

// Plain-text coefficient files:
//   # type=maass level=<int> r=<float> parity=even|odd
//   # type=holomorphic level=<int>
// followed by `n value` lines with strictly increasing n starting at 1.
// Throws parse_error with the offending line number.
IngestResult ingest_coefficients(const std::filesystem::path& path);

void write_coefficients(const std::filesystem::path& path, const HolomorphicCuspForm& f);
void write_coefficients(const std::filesystem::path& path, const MaassFormData& u);

// CSV mirror of the same data: header `n,value`, one row per coefficient.
void write_coefficients_csv(const std::filesystem::path& path,
                            const std::vector<double>& values_1_based);

} // namespace fgr::forms

#endif
