#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "sml/errors.hpp"

namespace sml {

using Complex = std::complex<double>;

// Gamma function for complex argument. Lanczos approximation (g = 7, nine
// coefficients) on Re z >= 1/2, reflection formula elsewhere. Relative error
// is below ~1e-13 for |z| <= 50.
// Throws DomainError when z lies within 1e-14 of a pole (0, -1, -2, ...).
Complex complex_gamma(Complex z);

// Coefficient data of the large-argument two-wave expansion
//
//   J_beta(r) = r^{-1/2} e^{ ir} [b0 + E1(r)]
//             + r^{-1/2} e^{-ir} [d0 + E2(r)],      r >= 1,
//
// where E1(r) = sum_{k>=1} c1_k r^{-k}, E2(r) = sum_{k>=1} c2_k r^{-k} and
// correction_terms[k-1] = (c1_k, c2_k). The leading coefficients are
//   b0 = (2 pi)^{-1/2} e^{-i(beta pi/2 + pi/4)},
//   d0 = (2 pi)^{-1/2} e^{+i(beta pi/2 + pi/4)},
// the unique choice consistent with the half-integer closed forms
// (e.g. J_{1/2}(r) = sqrt(2/(pi r)) sin r).
struct AsymptoticCoeffs {
    Complex b0;
    Complex d0;
    std::vector<std::pair<Complex, Complex>> correction_terms;
};

AsymptoticCoeffs bessel_asymptotic_coeffs(Complex beta, int num_terms);

// Power series  sum_j (-1)^j / (j! Gamma(j+beta+1)) (r/2)^{2j+beta}  with the
// principal branch for (r/2)^beta. Terms are accumulated until one falls
// below 1e-16 of the running sum; if that never happens within max_terms,
// throws ConvergenceError (r too large for the series route). Above r = 12
// the alternating sum is accumulated in quad precision, which keeps the
// route accurate through r ~ 60 despite the exponential cancellation.
// Throws DomainError for r < 0, and at r = 0 when Re beta < 0 (or beta is
// purely imaginary and nonzero), where the limit diverges or does not exist.
Complex bessel_j_series(Complex beta, double r, int max_terms = 400);

// Two-wave expansion evaluated from bessel_asymptotic_coeffs; terms are cut
// off at the first sign of divergence (optimal truncation). Requires r >= 1.
Complex bessel_j_asymptotic(Complex beta, double r, int num_correction_terms = 24);

// Crossover radius between the series and asymptotic routes:
// max(12, |beta|^2). The series loses digits to cancellation past r ~ 12 in
// plain double precision, and the expansion needs r well above |beta|^2.
double bessel_crossover(Complex beta);

// J_beta(r) for r >= 0: series below the crossover radius, asymptotic
// expansion above it. Continuous to ~1e-9 relative across the switch.
Complex bessel_j(Complex beta, double r);

// Evaluator for a fixed order: precomputes the expansion coefficients once.
// Immutable after construction, safe to call from any number of threads.
class BesselEvaluator {
public:
    explicit BesselEvaluator(Complex beta, int num_correction_terms = 24);

    Complex operator()(double r) const;
    Complex order() const { return beta_; }
    double crossover() const { return crossover_; }
    const AsymptoticCoeffs& coeffs() const { return coeffs_; }

private:
    Complex beta_;
    double crossover_;
    bool real_order_;
    AsymptoticCoeffs coeffs_;
};

} // namespace sml
