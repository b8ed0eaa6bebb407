#pragma once

#include <array>
#include <functional>

#include "sml/test_function.hpp"

namespace sml {

// One evaluation of A_t^alpha applied to a test function, for CSV export.
struct MeansEvaluation {
    MeansSpec spec;
    double t;
    double lambda;
    double radius;
    Complex value;
};

// A_t^alpha f_lambda(|x| = radius) through the Fourier multiplier:
//   lambda^{n + i Im alpha} int_0^inf theta(lambda |x| r) m^alpha(t lambda r)
//                e^{-2 pi i lambda r} chi(r) r^{n - 1 + i Im alpha} dr,
// freq_bound = 2 pi lambda (radius + t + 1). At t = 1 the integrand reduces
// to pi^{-alpha+1} lambda^{n/2+1-Re alpha} theta(lambda r |x|)
// e^{-2 pi i lambda r} chi(r) J_{n/2+alpha-1}(2 pi lambda r) r^{n/2 - Re alpha}
// after expanding the multiplier (asserted in the tests).
Complex spherical_mean_multiplier(const MeansSpec& spec, double t, const TestFunctionSpec& tf,
                                  double radius, const QuadratureSpec& quad);

// Direct kernel-side evaluation, valid for Re alpha > 0:
//   (1/Gamma(alpha)) int_{|y|<=1} (1-|y|^2)^{alpha-1} f(|x - t y|) dy
// for radial f, reduced to a 2-D integral over |y| and the angle to x. The
// radial variable is mapped through u = 1 - e^{-tau} so the (1-u^2)^{alpha-1}
// endpoint singularity becomes a smooth exponential decay. The result is
// cross-checked against a half-resolution pass; mismatch beyond tol raises
// ConvergenceError.
Complex spherical_mean_direct(const MeansSpec& spec, double t,
                              const std::function<Complex(double)>& radial_f, double radius,
                              double tol);

// Multiplier route specialized to the Gaussian e^{-pi |x|^2} (its own
// Fourier transform): a single radial Fourier-side integral, no test-function
// machinery. The reference input for cross-route oracle checks.
Complex spherical_mean_gaussian(const MeansSpec& spec, double t, double radius,
                                const QuadratureSpec& quad);

// max over the grid of |A_t^alpha f_lambda(radius)|; discrete stand-in for
// the maximal operator (the scaling laws only need t = 1 and t = |x| + 1).
double maximal_scan(const MeansSpec& spec, const TestFunctionSpec& tf, double radius,
                    std::span<const double> t_grid, const QuadratureSpec& quad);

// Leading-wave decomposition of A_1^alpha f_lambda(0): the multiplier's two
// waves e^{+-2 pi i lambda r} against the test function's e^{-2 pi i lambda r}
// give a zero-phase main term and an e^{-4 pi i lambda r} counter term; the
// remainder carries the expansion corrections.
struct OriginComponents {
    Complex main_term;    // zero-phase wave, size ~ lambda^{(n+1)/2 - Re alpha}
    Complex counter_wave; // e^{-4 pi i lambda r} wave, smaller than any power
    Complex remainder;    // total - main - counter, one power of lambda down
    Complex total;
};
OriginComponents origin_components(const MeansSpec& spec, const TestFunctionSpec& tf,
                                   const QuadratureSpec& quad);

// Four-wave decomposition of A_t^alpha f_lambda(x) for radius > 0: sphere
// factor waves e^{+-2 pi i lambda |x| r} times multiplier waves
// e^{+-2 pi i lambda t r} times the test function's e^{-2 pi i lambda r}.
// waves[k] carries phase coefficient sign pairs (+,+), (+,-), (-,+), (-,-)
// in that order: phase 2 pi lambda r (s1 |x| + s2 t - 1). At t = radius + 1
// the (-,+) wave is stationary and dominates with size ~ lambda^{1-Re alpha}.
struct TunedComponents {
    std::array<Complex, 4> waves;
    Complex remainder; // total - sum of waves
    Complex total;
};
TunedComponents tuned_components(const MeansSpec& spec, const TestFunctionSpec& tf, double t,
                                 double radius, const QuadratureSpec& quad);

} // namespace sml
