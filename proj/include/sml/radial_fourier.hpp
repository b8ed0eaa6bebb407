#pragma once

#include <span>
#include <vector>

#include "sml/errors.hpp"
#include "sml/special_functions.hpp"

namespace sml {

// Order alpha and dimension n of the generalized spherical means A_t^alpha.
struct MeansSpec {
    Complex alpha;
    int n = 2;

    MeansSpec(Complex alpha_, int n_) : alpha(alpha_), n(n_) { validate(); }

    void validate() const {
        if (n < 2) throw DomainError("MeansSpec: dimension must be >= 2");
        if (!(std::isfinite(alpha.real()) && std::isfinite(alpha.imag())))
            throw DomainError("MeansSpec: alpha must be finite");
    }
};

// Radius below which the removable singularity at s = 0 is evaluated by the
// power series instead of the closed-form product.
inline constexpr double kRadialSeriesSwitch = 1e-3;

// Fourier transform of the surface measure of the unit sphere S^{n-1},
// as a function of the radius s = |xi|:
//   2 pi s^{(2-n)/2} J_{(n-2)/2}(2 pi s),
// extended through s = 0 by its power series; the value at 0 is the total
// measure 2 pi^{n/2} / Gamma(n/2). Real-valued.
double sphere_fourier(int n, double s);

// Radial multiplier of A_1^alpha:
//   m^alpha(s) = pi^{-alpha+1} s^{-n/2-alpha+1} J_{n/2+alpha-1}(2 pi s),
// series-evaluated below kRadialSeriesSwitch with limit
// pi^{n/2} / Gamma(n/2 + alpha) at s = 0. Near-singularity evaluation
// throws DomainError when n/2 + alpha sits within 1e-12 of a pole of Gamma.
class MultiplierEvaluator {
public:
    explicit MultiplierEvaluator(const MeansSpec& spec);

    Complex operator()(double s) const;
    const MeansSpec& spec() const { return spec_; }

private:
    MeansSpec spec_;
    BesselEvaluator bessel_;     // order n/2 + alpha - 1
    Complex power_exponent_;     // -n/2 - alpha + 1
    Complex log_pi_prefactor_;   // (1 - alpha) log(pi)
    bool limit_pole_;
    std::vector<Complex> series_coeffs_; // pi^{n/2} (-1)^j / (j! Gamma(j + n/2 + alpha))
};

// One-off evaluation (builds an evaluator internally).
Complex multiplier(const MeansSpec& spec, double s);

// Diagnostic check that |m^alpha(s)| decays like s^{-(n-1)/2 - Re alpha}:
// tabulates the normalized product and flags growth beyond twice its median.
struct DecayRow {
    double s;
    double abs_m;
    double normalized; // |m(s)| * s^{(n-1)/2 + Re alpha}
};

struct DecayCheck {
    std::vector<DecayRow> rows;
    double median_normalized = 0.0;
    bool growth_flagged = false;
};

DecayCheck multiplier_decay_check(const MeansSpec& spec, std::span<const double> s_grid);

} // namespace sml
