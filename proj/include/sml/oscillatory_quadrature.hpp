#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "sml/errors.hpp"
#include "sml/special_functions.hpp"

namespace sml {

struct Interval {
    double a = 0.0;
    double b = 0.0;
    double length() const { return b - a; }
};

// Panel-based Gauss rule controls. Panel width is chosen so the phase
// advance per panel stays below max_phase_per_panel; a 16-node rule
// integrates sub-half-period oscillations to near machine precision.
struct QuadratureSpec {
    int nodes_per_panel = 16;
    double max_phase_per_panel = std::numbers::pi / 2.0;
    double abs_tol = 1e-12;
    double rel_tol = 1e-9;

    void validate() const {
        if (nodes_per_panel < 8)
            throw DomainError("QuadratureSpec: nodes_per_panel must be >= 8");
        if (!(max_phase_per_panel > 0.0) || max_phase_per_panel > std::numbers::pi)
            throw DomainError("QuadratureSpec: max_phase_per_panel must be in (0, pi]");
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
            throw DomainError("QuadratureSpec: tolerances must be positive");
    }
};

// Gauss-Legendre rule on (-1, 1); nodes ascending. Cached per order.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

namespace detail {

template <typename F>
Complex composite_gauss(F&& f, Interval support, std::size_t panels, const GaussRule& rule) {
    const double h = support.length() / static_cast<double>(panels);
    Complex total = 0.0;
    for (std::size_t p = 0; p < panels; ++p) {
        const double lo = support.a + h * static_cast<double>(p);
        const double mid = lo + 0.5 * h;
        const double half = 0.5 * h;
        Complex acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
        total += acc * half;
    }
    return total;
}

} // namespace detail

// Integrates a complex-valued integrand over a bounded interval. freq_bound
// must bound the total phase derivative of the integrand (e.g. 2 pi lambda
// (|x| + t + 1) for the radial oscillatory integrals); panel width is
// max_phase_per_panel / max(freq_bound, 1), further capped at 1/64 of the
// support so a non-oscillatory amplitude is still resolved (the smooth-step
// cutoff edges need about that much at rel_tol ~ 1e-9). The result is
// cross-checked against a one-step-coarser partition; a mismatch beyond
// max(abs_tol, rel_tol * |value|) raises ConvergenceError.
template <typename F>
Complex integrate_oscillatory(F&& integrand, Interval support, double freq_bound,
                              const QuadratureSpec& spec) {
    spec.validate();
    if (!(freq_bound >= 0.0))
        throw DomainError("integrate_oscillatory: freq_bound must be >= 0");
    const double len = support.length();
    if (!(len >= 0.0) || !std::isfinite(len))
        throw DomainError("integrate_oscillatory: support must be a bounded interval");
    if (len == 0.0) return 0.0;

    const double width =
        std::min(spec.max_phase_per_panel / std::max(freq_bound, 1.0), len / 64.0);
    const auto panels = static_cast<std::size_t>(std::ceil(len / width));
    const GaussRule& rule = gauss_legendre(spec.nodes_per_panel);

    const Complex value = detail::composite_gauss(integrand, support, panels, rule);
    const Complex coarse =
        detail::composite_gauss(integrand, support, (panels + 1) / 2, rule);
    const double err = std::abs(value - coarse);
    if (err > std::max(spec.abs_tol, spec.rel_tol * std::abs(value)))
        throw ConvergenceError("integrate_oscillatory: value not stable under panel "
                               "refinement (estimated error " + std::to_string(err) + ")");
    return value;
}

// Nonuniform radial quadrature grid: strictly increasing radii with the
// weights of the composite rule that produced them (sum of weights equals
// the covered length).
struct RadialGrid {
    std::vector<double> radii;
    std::vector<double> weights;

    // Composite Gauss rule over consecutive [breakpoints[i], breakpoints[i+1]].
    static RadialGrid composite_gauss(std::span<const double> breakpoints, int nodes_per_panel);

    double covered_length() const;
    void validate() const;
};

// L^p(R^n) norm of a radial profile sampled on the grid:
//   ( omega_{n-1} * sum_i w_i |v_i|^p r_i^{n-1} )^{1/p},
// omega_{n-1} = 2 pi^{n/2} / Gamma(n/2) the area of the unit sphere.
double lp_norm_radial(std::span<const Complex> values, const RadialGrid& grid, double p, int n);

// Surface measure of the unit sphere S^{n-1}.
double unit_sphere_area(int n);

} // namespace sml
