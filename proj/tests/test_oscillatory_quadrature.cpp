#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sml/oscillatory_quadrature.hpp"
#include "sml/scaling_lab.hpp"
#include "sml/test_function.hpp"

using namespace sml;

namespace {
constexpr double kPi = std::numbers::pi;
const QuadratureSpec kDefault{};
} // namespace

TEST_SUITE("oscillatory_quadrature") {

TEST_CASE("constant amplitude, no oscillation") {
    const Complex v = integrate_oscillatory([](double) { return Complex(1.0); },
                                            Interval{0.0, 1.0}, 0.0, kDefault);
    CHECK(std::abs(v - 1.0) < 1e-12);
}

TEST_CASE("full periods cancel exactly") {
    // int_0^1 e^{-2 pi i 100 r} dr = 0
    const double lambda = 100.0;
    const Complex v = integrate_oscillatory(
        [&](double r) { return std::exp(Complex(0.0, -2.0 * kPi * lambda * r)); },
        Interval{0.0, 1.0}, 2.0 * kPi * lambda, kDefault);
    CHECK(std::abs(v) < 1e-10);
}

TEST_CASE("oscillatory cancellation decays like 1/lambda") {
    // fractional lambda keeps |sin(pi lambda)| fixed across decades
    std::vector<double> lambdas = {100.37, 1000.37, 10000.37};
    std::vector<double> sizes;
    for (double lambda : lambdas) {
        const Complex v = integrate_oscillatory(
            [&](double r) { return std::exp(Complex(0.0, -2.0 * kPi * lambda * r)); },
            Interval{0.0, 1.0}, 2.0 * kPi * lambda, kDefault);
        sizes.push_back(std::abs(v));
    }
    const LinearFit fit = fit_loglog(lambdas, sizes);
    CHECK(fit.slope == doctest::Approx(-1.0).epsilon(0.02));
}

TEST_CASE("self-refinement oracle at lambda = 64") {
    const BumpSpec bump{};
    const double lambda = 64.0;
    auto integrand = [&](double r) {
        return chi(bump, r) * r * std::exp(Complex(0.0, -2.0 * kPi * lambda * r));
    };
    const Complex v =
        integrate_oscillatory(integrand, bump.support, 2.0 * kPi * lambda, kDefault);
    QuadratureSpec oversampled = kDefault;
    oversampled.max_phase_per_panel /= 10.0;
    const Complex ref =
        integrate_oscillatory(integrand, bump.support, 2.0 * kPi * lambda, oversampled);
    // the value itself is ~1e-8 of the integrand scale, so allow a couple of
    // ulps of double accumulation on top of the relative target
    CHECK(std::abs(v - ref) < 1e-8 * std::abs(ref) + 1e-15);
}

TEST_CASE("misdeclared frequency raises ConvergenceError") {
    // non-integer frequency so no aliasing symmetry can rescue the result
    auto integrand = [](double r) { return std::exp(Complex(0.0, -2.0 * kPi * 500.37 * r)); };
    CHECK_THROWS_AS(
        (void)integrate_oscillatory(integrand, Interval{0.0, 1.0}, 0.0, kDefault),
        ConvergenceError);
}

TEST_CASE("refinement stability under halved panel phase") {
    const BumpSpec bump{};
    for (double lambda : {64.0, 256.0}) {
        auto integrand = [&](double r) {
            return chi(bump, r) * r * std::exp(Complex(0.0, -2.0 * kPi * lambda * r));
        };
        const Complex base =
            integrate_oscillatory(integrand, bump.support, 2.0 * kPi * lambda, kDefault);
        QuadratureSpec halved = kDefault;
        halved.max_phase_per_panel /= 2.0;
        const Complex fine =
            integrate_oscillatory(integrand, bump.support, 2.0 * kPi * lambda, halved);
        CHECK(std::abs(base - fine) <=
              std::max(kDefault.abs_tol, kDefault.rel_tol * std::abs(base)));
    }
}

TEST_CASE("spec validation") {
    QuadratureSpec bad = kDefault;
    bad.nodes_per_panel = 4;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = kDefault;
    bad.max_phase_per_panel = 4.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = kDefault;
    bad.rel_tol = 0.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("radial grid invariants") {
    const double breaks[4] = {0.0, 0.5, 1.25, 2.0};
    const RadialGrid grid = RadialGrid::composite_gauss(breaks, 12);
    CHECK(grid.covered_length() == doctest::Approx(2.0).epsilon(1e-12));
    for (std::size_t i = 0; i + 1 < grid.radii.size(); ++i)
        CHECK(grid.radii[i] < grid.radii[i + 1]);
    const double unsorted[3] = {0.0, 1.0, 0.5};
    CHECK_THROWS_AS((void)RadialGrid::composite_gauss(unsorted, 8), DomainError);
}

TEST_CASE("radial L^p norms against closed forms") {
    // indicator of the unit disk, p = 1: area pi
    {
        const double breaks[3] = {0.0, 0.5, 1.0};
        const RadialGrid grid = RadialGrid::composite_gauss(breaks, 16);
        std::vector<Complex> ones(grid.radii.size(), Complex(1.0));
        CHECK(lp_norm_radial(ones, grid, 1.0, 2) == doctest::Approx(kPi).epsilon(1e-12));
    }
    // Gaussian e^{-pi rho^2}, p = 2, n = 2: (int e^{-2 pi |x|^2})^{1/2} = 2^{-1/2}
    {
        std::vector<double> breaks;
        for (double b = 0.0; b <= 6.01; b += 0.25) breaks.push_back(b);
        const RadialGrid grid = RadialGrid::composite_gauss(breaks, 16);
        std::vector<Complex> values(grid.radii.size());
        for (std::size_t i = 0; i < grid.radii.size(); ++i)
            values[i] = std::exp(-kPi * grid.radii[i] * grid.radii[i]);
        CHECK(lp_norm_radial(values, grid, 2.0, 2) ==
              doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
    }
}

TEST_CASE("norm homogeneity and triangle inequality on random profiles") {
    std::vector<double> breaks;
    for (double b = 0.0; b <= 3.01; b += 0.5) breaks.push_back(b);
    const RadialGrid grid = RadialGrid::composite_gauss(breaks, 8);

    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    auto random_profile = [&] {
        std::vector<Complex> v(grid.radii.size());
        const Complex a(coef(rng), coef(rng)), b(coef(rng), coef(rng)), c(coef(rng), coef(rng));
        for (std::size_t i = 0; i < v.size(); ++i) {
            const double r = grid.radii[i];
            v[i] = (a + b * r + c * r * r) * std::exp(-r);
        }
        return v;
    };

    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_profile();
        const auto g = random_profile();
        for (double p : {2.0, 4.0, 6.0}) {
            const double nf = lp_norm_radial(f, grid, p, 2);
            const double ng = lp_norm_radial(g, grid, p, 2);
            std::vector<Complex> sum(f.size()), scaled(f.size());
            const Complex c(1.5, -2.0);
            for (std::size_t i = 0; i < f.size(); ++i) {
                sum[i] = f[i] + g[i];
                scaled[i] = c * f[i];
            }
            CHECK(lp_norm_radial(sum, grid, p, 2) <= nf + ng + 1e-12);
            CHECK(lp_norm_radial(scaled, grid, p, 2) ==
                  doctest::Approx(std::abs(c) * nf).epsilon(1e-12));
        }
    }
}

} // TEST_SUITE
