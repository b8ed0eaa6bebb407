#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "sml/radial_fourier.hpp"

using namespace sml;

namespace {
constexpr double kPi = std::numbers::pi;

double rel_err(Complex got, Complex want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}
} // namespace

TEST_SUITE("radial_fourier") {

TEST_CASE("sphere transform at zero is the total surface measure") {
    CHECK(std::abs(sphere_fourier(2, 0.0) - 2.0 * kPi) < 1e-12);       // |S^1|
    CHECK(std::abs(sphere_fourier(3, 0.0) - 4.0 * kPi) < 1e-12);       // |S^2|
    CHECK(std::abs(sphere_fourier(4, 0.0) - 2.0 * kPi * kPi) < 1e-12); // |S^3|
}

TEST_CASE("n = 3 closed form 2 sin(2 pi s)/s") {
    for (double s = 0.01; s <= 50.0; s *= 1.31)
        CHECK(std::abs(sphere_fourier(3, s) - 2.0 * std::sin(2.0 * kPi * s) / s) < 1e-9);
    CHECK(std::abs(sphere_fourier(3, 1.0)) < 1e-12); // 2 sin(2 pi) = 0
}

TEST_CASE("direct sphere quadrature oracle") {
    for (int n : {2, 3, 4})
        for (double s : {0.3, 1.0, 2.7}) {
            const double direct = oracles::sphere_fourier_direct(n, s);
            CHECK_MESSAGE(std::abs(sphere_fourier(n, s) - direct) < 1e-9, "n=", n, " s=", s);
        }
}

TEST_CASE("small-radius consistency and switch continuity") {
    for (int n : {2, 3, 4}) {
        for (double s : {1e-5, 5e-5, 9.9e-5})
            CHECK(std::abs(sphere_fourier(n, s) - sphere_fourier(n, 0.0)) < 1e-6);
        const double below = sphere_fourier(n, kRadialSeriesSwitch * (1.0 - 1e-9));
        const double above = sphere_fourier(n, kRadialSeriesSwitch * (1.0 + 1e-9));
        CHECK(std::abs(below - above) < 1e-9 * std::abs(above));
    }
    const MeansSpec spec(Complex(0.7, 0.3), 3);
    const MultiplierEvaluator m(spec);
    CHECK(rel_err(m(kRadialSeriesSwitch * (1.0 - 1e-9)),
                  m(kRadialSeriesSwitch * (1.0 + 1e-9))) < 1e-9);
}

TEST_CASE("alpha = 0 multiplier is half the sphere transform") {
    for (int n : {2, 3}) {
        const MultiplierEvaluator m(MeansSpec(0.0, n));
        for (double s = 0.0; s <= 100.0; s += 0.73) {
            const double want = 0.5 * sphere_fourier(n, s);
            CHECK(rel_err(m(s), want) < 1e-9);
        }
    }
}

TEST_CASE("multiplier limits at s = 0") {
    // n=2, alpha=1: total mass of the ball-average kernel = unit-disk area
    CHECK(rel_err(multiplier(MeansSpec(1.0, 2), 0.0), kPi) < 1e-12);
    // complex order: pi / Gamma(1.3 + 0.2i), cross-checked against the
    // series route just above zero
    const MeansSpec spec(Complex(0.3, 0.2), 2);
    const Complex limit = kPi / complex_gamma(Complex(1.3, 0.2));
    CHECK(rel_err(multiplier(spec, 0.0), limit) < 1e-12);
    CHECK(rel_err(multiplier(spec, 1e-6), limit) < 1e-9);
}

TEST_CASE("multiplier pole at nonpositive n/2 + alpha") {
    const MeansSpec spec(Complex(-1.0, 0.0), 2); // n/2 + alpha = 0
    CHECK_THROWS_AS((void)multiplier(spec, 0.0), DomainError);
    CHECK_NOTHROW((void)multiplier(spec, 0.5)); // closed form is fine away from 0
}

TEST_CASE("decay diagnostic") {
    std::vector<double> grid;
    for (int s = 10; s <= 100; s += 10) grid.push_back(s);

    for (Complex alpha : {Complex(0.0, 0.0), Complex(-0.5, 0.0)}) {
        const DecayCheck check = multiplier_decay_check(MeansSpec(alpha, 2), grid);
        CHECK(!check.growth_flagged);
        for (const DecayRow& row : check.rows) {
            CHECK(row.normalized > 0.3 * check.median_normalized);
            CHECK(row.normalized < 3.0 * check.median_normalized);
        }
    }

    // integrable kernel: |m^1(s)| -> 0
    const MultiplierEvaluator m(MeansSpec(1.0, 3));
    CHECK(std::abs(m(80.0)) < 1e-3);
    CHECK(std::abs(m(80.0)) < std::abs(m(5.0)));

    CHECK_THROWS_AS((void)multiplier_decay_check(MeansSpec(0.0, 2), std::vector<double>{}),
                    DomainError);
    CHECK_THROWS_AS(
        (void)multiplier_decay_check(MeansSpec(0.0, 2), std::vector<double>{3.0, 2.0}),
        DomainError);
}

TEST_CASE("means spec validation") {
    CHECK_THROWS_AS(MeansSpec(0.0, 1), DomainError);
    CHECK_THROWS_AS(MeansSpec(Complex(std::nan(""), 0.0), 2), DomainError);
}

} // TEST_SUITE
