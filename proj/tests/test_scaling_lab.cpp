#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "sml/io.hpp"
#include "sml/scaling_lab.hpp"

using namespace sml;

namespace {
constexpr double kPi = std::numbers::pi;
const QuadratureSpec kFast{8, kPi / 2.0, 1e-12, 1e-9};
} // namespace

TEST_SUITE("scaling_lab") {

TEST_CASE("log-log fit recovers exact power laws") {
    std::vector<double> x = {64.0, 128.0, 256.0, 512.0};
    std::vector<double> y;
    for (double v : x) y.push_back(3.0 * std::pow(v, 2.5));
    const LinearFit fit = fit_loglog(x, y);
    CHECK(fit.slope == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-10));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));

    // junk data is recognizably non-power-law
    std::vector<double> junk = {1.0, 100.0, 1.0, 100.0};
    CHECK(fit_loglog(x, junk).r_squared < 0.99);

    CHECK_THROWS_AS((void)fit_loglog(std::vector<double>{1.0}, std::vector<double>{1.0}),
                    DomainError);
    CHECK_THROWS_AS(
        (void)fit_loglog(std::vector<double>{1.0, 2.0}, std::vector<double>{1.0, -2.0}),
        DomainError);
}

TEST_CASE("predicted exponents") {
    CHECK(predicted_exponent(ScalingQuantity::TESTFN_LP_NORM, MeansSpec(0.7, 2), 2.0) == 1.0);
    CHECK(predicted_exponent(ScalingQuantity::MEAN_TUNED_FAR, MeansSpec(Complex(1.0, 3.0), 5),
                             std::nullopt) == 0.0);
    CHECK(predicted_exponent(ScalingQuantity::MEAN_LP_NEAR_ORIGIN, MeansSpec(0.0, 2), 2.0) ==
          0.5);
    CHECK(predicted_exponent(ScalingQuantity::MEAN_AT_ORIGIN, MeansSpec(0.2, 2),
                             std::nullopt) == doctest::Approx(1.3));
    CHECK_THROWS_AS(
        (void)predicted_exponent(ScalingQuantity::TESTFN_LP_NORM, MeansSpec(0.0, 2),
                                 std::nullopt),
        DomainError);
}

TEST_CASE("run_scaling validates its inputs") {
    const MeansSpec spec(0.2, 2);
    const std::vector<double> good = {128.0, 256.0};
    CHECK_THROWS_AS((void)run_scaling(ScalingQuantity::TESTFN_LP_NORM, spec, std::nullopt,
                                      good, kFast),
                    DomainError); // p required
    CHECK_THROWS_AS((void)run_scaling(ScalingQuantity::MEAN_AT_ORIGIN, spec, std::nullopt,
                                      std::vector<double>{128.0}, kFast),
                    DomainError); // need >= 2 points
    CHECK_THROWS_AS((void)run_scaling(ScalingQuantity::MEAN_AT_ORIGIN, spec, std::nullopt,
                                      std::vector<double>{32.0, 128.0}, kFast),
                    DomainError); // below 2^6
    CHECK_THROWS_AS((void)run_scaling(ScalingQuantity::MEAN_AT_ORIGIN, spec, std::nullopt,
                                      std::vector<double>{256.0, 128.0}, kFast),
                    DomainError); // not increasing
}

TEST_CASE("quantity names round-trip") {
    for (ScalingQuantity q :
         {ScalingQuantity::TESTFN_LP_NORM, ScalingQuantity::MEAN_AT_ORIGIN,
          ScalingQuantity::MEAN_TUNED_FAR, ScalingQuantity::MEAN_LP_NEAR_ORIGIN})
        CHECK(scaling_quantity_from_string(to_string(q)) == q);
    CHECK(scaling_quantity_from_string("mean-at-origin") == ScalingQuantity::MEAN_AT_ORIGIN);
    CHECK(!scaling_quantity_from_string("bogus"));
}

TEST_CASE("measured slopes match the predicted exponents") {
    const std::vector<double> lambdas = {128.0, 256.0, 512.0};

    const ScalingFit origin2 = run_scaling(ScalingQuantity::MEAN_AT_ORIGIN, MeansSpec(0.2, 2),
                                           std::nullopt, lambdas, kFast);
    CHECK(origin2.slope == doctest::Approx(1.3).epsilon(0.04)); // (n+1)/2 - Re alpha
    CHECK(origin2.r_squared > 0.999);

    const ScalingFit origin3 = run_scaling(ScalingQuantity::MEAN_AT_ORIGIN, MeansSpec(0.0, 3),
                                           std::nullopt, lambdas, kFast);
    CHECK(origin3.slope == doctest::Approx(2.0).epsilon(0.025));

    const ScalingFit tuned = run_scaling(ScalingQuantity::MEAN_TUNED_FAR, MeansSpec(0.2, 2),
                                         std::nullopt, lambdas, kFast);
    CHECK(tuned.slope == doctest::Approx(0.8).epsilon(0.0625)); // 1 - Re alpha
}

TEST_CASE("imaginary alpha shifts leave slopes in place") {
    const std::vector<double> lambdas = {128.0, 256.0, 512.0};
    const ScalingFit base = run_scaling(ScalingQuantity::MEAN_AT_ORIGIN, MeansSpec(0.2, 2),
                                        std::nullopt, lambdas, kFast);
    const ScalingFit shifted = run_scaling(ScalingQuantity::MEAN_AT_ORIGIN,
                                           MeansSpec(Complex(0.2, 1.0), 2), std::nullopt,
                                           lambdas, kFast);
    CHECK(std::abs(base.slope - shifted.slope) < 0.02);
}

TEST_CASE("larger fit windows move the slope toward the prediction") {
    const MeansSpec spec(0.2, 2);
    const double predicted = predicted_exponent(ScalingQuantity::MEAN_AT_ORIGIN, spec,
                                                std::nullopt);
    const ScalingFit low = run_scaling(ScalingQuantity::MEAN_AT_ORIGIN, spec, std::nullopt,
                                       std::vector<double>{128.0, 256.0, 512.0}, kFast);
    const ScalingFit high = run_scaling(ScalingQuantity::MEAN_AT_ORIGIN, spec, std::nullopt,
                                        std::vector<double>{256.0, 512.0, 1024.0}, kFast);
    CHECK(std::abs(high.slope - predicted) <= std::abs(low.slope - predicted) + 1e-6);
}

TEST_CASE("necessity report assembles both implied bounds") {
    const std::vector<double> lambdas = {128.0, 256.0, 512.0};
    const NecessityReport report =
        necessity_report(MeansSpec(0.2, 2), 4.0, lambdas, kFast);

    CHECK(report.crossover_p == doctest::Approx(4.0)); // 2n/(n-1) at n=2
    CHECK(report.near_origin_bound.predicted == doctest::Approx(-0.25));
    CHECK(report.tuned_bound.predicted == doctest::Approx(-0.25));
    // the two routes should land close to the predicted bound already at
    // this short window
    CHECK(report.near_origin_bound.slack < 0.1);
    CHECK(report.tuned_bound.slack < 0.1);
    CHECK(!report.necessity_violated);

    CHECK_THROWS_AS((void)necessity_report(MeansSpec(0.2, 2), 1.5, lambdas, kFast),
                    DomainError);
}

TEST_CASE("necessity report flags a violating alpha") {
    const std::vector<double> lambdas = {128.0, 256.0};
    const NecessityReport report =
        necessity_report(MeansSpec(-0.3, 2), 4.0, lambdas, kFast);
    CHECK(report.necessity_violated); // -0.3 < -1/4
    CHECK(!report.violated_condition.empty());
}

TEST_CASE("predicted bound at n = 3, p = 2 comes from the low-p condition") {
    const std::vector<double> lambdas = {128.0, 256.0};
    const NecessityReport report = necessity_report(MeansSpec(0.2, 3), 2.0, lambdas, kFast);
    CHECK(report.tuned_bound.predicted == doctest::Approx(-0.5)); // (1-n)/2 + 1/p
    CHECK(report.crossover_p == doctest::Approx(3.0));
    CHECK(!report.necessity_violated);
}

TEST_CASE("scaling JSON and CSV are deterministic and carry the schema") {
    const std::vector<double> lambdas = {128.0, 256.0};
    const MeansSpec spec(0.2, 2);
    const ScalingFit fit = run_scaling(ScalingQuantity::MEAN_AT_ORIGIN, spec, std::nullopt,
                                       lambdas, kFast);
    const double predicted =
        predicted_exponent(ScalingQuantity::MEAN_AT_ORIGIN, spec, std::nullopt);

    std::ostringstream a, b;
    write_scaling_json(fit, spec, std::nullopt, predicted, a);
    write_scaling_json(fit, spec, std::nullopt, predicted, b);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("\"quantity\":\"MEAN_AT_ORIGIN\"") != std::string::npos);
    CHECK(a.str().find("\"slope\":") != std::string::npos);
    CHECK(a.str().find("\"r_squared\":") != std::string::npos);

    std::ostringstream c;
    write_scaling_csv(fit, spec, std::nullopt, predicted, c);
    CHECK(c.str().rfind("quantity,n,alpha_re,alpha_im,p,lambda,value,slope,predicted,delta,"
                        "r_squared\n", 0) == 0);
}

} // TEST_SUITE
