#include <doctest.h>

#include <cmath>
#include <sstream>

#include "sml/exponent_regions.hpp"
#include "sml/io.hpp"

using namespace sml;

TEST_SUITE("exponent_regions") {

TEST_CASE("classification examples") {
    // just above the decoupling-range sufficiency line at n=2, p=2
    const RegionVerdict a = classify(2, 2.0, 0.1);
    CHECK(a.verdict == Verdict::SUFFICIENT_KNOWN);
    CHECK(a.triggering_condition.find("myz-low-p") != std::string::npos);

    // below the high-p necessary bound (1-n)/p = -1/6
    const RegionVerdict b = classify(2, 6.0, -0.2);
    CHECK(b.verdict == Verdict::NECESSARY_VIOLATED);
    CHECK(b.triggering_condition.find("necessity-high-p") != std::string::npos);

    // exactly on the boundary: necessity holds with equality, sufficiency
    // is strict, so the point stays open
    CHECK(classify(2, 6.0, -1.0 / 6.0).verdict == Verdict::OPEN);

    CHECK_THROWS_AS((void)classify(2, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS((void)classify(1, 2.0, 0.0), DomainError);
}

TEST_CASE("low-p range uses the first recorded sufficiency") {
    // 1 < p <= 2: Re alpha > 1 - n + n/p; at n=2, p=1.5 the threshold is 1/3
    const RegionVerdict in = classify(2, 1.5, 0.5);
    CHECK(in.verdict == Verdict::SUFFICIENT_KNOWN);
    CHECK(in.triggering_condition.find("stein-low-p") != std::string::npos);
    CHECK(classify(2, 1.5, 0.2).verdict == Verdict::OPEN); // no necessity below p = 2
}

TEST_CASE("the two necessary expressions cross exactly at p = 2n/(n-1)") {
    for (int n = 2; n <= 10; ++n) {
        const double p = 2.0 * n / (n - 1.0);
        const double low = (1.0 - n) / 2.0 + 1.0 / p;
        const double high = (1.0 - n) / p;
        CHECK(std::abs(low - high) < 1e-15);
        CHECK(necessary_threshold(n, p) == doctest::Approx(high).epsilon(1e-15));
    }
}

TEST_CASE("recorded sufficiency never undercuts recorded necessity") {
    for (int n = 2; n <= 6; ++n)
        for (double p = 2.0; p <= 100.0; p += 0.5)
            CHECK(sufficient_threshold(n, p) >= necessary_threshold(n, p) - 1e-15);
}

TEST_CASE("raising re_alpha never leaves SUFFICIENT_KNOWN") {
    for (int n : {2, 3, 5})
        for (double p : {1.5, 2.0, 3.7, 6.0, 20.0}) {
            bool sufficient_seen = false;
            for (double re = -2.0; re <= 2.0; re += 0.05) {
                const bool is_sufficient =
                    classify(n, p, re).verdict == Verdict::SUFFICIENT_KNOWN;
                if (sufficient_seen) CHECK(is_sufficient);
                sufficient_seen = sufficient_seen || is_sufficient;
            }
            CHECK(sufficient_seen);
        }
}

TEST_CASE("boundary thresholds at the pinch points") {
    // n=2, p=4: both necessary expressions give -1/4
    CHECK(necessary_threshold(2, 4.0) == doctest::Approx(-0.25).epsilon(1e-15));
    // n=3, p=2: necessity, Stein, and the decoupling range all give -1/2
    CHECK(necessary_threshold(3, 2.0) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(sufficient_threshold(3, 2.0) == doctest::Approx(-0.5).epsilon(1e-15));

    std::vector<double> grid;
    for (double p = 2.0; p <= 10.0; p += 0.25) grid.push_back(p);
    const auto rows3 = boundary_table(3, grid);
    for (const BoundaryRow& row : rows3) {
        REQUIRE(row.gap.has_value());
        if (row.p > 2.0 && row.p < 4.0) // open strip inside (2, 2(n+1)/(n-1))
            CHECK(*row.gap > 1e-12);
        else
            CHECK(*row.gap < 1e-12);
    }

    // n=2: the curves pinch at p = 2 and for p >= 6; between them the
    // recorded decoupling sufficiency sits strictly above the necessity
    // (widest at p = 4, where the gap is 1/8)
    const auto rows2 = boundary_table(2, grid);
    for (const BoundaryRow& row : rows2) {
        REQUIRE(row.gap.has_value());
        if (row.p == 2.0 || row.p >= 6.0)
            CHECK(*row.gap < 1e-12);
        else
            CHECK(*row.gap > 1e-12);
        if (row.p == 4.0) CHECK(*row.gap == doctest::Approx(0.125).epsilon(1e-12));
    }
}

TEST_CASE("regions CSV is deterministic with the declared columns") {
    std::vector<double> grid = {2.0, 4.0, 6.0};
    const auto rows = boundary_table(2, grid);
    std::ostringstream a, b;
    write_regions_csv(2, rows, a);
    write_regions_csv(2, rows, b);
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind("n,p,inv_p,necessary_threshold,sufficient_threshold,gap,"
                        "verdict_below_necessary,verdict_between,verdict_above_sufficient\n",
                        0) == 0);
    CHECK(a.str().find("NECESSARY_VIOLATED") != std::string::npos);
    CHECK(a.str().find("SUFFICIENT_KNOWN") != std::string::npos);
}

} // TEST_SUITE
