#include "sml/exponent_regions.hpp"

#include <cmath>

namespace sml {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::SUFFICIENT_KNOWN: return "SUFFICIENT_KNOWN";
        case Verdict::NECESSARY_VIOLATED: return "NECESSARY_VIOLATED";
        case Verdict::OPEN: return "OPEN";
    }
    return "UNKNOWN";
}

namespace {

// Strict-vs-nonstrict boundaries classify as OPEN; the tolerance absorbs
// one-ulp disagreements between algebraically equal threshold formulas.
constexpr double kBoundaryTol = 1e-12;

void check_inputs(int n, double p) {
    if (n < 2) throw DomainError("exponent_regions: dimension must be >= 2");
    if (!(p > 1.0)) throw DomainError("exponent_regions: requires p > 1");
}

} // namespace

double necessary_threshold(int n, double p) {
    check_inputs(n, p);
    if (!(p >= 2.0))
        throw DomainError("necessary_threshold: recorded necessity assumes p >= 2");
    return std::max((1.0 - n) / 2.0 + 1.0 / p, (1.0 - n) / p);
}

double sufficient_threshold(int n, double p, std::string* which) {
    check_inputs(n, p);
    if (p < 2.0) {
        if (which) *which = "stein-low-p: Re alpha > 1 - n + n/p";
        return 1.0 - n + n / p;
    }
    const double decoupling_p = 2.0 * (n + 1.0) / (n - 1.0);
    double best = std::numeric_limits<double>::infinity();
    std::string name;
    if (p <= decoupling_p) {
        const double myz_low = (1.0 - n) / 4.0 + (3.0 - n) / (2.0 * p);
        if (myz_low < best) {
            best = myz_low;
            name = "myz-low-p: Re alpha > (1-n)/4 + (3-n)/(2p)";
        }
    }
    if (p >= decoupling_p) {
        const double myz_high = (1.0 - n) / p;
        if (myz_high < best) {
            best = myz_high;
            name = "myz-high-p: Re alpha > (1-n)/p";
        }
    }
    const double stein = (2.0 - n) / p;
    if (stein < best) {
        best = stein;
        name = "stein-high-p: Re alpha > (2-n)/p";
    }
    if (which) *which = name;
    return best;
}

RegionVerdict classify(int n, double p, double re_alpha) {
    check_inputs(n, p);
    RegionVerdict out;
    out.n = n;
    out.p = p;
    out.re_alpha = re_alpha;

    std::string sufficient_name;
    const double sufficient = sufficient_threshold(n, p, &sufficient_name);
    if (re_alpha > sufficient + kBoundaryTol) { // sufficiency is strict
        out.verdict = Verdict::SUFFICIENT_KNOWN;
        out.triggering_condition = sufficient_name;
        return out;
    }
    if (p >= 2.0) {
        const double necessary = necessary_threshold(n, p);
        if (re_alpha < necessary - kBoundaryTol) { // non-strict: >= necessary survives
            out.verdict = Verdict::NECESSARY_VIOLATED;
            const double crossover = 2.0 * n / (n - 1.0);
            out.triggering_condition = (p <= crossover)
                                           ? "necessity-low-p: Re alpha >= (1-n)/2 + 1/p"
                                           : "necessity-high-p: Re alpha >= (1-n)/p";
            return out;
        }
    }
    out.verdict = Verdict::OPEN;
    out.triggering_condition = "none";
    return out;
}

std::vector<BoundaryRow> boundary_table(int n, std::span<const double> p_grid) {
    std::vector<BoundaryRow> rows;
    rows.reserve(p_grid.size());
    for (double p : p_grid) {
        check_inputs(n, p);
        BoundaryRow row;
        row.p = p;
        row.inv_p = 1.0 / p;
        row.sufficient = sufficient_threshold(n, p);
        if (p >= 2.0) {
            row.necessary = necessary_threshold(n, p);
            row.gap = row.sufficient - *row.necessary;
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace sml
