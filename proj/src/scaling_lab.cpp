#include "sml/scaling_lab.hpp"

#include <cmath>

#include "sml/exponent_regions.hpp"
#include "sml/parallel.hpp"

namespace sml {

const char* to_string(ScalingQuantity q) {
    switch (q) {
        case ScalingQuantity::TESTFN_LP_NORM: return "TESTFN_LP_NORM";
        case ScalingQuantity::MEAN_AT_ORIGIN: return "MEAN_AT_ORIGIN";
        case ScalingQuantity::MEAN_TUNED_FAR: return "MEAN_TUNED_FAR";
        case ScalingQuantity::MEAN_LP_NEAR_ORIGIN: return "MEAN_LP_NEAR_ORIGIN";
    }
    return "UNKNOWN";
}

std::optional<ScalingQuantity> scaling_quantity_from_string(const std::string& name) {
    std::string upper;
    upper.reserve(name.size());
    for (char c : name) upper.push_back(c == '-' ? '_' : static_cast<char>(std::toupper(c)));
    if (upper == "TESTFN_LP_NORM") return ScalingQuantity::TESTFN_LP_NORM;
    if (upper == "MEAN_AT_ORIGIN") return ScalingQuantity::MEAN_AT_ORIGIN;
    if (upper == "MEAN_TUNED_FAR") return ScalingQuantity::MEAN_TUNED_FAR;
    if (upper == "MEAN_LP_NEAR_ORIGIN") return ScalingQuantity::MEAN_LP_NEAR_ORIGIN;
    return std::nullopt;
}

LinearFit fit_loglog(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw DomainError("fit_loglog: need >= 2 matching points");
    const std::size_t m = x.size();
    double sx = 0.0, sy = 0.0;
    std::vector<double> lx(m), ly(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw DomainError("fit_loglog: inputs must be positive");
        lx[i] = std::log(x[i]);
        ly[i] = std::log(y[i]);
        sx += lx[i];
        sy += ly[i];
    }
    const double mx = sx / m, my = sy / m;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0.0, ss_tot = 0.0;
    fit.residuals.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
        fit.residuals[i] = r;
        ss_res += r * r;
        ss_tot += (ly[i] - my) * (ly[i] - my);
    }
    fit.r_squared = ss_tot > 0.0 ? std::max(0.0, 1.0 - ss_res / ss_tot) : 1.0;
    return fit;
}

namespace {

double near_origin_lp_norm(const MeansSpec& spec, double lambda, double p,
                           const QuadratureSpec& quad, const ScalingOptions& opt) {
    const double ball = opt.origin_ball / lambda;
    const double breaks[5] = {0.0, 0.25 * ball, 0.5 * ball, 0.75 * ball, ball};
    RadialGrid grid = RadialGrid::composite_gauss(breaks, 8);
    const TestFunctionSpec tf(spec, lambda, opt.bump);
    std::vector<Complex> values(grid.radii.size());
    parallel_for(grid.radii.size(), [&](std::size_t i) {
        values[i] = spherical_mean_multiplier(spec, 1.0, tf, grid.radii[i], quad);
    });
    return lp_norm_radial(values, grid, p, spec.n);
}

double measure(ScalingQuantity quantity, const MeansSpec& spec, double lambda,
               std::optional<double> p, const QuadratureSpec& quad, const ScalingOptions& opt) {
    switch (quantity) {
        case ScalingQuantity::TESTFN_LP_NORM:
            return test_function_lp_norm(TestFunctionSpec(spec, lambda, opt.bump), *p, quad);
        case ScalingQuantity::MEAN_AT_ORIGIN:
            return std::abs(
                spherical_mean_multiplier(spec, 1.0, TestFunctionSpec(spec, lambda, opt.bump),
                                          0.0, quad));
        case ScalingQuantity::MEAN_TUNED_FAR:
            return std::abs(
                spherical_mean_multiplier(spec, opt.far_t, TestFunctionSpec(spec, lambda, opt.bump),
                                          opt.far_radius, quad));
        case ScalingQuantity::MEAN_LP_NEAR_ORIGIN:
            return near_origin_lp_norm(spec, lambda, *p, quad, opt);
    }
    throw DomainError("run_scaling: unknown quantity");
}

bool needs_p(ScalingQuantity q) {
    return q == ScalingQuantity::TESTFN_LP_NORM || q == ScalingQuantity::MEAN_LP_NEAR_ORIGIN;
}

} // namespace

ScalingFit run_scaling(ScalingQuantity quantity, const MeansSpec& spec, std::optional<double> p,
                       std::span<const double> lambdas, const QuadratureSpec& quad,
                       const ScalingOptions& opt) {
    if (lambdas.size() < 2) throw DomainError("run_scaling: need at least two lambda values");
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (!(lambdas[i] >= 64.0) || !(lambdas[i] <= 4096.0))
            throw DomainError("run_scaling: lambdas must lie in [2^6, 2^12]");
        if (i > 0 && !(lambdas[i] > lambdas[i - 1]))
            throw DomainError("run_scaling: lambdas must be strictly increasing");
    }
    if (needs_p(quantity)) {
        if (!p) throw DomainError("run_scaling: p required for L^p quantities");
        if (!(*p >= 1.0)) throw DomainError("run_scaling: p must be >= 1");
    }

    ScalingFit fit;
    fit.quantity = quantity;
    fit.lambdas.assign(lambdas.begin(), lambdas.end());
    fit.values.resize(lambdas.size());
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        fit.values[i] = measure(quantity, spec, lambdas[i], p, quad, opt);

    const LinearFit lf = fit_loglog(fit.lambdas, fit.values);
    fit.slope = lf.slope;
    fit.intercept = lf.intercept;
    fit.r_squared = lf.r_squared;
    fit.residuals = lf.residuals;
    if (fit.r_squared < 0.99)
        throw ConvergenceError("run_scaling: fit rejected, r^2 = " + std::to_string(fit.r_squared));
    return fit;
}

double predicted_exponent(ScalingQuantity quantity, const MeansSpec& spec,
                          std::optional<double> p) {
    if (needs_p(quantity) && !p)
        throw DomainError("predicted_exponent: p required for L^p quantities");
    const double re_alpha = spec.alpha.real();
    switch (quantity) {
        case ScalingQuantity::TESTFN_LP_NORM: return (spec.n + 1) / 2.0 - 1.0 / *p;
        case ScalingQuantity::MEAN_AT_ORIGIN: return (spec.n + 1) / 2.0 - re_alpha;
        case ScalingQuantity::MEAN_TUNED_FAR: return 1.0 - re_alpha;
        case ScalingQuantity::MEAN_LP_NEAR_ORIGIN:
            return (spec.n + 1) / 2.0 - re_alpha - spec.n / *p;
    }
    throw DomainError("predicted_exponent: unknown quantity");
}

NecessityReport necessity_report(const MeansSpec& spec, double p, std::span<const double> lambdas,
                                 const QuadratureSpec& quad, const ScalingOptions& opt) {
    if (!(p >= 2.0)) throw DomainError("necessity_report: requires p >= 2");

    NecessityReport report;
    report.n = spec.n;
    report.alpha = spec.alpha;
    report.p = p;
    report.crossover_p = 2.0 * spec.n / (spec.n - 1.0);

    report.testfn_fit = run_scaling(ScalingQuantity::TESTFN_LP_NORM, spec, p, lambdas, quad, opt);
    report.near_origin_fit =
        run_scaling(ScalingQuantity::MEAN_LP_NEAR_ORIGIN, spec, p, lambdas, quad, opt);
    report.tuned_fit =
        run_scaling(ScalingQuantity::MEAN_TUNED_FAR, spec, std::nullopt, lambdas, quad, opt);

    const double re_alpha = spec.alpha.real();
    const double s_f = report.testfn_fit.slope;

    // boundedness would force slope(quantity) <= slope(testfn norm); the
    // re_alpha at which equality would occur is the implied lower bound.
    report.near_origin_bound.implied = re_alpha + report.near_origin_fit.slope - s_f;
    report.near_origin_bound.predicted = (1.0 - spec.n) / p;
    report.near_origin_bound.slack =
        std::abs(report.near_origin_bound.implied - report.near_origin_bound.predicted);
    report.near_origin_bound.condition = "Re alpha >= (1-n)/p";

    report.tuned_bound.implied = re_alpha + report.tuned_fit.slope - s_f;
    report.tuned_bound.predicted = (1.0 - spec.n) / 2.0 + 1.0 / p;
    report.tuned_bound.slack =
        std::abs(report.tuned_bound.implied - report.tuned_bound.predicted);
    report.tuned_bound.condition = "Re alpha >= (1-n)/2 + 1/p";

    const double threshold = necessary_threshold(spec.n, p);
    report.necessity_violated = re_alpha < threshold;
    if (report.necessity_violated) {
        report.violated_condition = (p <= report.crossover_p)
                                        ? report.tuned_bound.condition
                                        : report.near_origin_bound.condition;
    }
    return report;
}

} // namespace sml
