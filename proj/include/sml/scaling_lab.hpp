#pragma once

#include <optional>
#include <string>

#include "sml/spherical_means.hpp"

namespace sml {

// Quantities whose growth in lambda the lab measures.
enum class ScalingQuantity {
    TESTFN_LP_NORM,      // ||f_lambda||_p                  ~ lambda^{(n+1)/2 - 1/p}
    MEAN_AT_ORIGIN,      // |A_1 f_lambda(0)|               ~ lambda^{(n+1)/2 - Re alpha}
    MEAN_TUNED_FAR,      // |A_{t} f_lambda(x)|, t = |x|+1  ~ lambda^{1 - Re alpha}
    MEAN_LP_NEAR_ORIGIN, // ||A_1 f_lambda||_{L^p(|x|<=c0/lambda)}
                         //                                 ~ lambda^{(n+1)/2 - Re alpha - n/p}
};

const char* to_string(ScalingQuantity q);
std::optional<ScalingQuantity> scaling_quantity_from_string(const std::string& name);

struct ScalingFit {
    ScalingQuantity quantity;
    std::vector<double> lambdas;
    std::vector<double> values;
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::vector<double> residuals;
};

struct ScalingOptions {
    double far_radius = 2.0;  // |x| for MEAN_TUNED_FAR
    double far_t = 3.0;       // t for MEAN_TUNED_FAR (|x| + 1 tunes the phase)
    double origin_ball = 0.05; // c0: MEAN_LP_NEAR_ORIGIN integrates |x| <= c0/lambda
    BumpSpec bump{};
};

// Least squares of log y against log x. Inputs must be positive.
struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::vector<double> residuals;
};
LinearFit fit_loglog(std::span<const double> x, std::span<const double> y);

// Sweeps lambda, measures the quantity, fits the growth exponent.
// lambdas must be strictly increasing, >= 2 points, within [2^6, 2^12];
// p is required for the two L^p quantities. A fit with r^2 < 0.99 is
// rejected (ConvergenceError): quadrature failure or a bad regime.
ScalingFit run_scaling(ScalingQuantity quantity, const MeansSpec& spec, std::optional<double> p,
                       std::span<const double> lambdas, const QuadratureSpec& quad,
                       const ScalingOptions& opt = {});

// Exponent the scaling law predicts for the quantity.
double predicted_exponent(ScalingQuantity quantity, const MeansSpec& spec,
                          std::optional<double> p);

// One measured lower bound on Re alpha implied by comparing two fitted
// slopes, next to its predicted value.
struct BoundEstimate {
    double implied = 0.0;
    double predicted = 0.0;
    double slack = 0.0;          // |implied - predicted|
    std::string condition;       // the inequality this bound realizes
};

// Assembles the necessity logic at one (n, alpha, p): boundedness forces
// slope(MEAN_LP_NEAR_ORIGIN) <= slope(TESTFN_LP_NORM), giving
// Re alpha >= (1-n)/p, and slope(MEAN_TUNED_FAR) <= slope(TESTFN_LP_NORM),
// giving Re alpha >= (1-n)/2 + 1/p.
struct NecessityReport {
    int n = 2;
    Complex alpha;
    double p = 2.0;
    ScalingFit testfn_fit;
    ScalingFit near_origin_fit;
    ScalingFit tuned_fit;
    BoundEstimate near_origin_bound;
    BoundEstimate tuned_bound;
    double crossover_p = 0.0;    // 2n/(n-1): where the two bounds coincide
    bool necessity_violated = false;
    std::string violated_condition;
};

NecessityReport necessity_report(const MeansSpec& spec, double p, std::span<const double> lambdas,
                                 const QuadratureSpec& quad, const ScalingOptions& opt = {});

} // namespace sml
