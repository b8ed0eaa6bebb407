#include "sml/io.hpp"

#include <cstdio>

namespace sml {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_complex(Complex v) {
    std::string out = format_double(v.real());
    out += (v.imag() < 0.0 || std::signbit(v.imag())) ? "-" : "+";
    out += format_double(std::abs(v.imag()));
    out += "i";
    return out;
}

void write_profile_csv(const RadialProfile& profile, std::ostream& os) {
    os << "radius,re,im,abs\n";
    for (std::size_t i = 0; i < profile.grid.radii.size(); ++i) {
        const Complex v = profile.values[i];
        os << format_double(profile.grid.radii[i]) << ',' << format_double(v.real()) << ','
           << format_double(v.imag()) << ',' << format_double(std::abs(v)) << '\n';
    }
}

void write_means_csv(std::span<const MeansEvaluation> rows, std::ostream& os) {
    os << "n,re_alpha,im_alpha,t,lambda,radius,re,im,abs\n";
    for (const MeansEvaluation& row : rows) {
        os << row.spec.n << ',' << format_double(row.spec.alpha.real()) << ','
           << format_double(row.spec.alpha.imag()) << ',' << format_double(row.t) << ','
           << format_double(row.lambda) << ',' << format_double(row.radius) << ','
           << format_double(row.value.real()) << ',' << format_double(row.value.imag()) << ','
           << format_double(std::abs(row.value)) << '\n';
    }
}

void write_decay_csv(const DecayCheck& check, std::ostream& os) {
    os << "s,abs_m,normalized\n";
    for (const DecayRow& row : check.rows)
        os << format_double(row.s) << ',' << format_double(row.abs_m) << ','
           << format_double(row.normalized) << '\n';
}

namespace {

void json_array(std::ostream& os, std::span<const double> values) {
    os << '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ',';
        os << format_double(values[i]);
    }
    os << ']';
}

void json_fit_body(std::ostream& os, const ScalingFit& fit, const MeansSpec& spec,
                   std::optional<double> p, double predicted) {
    os << "{\"quantity\":\"" << to_string(fit.quantity) << "\",";
    os << "\"n\":" << spec.n << ',';
    os << "\"alpha_re\":" << format_double(spec.alpha.real()) << ',';
    os << "\"alpha_im\":" << format_double(spec.alpha.imag()) << ',';
    os << "\"p\":";
    if (p)
        os << format_double(*p);
    else
        os << "null";
    os << ",\"lambdas\":";
    json_array(os, fit.lambdas);
    os << ",\"values\":";
    json_array(os, fit.values);
    os << ",\"slope\":" << format_double(fit.slope);
    os << ",\"intercept\":" << format_double(fit.intercept);
    os << ",\"predicted\":" << format_double(predicted);
    os << ",\"delta\":" << format_double(fit.slope - predicted);
    os << ",\"r_squared\":" << format_double(fit.r_squared);
    os << '}';
}

} // namespace

void write_scaling_json(const ScalingFit& fit, const MeansSpec& spec, std::optional<double> p,
                        double predicted, std::ostream& os) {
    json_fit_body(os, fit, spec, p, predicted);
    os << '\n';
}

void write_scaling_csv(const ScalingFit& fit, const MeansSpec& spec, std::optional<double> p,
                       double predicted, std::ostream& os) {
    os << "quantity,n,alpha_re,alpha_im,p,lambda,value,slope,predicted,delta,r_squared\n";
    for (std::size_t i = 0; i < fit.lambdas.size(); ++i) {
        os << to_string(fit.quantity) << ',' << spec.n << ','
           << format_double(spec.alpha.real()) << ',' << format_double(spec.alpha.imag()) << ',';
        if (p)
            os << format_double(*p);
        os << ',' << format_double(fit.lambdas[i]) << ',' << format_double(fit.values[i]) << ','
           << format_double(fit.slope) << ',' << format_double(predicted) << ','
           << format_double(fit.slope - predicted) << ',' << format_double(fit.r_squared)
           << '\n';
    }
}

void write_necessity_json(const NecessityReport& report, std::ostream& os) {
    const MeansSpec spec(report.alpha, report.n);
    os << "{\"n\":" << report.n << ',';
    os << "\"alpha_re\":" << format_double(report.alpha.real()) << ',';
    os << "\"alpha_im\":" << format_double(report.alpha.imag()) << ',';
    os << "\"p\":" << format_double(report.p) << ',';
    os << "\"crossover_p\":" << format_double(report.crossover_p) << ',';
    os << "\"fits\":[";
    json_fit_body(os, report.testfn_fit, spec, report.p,
                  predicted_exponent(ScalingQuantity::TESTFN_LP_NORM, spec, report.p));
    os << ',';
    json_fit_body(os, report.near_origin_fit, spec, report.p,
                  predicted_exponent(ScalingQuantity::MEAN_LP_NEAR_ORIGIN, spec, report.p));
    os << ',';
    json_fit_body(os, report.tuned_fit, spec, std::nullopt,
                  predicted_exponent(ScalingQuantity::MEAN_TUNED_FAR, spec, std::nullopt));
    os << "],";
    auto bound = [&](const char* key, const BoundEstimate& b) {
        os << '\"' << key << "\":{\"condition\":\"" << b.condition << "\",";
        os << "\"implied\":" << format_double(b.implied) << ',';
        os << "\"predicted\":" << format_double(b.predicted) << ',';
        os << "\"slack\":" << format_double(b.slack) << '}';
    };
    bound("near_origin_bound", report.near_origin_bound);
    os << ',';
    bound("tuned_bound", report.tuned_bound);
    os << ",\"necessity_violated\":" << (report.necessity_violated ? "true" : "false");
    os << ",\"violated_condition\":\"" << report.violated_condition << "\"";
    os << "}\n";
}

void write_regions_csv(int n, std::span<const BoundaryRow> rows, std::ostream& os) {
    os << "n,p,inv_p,necessary_threshold,sufficient_threshold,gap,"
          "verdict_below_necessary,verdict_between,verdict_above_sufficient\n";
    for (const BoundaryRow& row : rows) {
        os << n << ',' << format_double(row.p) << ',' << format_double(row.inv_p) << ',';
        if (row.necessary) os << format_double(*row.necessary);
        os << ',' << format_double(row.sufficient) << ',';
        if (row.gap) os << format_double(*row.gap);
        os << ',';
        if (row.necessary)
            os << to_string(classify(n, row.p, *row.necessary - 0.05).verdict);
        os << ',';
        const double mid = row.necessary ? 0.5 * (*row.necessary + row.sufficient)
                                         : row.sufficient - 0.05;
        os << to_string(classify(n, row.p, mid).verdict) << ','
           << to_string(classify(n, row.p, row.sufficient + 0.05).verdict) << '\n';
    }
}

} // namespace sml
