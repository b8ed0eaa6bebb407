// sml: command-line front end for the spherical-means laboratory.
//
// Exit codes:
//   0  success (all requested checks passed)
//   1  a requested check failed (slope off target, oracle mismatch)
//   2  invalid configuration or argument outside an operation's domain
//   3  numerical non-convergence (quadrature instability, rejected fit)

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sml/io.hpp"
#include "sml/parallel.hpp"

using json = nlohmann::json;
using namespace sml;

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// command-line value if given, else config-file key, else fallback
template <typename T>
T resolve(const CLI::Option* opt, const T& cli_value, const json& cfg, const std::string& key,
          const T& fallback) {
    if (opt != nullptr && opt->count() > 0) return cli_value;
    if (cfg.contains(key)) return cfg.at(key).get<T>();
    return fallback;
}

template <typename T>
T require(const CLI::Option* opt, const T& cli_value, const json& cfg, const std::string& key) {
    if (opt != nullptr && opt->count() > 0) return cli_value;
    if (cfg.contains(key)) return cfg.at(key).get<T>();
    throw ConfigError("missing required parameter --" + key);
}

template <typename T>
std::optional<T> resolve_optional(const CLI::Option* opt, const T& cli_value, const json& cfg,
                                  const std::string& key) {
    if (opt != nullptr && opt->count() > 0) return cli_value;
    if (cfg.contains(key)) return cfg.at(key).get<T>();
    return std::nullopt;
}

QuadratureSpec quadrature_from_config(const json& cfg) {
    QuadratureSpec spec;
    if (cfg.contains("quadrature")) {
        const json& q = cfg.at("quadrature");
        spec.nodes_per_panel = q.value("nodes_per_panel", spec.nodes_per_panel);
        spec.max_phase_per_panel = q.value("max_phase_per_panel", spec.max_phase_per_panel);
        spec.abs_tol = q.value("abs_tol", spec.abs_tol);
        spec.rel_tol = q.value("rel_tol", spec.rel_tol);
    }
    spec.validate();
    return spec;
}

std::vector<double> parse_grid(const std::string& text) {
    // MIN:MAX:COUNT
    double lo = 0.0, hi = 0.0;
    int count = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> lo >> c1 >> hi >> c2 >> count) || c1 != ':' || c2 != ':' || count < 1 ||
        !(hi >= lo))
        throw ConfigError("grid must be MIN:MAX:COUNT with MAX >= MIN, COUNT >= 1");
    std::vector<double> grid(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        grid[static_cast<std::size_t>(i)] =
            count == 1 ? lo : lo + (hi - lo) * i / (count - 1.0);
    return grid;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary); // LF endings on every platform
    if (!out) throw ConfigError("cannot open output file: " + path);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical laboratory for generalized spherical means: Bessel machinery, "
                 "oscillatory test functions, scaling-exponent experiments, and the "
                 "(1/p, Re alpha) boundedness atlas."};
    app.require_subcommand(1);

    std::string config_path, out_path;
    double tolerance = 0.0;
    int threads = 0;
    auto* opt_config = app.add_option("--config", config_path, "JSON config file");
    auto* opt_out = app.add_option("--out", out_path, "output file for tables/reports");
    auto* opt_tol = app.add_option("--tolerance", tolerance,
                                   "acceptance tolerance (scaling: slope delta, default 0.05; "
                                   "oracle-check: relative error, default 1e-6)");
    auto* opt_threads = app.add_option("--threads", threads, "worker thread count");

    // bessel
    auto* cmd_bessel = app.add_subcommand("bessel", "evaluate J_beta(r)");
    double order_re = 0.0, order_im = 0.0, bessel_r = 0.0;
    std::string route = "auto";
    auto* opt_ore = cmd_bessel->add_option("--order-re", order_re, "Re beta");
    auto* opt_oim = cmd_bessel->add_option("--order-im", order_im, "Im beta");
    auto* opt_br = cmd_bessel->add_option("--r", bessel_r, "radius r >= 0");
    auto* opt_route =
        cmd_bessel->add_option("--route", route, "auto | series | asymptotic | both");

    // theta
    auto* cmd_theta = app.add_subcommand("theta", "sphere surface-measure Fourier transform");
    int theta_n = 2;
    double theta_s = 0.0;
    auto* opt_tn = cmd_theta->add_option("--n", theta_n, "dimension >= 2");
    auto* opt_ts = cmd_theta->add_option("--s", theta_s, "radius s >= 0");

    // multiplier
    auto* cmd_mult = app.add_subcommand("multiplier", "means multiplier m^alpha(s)");
    int mult_n = 2;
    double mult_are = 0.0, mult_aim = 0.0, mult_s = 0.0;
    std::string mult_grid;
    auto* opt_mn = cmd_mult->add_option("--n", mult_n, "dimension >= 2");
    auto* opt_mare = cmd_mult->add_option("--alpha-re", mult_are, "Re alpha");
    auto* opt_maim = cmd_mult->add_option("--alpha-im", mult_aim, "Im alpha");
    auto* opt_ms = cmd_mult->add_option("--s", mult_s, "radius s >= 0");
    auto* opt_mgrid = cmd_mult->add_option("--s-grid", mult_grid,
                                           "MIN:MAX:COUNT decay-check grid (CSV output)");

    // testfn
    auto* cmd_testfn = app.add_subcommand("testfn", "oscillatory test function");
    int tf_n = 2;
    double tf_aim = 0.0, tf_lambda = 0.0, tf_radius = 0.0, tf_p = 0.0;
    bool tf_profile = false;
    auto* opt_fn = cmd_testfn->add_option("--n", tf_n, "dimension >= 2");
    auto* opt_faim = cmd_testfn->add_option("--alpha-im", tf_aim, "Im alpha");
    auto* opt_flambda = cmd_testfn->add_option("--lambda", tf_lambda, "frequency scale >= 4");
    auto* opt_fradius = cmd_testfn->add_option("--radius", tf_radius, "|x|");
    auto* opt_fp = cmd_testfn->add_option("--p", tf_p, "emit the L^p norm");
    cmd_testfn->add_flag("--profile", tf_profile, "emit the radial profile as CSV");

    // mean
    auto* cmd_mean = app.add_subcommand("mean", "generalized spherical mean of a test function");
    int mean_n = 2;
    double mean_are = 0.0, mean_aim = 0.0, mean_lambda = 0.0, mean_t = 1.0, mean_radius = 0.0;
    std::string mean_tgrid;
    auto* opt_en = cmd_mean->add_option("--n", mean_n, "dimension >= 2");
    auto* opt_eare = cmd_mean->add_option("--alpha-re", mean_are, "Re alpha");
    auto* opt_eaim = cmd_mean->add_option("--alpha-im", mean_aim, "Im alpha");
    auto* opt_elambda = cmd_mean->add_option("--lambda", mean_lambda, "frequency scale >= 4");
    auto* opt_et = cmd_mean->add_option("--t", mean_t, "dilation t > 0");
    auto* opt_eradius = cmd_mean->add_option("--radius", mean_radius, "|x|");
    auto* opt_etg =
        cmd_mean->add_option("--t-grid", mean_tgrid, "MIN:MAX:COUNT maximal scan over t");

    // scaling
    auto* cmd_scaling = app.add_subcommand("scaling", "lambda-sweep exponent fit");
    std::string quantity_name;
    int sc_n = 2;
    double sc_are = 0.0, sc_aim = 0.0, sc_p = 0.0, sc_radius = 2.0, sc_t = 3.0;
    std::vector<double> sc_lambdas;
    bool sc_necessity = false;
    auto* opt_q = cmd_scaling->add_option("--quantity", quantity_name,
                                          "TESTFN_LP_NORM | MEAN_AT_ORIGIN | MEAN_TUNED_FAR | "
                                          "MEAN_LP_NEAR_ORIGIN");
    auto* opt_sn = cmd_scaling->add_option("--n", sc_n, "dimension >= 2");
    auto* opt_sare = cmd_scaling->add_option("--alpha-re", sc_are, "Re alpha");
    auto* opt_saim = cmd_scaling->add_option("--alpha-im", sc_aim, "Im alpha");
    auto* opt_sp = cmd_scaling->add_option("--p", sc_p, "Lebesgue exponent");
    auto* opt_sl = cmd_scaling->add_option("--lambdas", sc_lambdas, "sweep values in [2^6, 2^12]")
                       ->delimiter(',');
    auto* opt_sradius = cmd_scaling->add_option("--radius", sc_radius, "|x| for MEAN_TUNED_FAR");
    auto* opt_st = cmd_scaling->add_option("--t", sc_t, "t for MEAN_TUNED_FAR");
    cmd_scaling->add_flag("--necessity", sc_necessity,
                          "assemble the full necessity report (needs --p)");

    // regions
    auto* cmd_regions = app.add_subcommand("regions", "exponent-region boundary table");
    int rg_n = 2;
    double rg_pmin = 2.0, rg_pmax = 10.0, rg_step = 0.25;
    auto* opt_rn = cmd_regions->add_option("--n", rg_n, "dimension >= 2");
    auto* opt_rpmin = cmd_regions->add_option("--p-min", rg_pmin, "grid start (> 1)");
    auto* opt_rpmax = cmd_regions->add_option("--p-max", rg_pmax, "grid end");
    auto* opt_rstep = cmd_regions->add_option("--p-step", rg_step, "grid step (> 0)");

    // oracle-check
    auto* cmd_oracle = app.add_subcommand(
        "oracle-check", "cross-route Gaussian equivalence (multiplier vs kernel integral)");
    int oc_n = 2;
    double oc_are = 0.0, oc_aim = 0.0, oc_t = 1.0;
    auto* opt_on = cmd_oracle->add_option("--n", oc_n, "dimension >= 2");
    auto* opt_oare = cmd_oracle->add_option("--alpha-re", oc_are, "Re alpha (> 0)");
    auto* opt_oaim = cmd_oracle->add_option("--alpha-im", oc_aim, "Im alpha");
    auto* opt_ot = cmd_oracle->add_option("--t", oc_t, "dilation t > 0");

    // global flags may follow the subcommand
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        json cfg = json::object();
        if (opt_config->count() > 0) {
            std::ifstream in(config_path);
            if (!in) throw ConfigError("cannot read config file: " + config_path);
            in >> cfg;
        }
        const QuadratureSpec quad = quadrature_from_config(cfg);
        set_max_threads(resolve(opt_threads, threads, cfg, "threads", max_threads()));
        const std::string out_file = resolve(opt_out, out_path, cfg, "out", std::string{});

        if (*cmd_bessel) {
            const Complex beta(require(opt_ore, order_re, cfg, "order-re"),
                               resolve(opt_oim, order_im, cfg, "order-im", 0.0));
            const double r = require(opt_br, bessel_r, cfg, "r");
            const std::string which = resolve(opt_route, route, cfg, "route", std::string("auto"));
            if (which == "auto") {
                std::cout << format_complex(bessel_j(beta, r)) << "\n";
            } else if (which == "series") {
                std::cout << format_complex(bessel_j_series(beta, r)) << "\n";
            } else if (which == "asymptotic") {
                std::cout << format_complex(bessel_j_asymptotic(beta, r)) << "\n";
            } else if (which == "both") {
                const Complex s = bessel_j_series(beta, r, 400);
                const Complex a = bessel_j_asymptotic(beta, r);
                std::cout << "series     " << format_complex(s) << "\n";
                std::cout << "asymptotic " << format_complex(a) << "\n";
                std::cout << "rel_diff   "
                          << format_double(std::abs(s - a) / std::max(std::abs(s), 1e-300))
                          << "\n";
            } else {
                throw ConfigError("unknown route: " + which);
            }
            return 0;
        }

        if (*cmd_theta) {
            const int n = require(opt_tn, theta_n, cfg, "n");
            const double s = require(opt_ts, theta_s, cfg, "s");
            std::cout << format_double(sphere_fourier(n, s)) << "\n";
            return 0;
        }

        if (*cmd_mult) {
            const MeansSpec spec(Complex(require(opt_mare, mult_are, cfg, "alpha-re"),
                                         resolve(opt_maim, mult_aim, cfg, "alpha-im", 0.0)),
                                 require(opt_mn, mult_n, cfg, "n"));
            const auto grid_text =
                resolve_optional(opt_mgrid, mult_grid, cfg, std::string("s-grid"));
            if (grid_text) {
                const std::vector<double> grid = parse_grid(*grid_text);
                const DecayCheck check = multiplier_decay_check(spec, grid);
                if (out_file.empty()) {
                    write_decay_csv(check, std::cout);
                } else {
                    auto out = open_output(out_file);
                    write_decay_csv(check, out);
                }
                std::cout << "median_normalized " << format_double(check.median_normalized)
                          << "\n"
                          << "growth_flagged " << (check.growth_flagged ? "true" : "false")
                          << "\n";
                return check.growth_flagged ? 1 : 0;
            }
            const double s = require(opt_ms, mult_s, cfg, "s");
            std::cout << format_complex(multiplier(spec, s)) << "\n";
            return 0;
        }

        if (*cmd_testfn) {
            const MeansSpec spec(Complex(0.0, resolve(opt_faim, tf_aim, cfg, "alpha-im", 0.0)),
                                 require(opt_fn, tf_n, cfg, "n"));
            const TestFunctionSpec tf(spec, require(opt_flambda, tf_lambda, cfg, "lambda"));
            const bool profile = tf_profile || cfg.value("profile", false);
            if (profile) {
                const RadialProfile prof = test_function_profile(tf, quad);
                if (out_file.empty()) {
                    write_profile_csv(prof, std::cout);
                } else {
                    auto out = open_output(out_file);
                    write_profile_csv(prof, out);
                    std::cout << "profile with " << prof.grid.radii.size() << " samples -> "
                              << out_file << "\n";
                }
                return 0;
            }
            if (opt_fp->count() > 0 || cfg.contains("p")) {
                const double p = require(opt_fp, tf_p, cfg, "p");
                std::cout << format_double(test_function_lp_norm(tf, p, quad)) << "\n";
                return 0;
            }
            const double radius = require(opt_fradius, tf_radius, cfg, "radius");
            std::cout << format_complex(test_function_value(tf, radius, quad)) << "\n";
            return 0;
        }

        if (*cmd_mean) {
            const MeansSpec spec(Complex(require(opt_eare, mean_are, cfg, "alpha-re"),
                                         resolve(opt_eaim, mean_aim, cfg, "alpha-im", 0.0)),
                                 require(opt_en, mean_n, cfg, "n"));
            const TestFunctionSpec tf(spec, require(opt_elambda, mean_lambda, cfg, "lambda"));
            const double radius = require(opt_eradius, mean_radius, cfg, "radius");
            const auto grid_text =
                resolve_optional(opt_etg, mean_tgrid, cfg, std::string("t-grid"));
            if (grid_text) {
                const std::vector<double> grid = parse_grid(*grid_text);
                std::vector<MeansEvaluation> rows;
                rows.reserve(grid.size());
                for (double t : grid)
                    rows.push_back({spec, t, tf.lambda, radius,
                                    spherical_mean_multiplier(spec, t, tf, radius, quad)});
                const double scan = maximal_scan(spec, tf, radius, grid, quad);
                if (!out_file.empty()) {
                    auto out = open_output(out_file);
                    write_means_csv(rows, out);
                }
                std::cout << "max_abs " << format_double(scan) << "\n";
                return 0;
            }
            const double t = require(opt_et, mean_t, cfg, "t");
            const Complex value = spherical_mean_multiplier(spec, t, tf, radius, quad);
            if (!out_file.empty()) {
                const MeansEvaluation row{spec, t, tf.lambda, radius, value};
                auto out = open_output(out_file);
                write_means_csv(std::span<const MeansEvaluation>(&row, 1), out);
            }
            std::cout << format_complex(value) << "\n";
            return 0;
        }

        if (*cmd_scaling) {
            const MeansSpec spec(Complex(require(opt_sare, sc_are, cfg, "alpha-re"),
                                         resolve(opt_saim, sc_aim, cfg, "alpha-im", 0.0)),
                                 require(opt_sn, sc_n, cfg, "n"));
            std::vector<double> lambdas = resolve(opt_sl, sc_lambdas, cfg, "lambdas",
                                                  std::vector<double>{256, 512, 1024, 2048});
            const auto p = resolve_optional(opt_sp, sc_p, cfg, std::string("p"));
            ScalingOptions opt;
            opt.far_radius = resolve(opt_sradius, sc_radius, cfg, "radius", 2.0);
            opt.far_t = resolve(opt_st, sc_t, cfg, "t", 3.0);
            const double tol = resolve(opt_tol, tolerance, cfg, "tolerance", 0.05);

            if (sc_necessity || cfg.value("necessity", false)) {
                if (!p) throw ConfigError("necessity report needs --p");
                const NecessityReport report = necessity_report(spec, *p, lambdas, quad, opt);
                if (!out_file.empty()) {
                    auto out = open_output(out_file);
                    write_necessity_json(report, out);
                } else {
                    write_necessity_json(report, std::cout);
                }
                std::cout << "bound[near-origin] implied "
                          << format_double(report.near_origin_bound.implied) << " predicted "
                          << format_double(report.near_origin_bound.predicted) << " slack "
                          << format_double(report.near_origin_bound.slack) << "\n";
                std::cout << "bound[tuned-far]   implied "
                          << format_double(report.tuned_bound.implied) << " predicted "
                          << format_double(report.tuned_bound.predicted) << " slack "
                          << format_double(report.tuned_bound.slack) << "\n";
                if (report.necessity_violated)
                    std::cout << "necessary condition violated: " << report.violated_condition
                              << "\n";
                const bool ok =
                    report.near_origin_bound.slack <= tol && report.tuned_bound.slack <= tol;
                return ok ? 0 : 1;
            }

            const std::string qname = require(opt_q, quantity_name, cfg, "quantity");
            const auto quantity = scaling_quantity_from_string(qname);
            if (!quantity) throw ConfigError("unknown quantity: " + qname);
            const ScalingFit fit = run_scaling(*quantity, spec, p, lambdas, quad, opt);
            const double predicted = predicted_exponent(*quantity, spec, p);
            if (!out_file.empty()) {
                auto out = open_output(out_file);
                write_scaling_json(fit, spec, p, predicted, out);
            } else {
                write_scaling_json(fit, spec, p, predicted, std::cout);
            }
            std::cout << "slope " << format_double(fit.slope) << " predicted "
                      << format_double(predicted) << " delta "
                      << format_double(fit.slope - predicted) << " r2 "
                      << format_double(fit.r_squared) << "\n";
            return std::abs(fit.slope - predicted) <= tol ? 0 : 1;
        }

        if (*cmd_regions) {
            const int n = require(opt_rn, rg_n, cfg, "n");
            const double pmin = resolve(opt_rpmin, rg_pmin, cfg, "p-min", 2.0);
            const double pmax = resolve(opt_rpmax, rg_pmax, cfg, "p-max", 10.0);
            const double step = resolve(opt_rstep, rg_step, cfg, "p-step", 0.25);
            if (!(step > 0.0)) throw ConfigError("p-step must be > 0");
            if (!(pmax >= pmin)) throw ConfigError("p-max must be >= p-min");
            std::vector<double> grid;
            for (double p = pmin; p <= pmax + 1e-12; p += step) grid.push_back(p);
            const auto rows = boundary_table(n, grid);
            if (out_file.empty()) {
                write_regions_csv(n, rows, std::cout);
            } else {
                auto out = open_output(out_file);
                write_regions_csv(n, rows, out);
                std::cout << rows.size() << " rows -> " << out_file << "\n";
            }
            return 0;
        }

        if (*cmd_oracle) {
            const MeansSpec spec(Complex(require(opt_oare, oc_are, cfg, "alpha-re"),
                                         resolve(opt_oaim, oc_aim, cfg, "alpha-im", 0.0)),
                                 require(opt_on, oc_n, cfg, "n"));
            if (!(spec.alpha.real() > 0.0))
                throw ConfigError("oracle-check requires Re alpha > 0 (kernel integral)");
            const double t = require(opt_ot, oc_t, cfg, "t");
            const double tol = resolve(opt_tol, tolerance, cfg, "tolerance", 1e-6);
            double worst = 0.0;
            for (double radius : {0.0, 1.0}) {
                const Complex direct = spherical_mean_direct(
                    spec, t, [](double rho) { return Complex(std::exp(-std::numbers::pi * rho * rho)); },
                    radius, 1e-8);
                const Complex mult = spherical_mean_gaussian(spec, t, radius, quad);
                worst = std::max(worst,
                                 std::abs(mult - direct) / std::max(std::abs(direct), 1e-300));
            }
            std::cout << "max_rel_err " << format_double(worst) << " tolerance "
                      << format_double(tol) << (worst < tol ? " pass" : " FAIL") << "\n";
            return worst < tol ? 0 : 1;
        }

        throw ConfigError("no subcommand selected");
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const ConvergenceError& e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return 3;
    } catch (const json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
