// Python bindings for the spherical-means laboratory core.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sml/io.hpp"
#include "sml/parallel.hpp"

namespace py = pybind11;
using namespace sml;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Generalized spherical means laboratory: Bessel machinery, oscillatory "
              "test functions, scaling-exponent experiments, exponent-region atlas.";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

    // special functions
    m.def("complex_gamma", &complex_gamma, py::arg("z"));
    m.def("bessel_j", &bessel_j, py::arg("beta"), py::arg("r"));
    m.def("bessel_j_series", &bessel_j_series, py::arg("beta"), py::arg("r"),
          py::arg("max_terms") = 400);
    m.def("bessel_j_asymptotic", &bessel_j_asymptotic, py::arg("beta"), py::arg("r"),
          py::arg("num_correction_terms") = 24);
    m.def("bessel_crossover", &bessel_crossover, py::arg("beta"));

    // specs
    py::class_<MeansSpec>(m, "MeansSpec")
        .def(py::init<Complex, int>(), py::arg("alpha"), py::arg("n"))
        .def_readonly("alpha", &MeansSpec::alpha)
        .def_readonly("n", &MeansSpec::n);

    py::class_<QuadratureSpec>(m, "QuadratureSpec")
        .def(py::init([](int nodes, double max_phase, double abs_tol, double rel_tol) {
                 QuadratureSpec spec{nodes, max_phase, abs_tol, rel_tol};
                 spec.validate();
                 return spec;
             }),
             py::arg("nodes_per_panel") = QuadratureSpec{}.nodes_per_panel,
             py::arg("max_phase_per_panel") = QuadratureSpec{}.max_phase_per_panel,
             py::arg("abs_tol") = QuadratureSpec{}.abs_tol,
             py::arg("rel_tol") = QuadratureSpec{}.rel_tol)
        .def_readonly("nodes_per_panel", &QuadratureSpec::nodes_per_panel)
        .def_readonly("max_phase_per_panel", &QuadratureSpec::max_phase_per_panel)
        .def_readonly("abs_tol", &QuadratureSpec::abs_tol)
        .def_readonly("rel_tol", &QuadratureSpec::rel_tol);

    py::class_<Interval>(m, "Interval")
        .def(py::init<double, double>(), py::arg("a"), py::arg("b"))
        .def_readonly("a", &Interval::a)
        .def_readonly("b", &Interval::b);

    py::class_<BumpSpec>(m, "BumpSpec")
        .def(py::init([](Interval support, Interval plateau) {
                 BumpSpec bump{support, plateau};
                 bump.validate();
                 return bump;
             }),
             py::arg("support") = BumpSpec{}.support, py::arg("plateau") = BumpSpec{}.plateau)
        .def_readonly("support", &BumpSpec::support)
        .def_readonly("plateau", &BumpSpec::plateau);

    py::class_<TestFunctionSpec>(m, "TestFunctionSpec")
        .def(py::init<MeansSpec, double, BumpSpec>(), py::arg("means"), py::arg("lambda_"),
             py::arg("bump") = BumpSpec{})
        .def_readonly("means", &TestFunctionSpec::means)
        .def_readonly("lambda_", &TestFunctionSpec::lambda)
        .def_readonly("bump", &TestFunctionSpec::bump);

    // radial Fourier side
    m.def("sphere_fourier", &sphere_fourier, py::arg("n"), py::arg("s"));
    m.def("multiplier", &multiplier, py::arg("spec"), py::arg("s"));

    // quadrature
    m.def(
        "integrate_oscillatory",
        [](const std::function<Complex(double)>& f, Interval support, double freq_bound,
           const QuadratureSpec& spec) {
            return integrate_oscillatory(f, support, freq_bound, spec);
        },
        py::arg("integrand"), py::arg("support"), py::arg("freq_bound"),
        py::arg("quad") = QuadratureSpec{});

    py::class_<RadialGrid>(m, "RadialGrid")
        .def_readonly("radii", &RadialGrid::radii)
        .def_readonly("weights", &RadialGrid::weights);

    m.def("lp_norm_radial", &lp_norm_radial, py::arg("values"), py::arg("grid"), py::arg("p"),
          py::arg("n"));
    m.def("unit_sphere_area", &unit_sphere_area, py::arg("n"));

    // test function
    m.def("chi", &chi, py::arg("bump"), py::arg("r"));
    m.def("test_function_value", &test_function_value, py::arg("tf"), py::arg("radius"),
          py::arg("quad") = QuadratureSpec{});
    py::class_<RadialProfile>(m, "RadialProfile")
        .def_readonly("grid", &RadialProfile::grid)
        .def_readonly("values", &RadialProfile::values)
        .def("to_csv", [](const RadialProfile& profile) {
            std::ostringstream out;
            write_profile_csv(profile, out);
            return out.str();
        });
    m.def("test_function_profile", &test_function_profile, py::arg("tf"),
          py::arg("quad") = QuadratureSpec{});
    m.def("test_function_lp_norm", &test_function_lp_norm, py::arg("tf"), py::arg("p"),
          py::arg("quad") = QuadratureSpec{});

    // spherical means
    m.def("spherical_mean_multiplier", &spherical_mean_multiplier, py::arg("spec"), py::arg("t"),
          py::arg("tf"), py::arg("radius"), py::arg("quad") = QuadratureSpec{});
    m.def("spherical_mean_direct", &spherical_mean_direct, py::arg("spec"), py::arg("t"),
          py::arg("radial_f"), py::arg("radius"), py::arg("tol") = 1e-8);
    m.def("spherical_mean_gaussian", &spherical_mean_gaussian, py::arg("spec"), py::arg("t"),
          py::arg("radius"), py::arg("quad") = QuadratureSpec{});
    m.def(
        "maximal_scan",
        [](const MeansSpec& spec, const TestFunctionSpec& tf, double radius,
           const std::vector<double>& t_grid, const QuadratureSpec& quad) {
            return maximal_scan(spec, tf, radius, t_grid, quad);
        },
        py::arg("spec"), py::arg("tf"), py::arg("radius"), py::arg("t_grid"),
        py::arg("quad") = QuadratureSpec{});

    // scaling lab
    py::enum_<ScalingQuantity>(m, "ScalingQuantity")
        .value("TESTFN_LP_NORM", ScalingQuantity::TESTFN_LP_NORM)
        .value("MEAN_AT_ORIGIN", ScalingQuantity::MEAN_AT_ORIGIN)
        .value("MEAN_TUNED_FAR", ScalingQuantity::MEAN_TUNED_FAR)
        .value("MEAN_LP_NEAR_ORIGIN", ScalingQuantity::MEAN_LP_NEAR_ORIGIN);

    py::class_<ScalingFit>(m, "ScalingFit")
        .def_readonly("quantity", &ScalingFit::quantity)
        .def_readonly("lambdas", &ScalingFit::lambdas)
        .def_readonly("values", &ScalingFit::values)
        .def_readonly("slope", &ScalingFit::slope)
        .def_readonly("intercept", &ScalingFit::intercept)
        .def_readonly("r_squared", &ScalingFit::r_squared)
        .def_readonly("residuals", &ScalingFit::residuals);

    m.def(
        "run_scaling",
        [](ScalingQuantity q, const MeansSpec& spec, std::optional<double> p,
           const std::vector<double>& lambdas, const QuadratureSpec& quad) {
            return run_scaling(q, spec, p, lambdas, quad);
        },
        py::arg("quantity"), py::arg("spec"), py::arg("p"), py::arg("lambdas"),
        py::arg("quad") = QuadratureSpec{});
    m.def("predicted_exponent", &predicted_exponent, py::arg("quantity"), py::arg("spec"),
          py::arg("p") = std::nullopt);

    py::class_<BoundEstimate>(m, "BoundEstimate")
        .def_readonly("implied", &BoundEstimate::implied)
        .def_readonly("predicted", &BoundEstimate::predicted)
        .def_readonly("slack", &BoundEstimate::slack)
        .def_readonly("condition", &BoundEstimate::condition);

    py::class_<NecessityReport>(m, "NecessityReport")
        .def_readonly("n", &NecessityReport::n)
        .def_readonly("alpha", &NecessityReport::alpha)
        .def_readonly("p", &NecessityReport::p)
        .def_readonly("testfn_fit", &NecessityReport::testfn_fit)
        .def_readonly("near_origin_fit", &NecessityReport::near_origin_fit)
        .def_readonly("tuned_fit", &NecessityReport::tuned_fit)
        .def_readonly("near_origin_bound", &NecessityReport::near_origin_bound)
        .def_readonly("tuned_bound", &NecessityReport::tuned_bound)
        .def_readonly("crossover_p", &NecessityReport::crossover_p)
        .def_readonly("necessity_violated", &NecessityReport::necessity_violated)
        .def_readonly("violated_condition", &NecessityReport::violated_condition)
        .def("to_json", [](const NecessityReport& report) {
            std::ostringstream out;
            write_necessity_json(report, out);
            return out.str();
        });

    m.def(
        "necessity_report",
        [](const MeansSpec& spec, double p, const std::vector<double>& lambdas,
           const QuadratureSpec& quad) { return necessity_report(spec, p, lambdas, quad); },
        py::arg("spec"), py::arg("p"), py::arg("lambdas"), py::arg("quad") = QuadratureSpec{});

    // exponent regions
    py::enum_<Verdict>(m, "Verdict")
        .value("SUFFICIENT_KNOWN", Verdict::SUFFICIENT_KNOWN)
        .value("NECESSARY_VIOLATED", Verdict::NECESSARY_VIOLATED)
        .value("OPEN", Verdict::OPEN);

    py::class_<RegionVerdict>(m, "RegionVerdict")
        .def_readonly("n", &RegionVerdict::n)
        .def_readonly("p", &RegionVerdict::p)
        .def_readonly("re_alpha", &RegionVerdict::re_alpha)
        .def_readonly("verdict", &RegionVerdict::verdict)
        .def_readonly("triggering_condition", &RegionVerdict::triggering_condition);

    m.def("classify", &classify, py::arg("n"), py::arg("p"), py::arg("re_alpha"));
    m.def("necessary_threshold", &necessary_threshold, py::arg("n"), py::arg("p"));
    m.def(
        "sufficient_threshold",
        [](int n, double p) { return sufficient_threshold(n, p); },
        py::arg("n"), py::arg("p"));

    py::class_<BoundaryRow>(m, "BoundaryRow")
        .def_readonly("p", &BoundaryRow::p)
        .def_readonly("inv_p", &BoundaryRow::inv_p)
        .def_readonly("necessary", &BoundaryRow::necessary)
        .def_readonly("sufficient", &BoundaryRow::sufficient)
        .def_readonly("gap", &BoundaryRow::gap);

    m.def(
        "boundary_table",
        [](int n, const std::vector<double>& p_grid) { return boundary_table(n, p_grid); },
        py::arg("n"), py::arg("p_grid"));

    // runtime
    m.def("set_max_threads", &set_max_threads, py::arg("n"));
    m.def("max_threads", &max_threads);
}
