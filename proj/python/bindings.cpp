#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "degcenter/averaging.hpp"
#include "degcenter/builtin_systems.hpp"
#include "degcenter/errors.hpp"
#include "degcenter/poincare.hpp"
#include "degcenter/polar_series.hpp"
#include "degcenter/roots.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace degcenter;

namespace {

PerturbationCoefficients from_dict(const std::map<std::string, double>& values) {
    PerturbationCoefficients c;
    for (const auto& [key, value] : values) c.set(key, value);
    return c;
}

std::map<std::string, double> to_dict(const PerturbationCoefficients& c) {
    std::map<std::string, double> out;
    for (Family f : kFamilies) {
        for (std::size_t s = 0; s < kMonomialCount; ++s) {
            const CoefficientKey key{f, s};
            if (c.get(key) != 0.0) out[key.name()] = c.get(key);
        }
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Second-order averaging for cubic perturbations of a degenerate center";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<AccuracyError>(m, "AccuracyError", PyExc_ArithmeticError);
    py::register_exception<SectionLostError>(m, "SectionLostError", PyExc_ArithmeticError);
    py::register_exception<StiffnessError>(m, "StiffnessError", PyExc_ArithmeticError);
    py::register_exception<StructureError>(m, "StructureError", PyExc_ArithmeticError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_ArithmeticError);

    py::class_<PerturbationCoefficients>(m, "Coefficients")
        .def(py::init<>())
        .def(py::init(&from_dict), py::arg("values"))
        .def("__getitem__", [](const PerturbationCoefficients& c, const std::string& k) { return c.get(k); })
        .def("__setitem__", [](PerturbationCoefficients& c, const std::string& k, double v) { c.set(k, v); })
        .def("to_dict", &to_dict)
        .def("is_zero", &PerturbationCoefficients::is_zero)
        .def("scaled", &PerturbationCoefficients::scaled, py::arg("first"), py::arg("second"))
        .def("serialize", &serialize_coefficients)
        .def_static("parse", [](const std::string& text) { return parse_coefficients(std::string_view(text)); })
        .def(py::self == py::self)
        .def("__repr__", [](const PerturbationCoefficients& c) {
            std::ostringstream s;
            s << "Coefficients(" << py::str(py::cast(to_dict(c))).cast<std::string>() << ")";
            return s.str();
        });

    m.def("eval_perturbed", [](const PerturbationCoefficients& c, double eps, double x, double y) {
        const Velocity v = eval_perturbed(c, eps, {x, y});
        return py::make_tuple(v.dx, v.dy);
    }, py::arg("coeffs"), py::arg("epsilon"), py::arg("x"), py::arg("y"));
    m.def("first_integral", [](double x, double y) { return first_integral({x, y}); }, py::arg("x"), py::arg("y"));
    m.def("polar_rhs_series", [](const PerturbationCoefficients& c, double theta, double r) {
        const EpsilonExpansion e = polar_rhs_series(c, theta, r);
        return py::make_tuple(e.g0, e.g1, e.g2);
    }, py::arg("coeffs"), py::arg("theta"), py::arg("r"));

    m.def("center_integrals", [](double tol) {
        const CenterIntegrals ci = center_integrals(tol);
        return py::dict("i1"_a = ci.i1, "i2"_a = ci.i2, "i3"_a = ci.i3, "ratio"_a = ci.first_order_ratio());
    }, py::arg("tol") = kDefaultTolerance);

    py::class_<FirstOrderAverage>(m, "FirstOrderAverage")
        .def_readonly("alpha", &FirstOrderAverage::alpha)
        .def_readonly("beta", &FirstOrderAverage::beta)
        .def("__call__", &FirstOrderAverage::operator());
    m.def("first_order_structure", &first_order_structure, py::arg("coeffs"), py::arg("tol") = kDefaultTolerance);
    m.def("solve_first_order", py::overload_cast<const PerturbationCoefficients&>(&solve_first_order_condition), py::arg("coeffs"),
          "Set a10 and a30 so that the first-order average vanishes identically.");
    m.def("compute_G20", [](const PerturbationCoefficients& c, double r0, double tol) {
        return compute_G20(c, r0, tol).value;
    }, py::arg("coeffs"), py::arg("r0"), py::arg("tol") = kDefaultTolerance);

    py::class_<AveragedPolynomial>(m, "AveragedPolynomial")
        .def(py::init([](double v6, double v4, double v2, double v0) {
                 AveragedPolynomial p;
                 p.v6 = v6;
                 p.v4 = v4;
                 p.v2 = v2;
                 p.v0 = v0;
                 return p;
             }),
             py::arg("v6"), py::arg("v4"), py::arg("v2"), py::arg("v0"))
        .def_readonly("v6", &AveragedPolynomial::v6)
        .def_readonly("v4", &AveragedPolynomial::v4)
        .def_readonly("v2", &AveragedPolynomial::v2)
        .def_readonly("v0", &AveragedPolynomial::v0)
        .def_readonly("fit_residual", &AveragedPolynomial::fit_residual)
        .def("__call__", &AveragedPolynomial::g20);
    m.def("fit_v_polynomial", &fit_v_polynomial, py::arg("coeffs"), py::arg("tol") = kDefaultTolerance);

    py::class_<RootReport>(m, "RootReport")
        .def_readonly("descartes_bound", &RootReport::descartes_bound)
        .def_readonly("predicted_cycles", &RootReport::predicted_cycles)
        .def_readonly("discarded_complex_pairs", &RootReport::discarded_complex_pairs)
        .def_readonly("all_roots", &RootReport::all_roots)
        .def_property_readonly("identically_zero",
                               [](const RootReport& r) { return r.outcome == RootReport::Outcome::identically_zero; })
        .def_property_readonly("order", [](const RootReport& r) { return static_cast<int>(r.order); })
        .def_property_readonly("roots", [](const RootReport& r) {
            std::vector<double> out;
            for (const auto& root : r.positive_roots) {
                if (root.simple) out.push_back(root.r0);
            }
            return out;
        });
    m.def("positive_roots", &positive_roots, py::arg("poly"), py::arg("tol") = kDefaultRootTolerance);
    m.def("limit_cycle_report", [](const PerturbationCoefficients& c, double tol) {
        return limit_cycle_report(c, tol).roots;
    }, py::arg("coeffs"), py::arg("tol") = kDefaultTolerance);

    m.def("return_map", [](const PerturbationCoefficients& c, double eps, double r0, double tol) {
        return return_map(c, eps, r0, tol).p_of_r0;
    }, py::arg("coeffs"), py::arg("epsilon"), py::arg("r0"), py::arg("tol") = kDefaultOdeTolerance);
    m.def("fixed_points", [](const PerturbationCoefficients& c, double eps, double r_min, double r_max, double tol) {
        ScanOptions opts;
        opts.ode_tol = tol;
        return fixed_points(c, eps, r_min, r_max, opts).points;
    }, py::arg("coeffs"), py::arg("epsilon"), py::arg("r_min"), py::arg("r_max"), py::arg("tol") = kDefaultOdeTolerance);
    m.def("orbit_trace", [](const PerturbationCoefficients& c, double eps, double x, double y, int revs, double tol) {
        const OrbitTrace t = orbit_trace(c, eps, {x, y}, revs, tol);
        std::vector<double> xs, ys;
        for (const auto& p : t.points) {
            xs.push_back(p.x);
            ys.push_back(p.y);
        }
        return py::make_tuple(t.times, xs, ys);
    }, py::arg("coeffs"), py::arg("epsilon"), py::arg("x"), py::arg("y"), py::arg("revolutions") = 1,
          py::arg("tol") = kDefaultOdeTolerance);

    m.def("builtin_system", [](int id) { return builtin_system(id).coefficients; }, py::arg("id"));
    m.def("bilinear_table", [](double tol) {
        std::map<std::pair<std::string, int>, double> out;
        for (const auto& e : bilinear_table(tol).entries()) out[{e.label, e.slot}] = e.value;
        return out;
    }, py::arg("tol") = kDefaultTolerance);

    m.attr("__version__") = DEGCENTER_VERSION;
}
