// Python bindings for the main operations: shell counts, exact iterated
// integrals, the oscillatory series / main formula, the lattice constants,
// the smeared identities, and the figure pipeline.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gsphere/bump.hpp"
#include "gsphere/lattice_sums.hpp"
#include "gsphere/oscillatory.hpp"
#include "gsphere/quadruple.hpp"
#include "gsphere/radial_counts.hpp"
#include "gsphere/reporting.hpp"
#include "gsphere/smeared.hpp"
#include "gsphere/step_calculus.hpp"

namespace py = pybind11;
using namespace gsphere;

namespace {

py::dict bounded_dict(const BoundedValue& b) {
    py::dict d;
    d["value"] = b.value;
    d["bound"] = b.bound;
    d["terms_used"] = b.terms_used;
    return d;
}

py::dict pairing_dict(const PairingReport& r) {
    py::dict d;
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["truncation_bound"] = r.truncation_bound;
    d["quadrature_error"] = r.quadrature_error;
    d["pass"] = r.pass;
    d["margin"] = r.margin;
    d["note"] = r.note;
    return d;
}

}  // namespace

PYBIND11_MODULE(_gsphere, m) {
    m.doc() = "Iterated integrals of lattice-point counting functions";

    py::class_<SqrtRadius>(m, "SqrtRadius")
        .def_static("from_sigma2", &SqrtRadius::from_sigma2)
        .def_static("from_double", &SqrtRadius::from_double)
        .def_static("parse", &SqrtRadius::parse)
        .def("sigma", &SqrtRadius::sigma)
        .def_readonly("num", &SqrtRadius::num)
        .def_readonly("den", &SqrtRadius::den);

    py::class_<RadialCountTable>(m, "RadialCountTable")
        .def_readonly("dimension", &RadialCountTable::dimension)
        .def_readonly("max_n", &RadialCountTable::max_n)
        .def_readonly("counts", &RadialCountTable::counts)
        .def_readonly("cumulative", &RadialCountTable::cumulative);

    m.def("build_table", &build_table, py::arg("dimension"), py::arg("max_n"),
          py::arg("threads") = 1);
    m.def("count_n", &count_N, py::arg("table"), py::arg("sigma"));

    py::class_<IteratedEvaluator>(m, "IteratedEvaluator")
        .def(py::init<const RadialCountTable&>(), py::keep_alive<1, 2>())
        .def("eval_exact", &IteratedEvaluator::eval_exact, py::arg("k"),
             py::arg("sigma"), py::arg("threads") = 1)
        .def("eval_real", &IteratedEvaluator::eval_real, py::arg("k"),
             py::arg("sigma"))
        .def("eval_quadrature", &IteratedEvaluator::eval_quadrature,
             py::arg("k"), py::arg("sigma"), py::arg("tol") = 1e-10);

    m.def("quadruple", [](int k) {
        CoefficientQuadruple q = quadruple(k);
        py::dict d;
        d["alpha"] = static_cast<long>(q.alpha);
        d["beta"] = static_cast<long>(q.beta);
        d["gamma"] = static_cast<long>(q.gamma);
        d["delta"] = static_cast<long>(q.delta);
        return d;
    });

    m.def("main_coefficient", &main_coefficient);
    m.def(
        "eval_ok",
        [](const RadialCountTable& t, int k, double sigma, std::int64_t n,
           unsigned threads) {
            return bounded_dict(eval_ok(t, k, sigma, n,
                                        BetaConvention::recursion, threads));
        },
        py::arg("table"), py::arg("k"), py::arg("sigma"), py::arg("n_terms"),
        py::arg("threads") = 1);
    m.def(
        "main_formula",
        [](const RadialCountTable& t, int k, double sigma, std::int64_t n,
           unsigned threads) {
            return bounded_dict(main_formula(t, k, sigma, n, threads));
        },
        py::arg("table"), py::arg("k"), py::arg("sigma"), py::arg("n_terms"),
        py::arg("threads") = 1);

    m.def("c_constant", [](int j, double target) {
        LatticeSumConstant c = c_constant_ewald(j, target);
        py::dict d;
        d["j"] = c.j;
        d["value"] = c.value;
        d["bound"] = c.bound;
        d["method"] = c.method;
        return d;
    });

    py::class_<BumpFunction>(m, "BumpFunction")
        .def("__call__", &BumpFunction::operator())
        .def("rescaled", &BumpFunction::rescaled)
        .def_readonly("a", &BumpFunction::a)
        .def_readonly("b", &BumpFunction::b);
    m.def("make_bump", &make_bump, py::arg("a"), py::arg("b"),
          py::arg("kill_moments") = std::vector<int>{});

    m.def("pair_counting", &pair_counting, py::arg("table"), py::arg("k"),
          py::arg("chi"));
    m.def(
        "verify_delta_identity",
        [](const RadialCountTable& t, const BumpFunction& chi, std::int64_t n) {
            return pairing_dict(verify_delta_identity(t, chi, n));
        },
        py::arg("table"), py::arg("chi"), py::arg("n_terms"));
    m.def(
        "verify_nd_identity",
        [](const RadialCountTable& t, const BumpFunction& chi, std::int64_t n) {
            return pairing_dict(verify_Nd_identity(t, chi, n));
        },
        py::arg("table"), py::arg("chi"), py::arg("n_terms"));
    m.def(
        "fourier_check",
        [](const RadialCountTable& t, double tau, double eps, std::int64_t n,
           double r_max) {
            return pairing_dict(fourier_check(t, tau, eps, n, r_max));
        },
        py::arg("table"), py::arg("tau"), py::arg("eps"), py::arg("n_terms"),
        py::arg("r_max"));

    m.def(
        "figure_rows",
        [](const RadialCountTable& t, std::int64_t lambda_max,
           std::int64_t n_terms, unsigned threads) {
            py::list out;
            for (const FigureRow& r :
                 figure_pipeline(t, lambda_max, n_terms, threads)) {
                py::dict d;
                d["lambda"] = r.lambda;
                d["sigma2"] = r.sigma2;
                d["n34"] = r.n34;
                d["residual1"] = r.residual1;
                d["residual2"] = r.residual2;
                d["residual3"] = r.residual3;
                out.append(d);
            }
            return out;
        },
        py::arg("table"), py::arg("lambda_max"), py::arg("n_terms"),
        py::arg("threads") = 1);

    m.def(
        "run_suite",
        [](const std::string& profile, unsigned threads) {
            std::string json;
            int status = run_suite(profile, json, threads);
            return py::make_tuple(status, json);
        },
        py::arg("profile") = "quick", py::arg("threads") = 1);
}
