#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "pqtrig/errors.hpp"
#include "pqtrig/inequality_lab.hpp"

namespace py = pybind11;
using namespace pqtrig;

namespace {

py::object optional_float(const std::optional<double>& v) {
    return v ? py::object(py::float_(*v)) : py::object(py::none());
}

py::dict point_dict(const PointRecord& at) {
    py::dict d;
    d["p"] = at.p;
    d["q"] = at.q;
    d["arg1"] = optional_float(at.arg1);
    d["arg2"] = optional_float(at.arg2);
    d["order"] = optional_float(at.order);
    d["note"] = at.note;
    return d;
}

py::dict verdict_dict(const InequalityVerdict& v) {
    py::dict d;
    d["lhs"] = v.lhs;
    d["rhs"] = v.rhs;
    d["margin"] = v.margin;
    d["tolerance"] = v.tolerance;
    d["satisfied"] = v.satisfied;
    d["at"] = point_dict(v.at);
    d["error"] = v.error;
    return d;
}

py::dict report_dict(const SweepReport& r) {
    py::list grid;
    for (const auto& a : r.grid) {
        py::dict axis;
        axis["name"] = a.name;
        axis["lo"] = a.lo;
        axis["hi"] = a.hi;
        axis["count"] = a.count;
        grid.append(axis);
    }
    py::list verdicts;
    for (const auto& v : r.verdicts) verdicts.append(verdict_dict(v));
    py::list counterexamples;
    for (const auto& c : r.counterexamples) counterexamples.append(point_dict(c));
    py::dict d;
    d["check"] = r.check;
    d["order"] = optional_float(r.order);
    d["grid"] = grid;
    d["verdicts"] = verdicts;
    d["worst_margin"] = r.worst_margin;
    d["all_satisfied"] = r.all_satisfied;
    d["counterexamples"] = counterexamples;
    return d;
}

py::object witness_dict(const std::optional<Witness>& w) {
    if (!w) return py::none();
    py::dict d;
    d["x"] = w->x;
    d["y"] = w->y;
    d["lhs"] = w->lhs;
    d["rhs"] = w->rhs;
    d["margin"] = w->margin;
    return d;
}

Check check_from(const std::string& name) {
    if (const auto c = parse_check(name)) return *c;
    throw DomainError("unknown check '" + name + "'");
}

QuadratureConfig quad(double tol) {
    QuadratureConfig c;
    c.target_abs_tol = tol;
    return c;
}

InversionConfig inversion(double tol) {
    InversionConfig c;
    c.tol = tol;
    return c;
}

}  // namespace

PYBIND11_MODULE(_pqtrig, m) {
    m.doc() = "Generalized (p, q)-trigonometric functions and inequality checks";

    static py::exception<ComputationError> computation_error(m, "ComputationError", PyExc_ArithmeticError);
    py::register_exception_translator([](std::exception_ptr e) {
        try {
            if (e) std::rethrow_exception(e);
        } catch (const DomainError& err) {
            PyErr_SetString(PyExc_ValueError, err.what());
        } catch (const ComputationError& err) {
            py::set_error(computation_error, err.what());
        }
    });

    py::class_<PQEvaluator>(m, "Evaluator")
        .def(py::init([](double p, double q, double quad_tol) { return PQEvaluator{PQParams{p, q}, quad(quad_tol)}; }),
             py::arg("p"), py::arg("q"), py::arg("quad_tol") = 1e-12)
        .def_property_readonly("p", [](const PQEvaluator& ev) { return ev.params().p(); })
        .def_property_readonly("q", [](const PQEvaluator& ev) { return ev.params().q(); })
        .def_property_readonly("half_pi", &PQEvaluator::half_pi)
        .def_property_readonly("m_star", [](const PQEvaluator& ev) { return ev.m_star().as_double(); })
        .def("arcsin", &PQEvaluator::arcsin, py::arg("x"))
        .def("arccos", &PQEvaluator::arccos, py::arg("x"))
        .def("arcsinh", &PQEvaluator::arcsinh, py::arg("x"))
        .def("sin", [](const PQEvaluator& ev, double y, double tol) { return sin_pq(ev, y, inversion(tol)); },
             py::arg("y"), py::arg("tol") = 1e-12)
        .def("cos", [](const PQEvaluator& ev, double y, double tol) { return cos_pq(ev, y, inversion(tol)); },
             py::arg("y"), py::arg("tol") = 1e-12)
        .def("sinh", [](const PQEvaluator& ev, double y, double tol) { return sinh_pq(ev, y, inversion(tol)); },
             py::arg("y"), py::arg("tol") = 1e-12)
        .def("lemma21", [](const PQEvaluator& ev, double x) { return verdict_dict(lemma21_margin(ev, x)); })
        .def("lemma22", [](const PQEvaluator& ev, double x) { return verdict_dict(lemma22_margin(ev, x)); })
        .def("lemma23", [](const PQEvaluator& ev) { return verdict_dict(lemma23_check(ev)); })
        .def("thm11_sin", [](const PQEvaluator& ev, double r, double s) { return verdict_dict(thm11_sin_margin(ev, r, s)); })
        .def("thm11_sinh", [](const PQEvaluator& ev, double r, double s) { return verdict_dict(thm11_sinh_margin(ev, r, s)); })
        .def("gm_sin",
             [](const PQEvaluator& ev, double order, double r, double s) {
                 return verdict_dict(gm_general_sin_margin(ev, HolderOrder{order}, r, s));
             },
             py::arg("order"), py::arg("r"), py::arg("s"))
        .def("gm_sinh",
             [](const PQEvaluator& ev, double order, double r, double s) {
                 return verdict_dict(gm_general_sinh_margin(ev, HolderOrder{order}, r, s));
             },
             py::arg("order"), py::arg("r"), py::arg("s"))
        .def("double_angle", [](const PQEvaluator& ev, double x) { return verdict_dict(double_angle_margin(ev, x)); })
        .def("G", &G_fn, py::arg("x"))
        .def("Gstar", &Gstar_fn, py::arg("x"))
        .def("F", [](const PQEvaluator& ev, double order, double x) { return F_fn(ev, HolderOrder{order}, x); },
             py::arg("order"), py::arg("x"))
        .def("Fstar", [](const PQEvaluator& ev, double order, double x) { return Fstar_fn(ev, HolderOrder{order}, x); },
             py::arg("order"), py::arg("x"))
        .def("__repr__", [](const PQEvaluator& ev) {
            return "Evaluator(p=" + std::to_string(ev.params().p()) + ", q=" + std::to_string(ev.params().q()) + ")";
        });

    m.def("holder_mean", [](double order, double a, double b) { return holder_mean(HolderOrder{order}, a, b); },
          py::arg("order"), py::arg("a"), py::arg("b"));

    m.def("arcsin_series",
          [](double p, double q, double x, int n_terms) { return arcsin_series_oracle(PQParams{p, q}, x, n_terms); },
          py::arg("p"), py::arg("q"), py::arg("x"), py::arg("n_terms") = 100000);

    m.def("check_names", [] {
        py::list out;
        for (Check c : all_checks()) out.append(std::string(check_name(c)));
        return out;
    });

    m.def(
        "run_sweep",
        [](const std::string& check, std::tuple<double, double, int> p_range,
           std::tuple<double, double, int> q_range, int grid, double order, std::optional<double> x_max,
           unsigned threads, double quad_tol, double inv_tol) {
            SweepSpec spec;
            spec.check = check_from(check);
            spec.p = {"p", std::get<0>(p_range), std::get<1>(p_range), std::get<2>(p_range)};
            spec.q = {"q", std::get<0>(q_range), std::get<1>(q_range), std::get<2>(q_range)};
            spec.grid = grid;
            spec.order = order;
            spec.x_max = x_max.value_or(std::numeric_limits<double>::quiet_NaN());
            SweepOptions opts;
            opts.threads = threads;
            opts.quadrature = quad(quad_tol);
            opts.inversion = inversion(inv_tol);
            SweepReport r;
            {
                py::gil_scoped_release release;
                r = run_sweep(spec, opts);
            }
            return report_dict(r);
        },
        py::arg("check"), py::arg("p_range"), py::arg("q_range"), py::arg("grid") = 10, py::arg("order") = 0.0,
        py::arg("x_max") = py::none(), py::arg("threads") = 0, py::arg("quad_tol") = 1e-12,
        py::arg("inv_tol") = 1e-12);

    m.def(
        "monotonicity_probe",
        [](const PQEvaluator& ev, const std::string& which, double order, int grid_n, double x_max) {
            if (which == "F") return report_dict(F_monotonicity_probe(ev, HolderOrder{order}, grid_n));
            if (which == "Fstar") return report_dict(Fstar_monotonicity_probe(ev, HolderOrder{order}, grid_n, x_max));
            throw DomainError("monotonicity_probe: which must be 'F' or 'Fstar'");
        },
        py::arg("evaluator"), py::arg("which"), py::arg("order"), py::arg("grid_n") = 100, py::arg("x_max") = 50.0);

    m.def(
        "counterexample_search",
        [](const PQEvaluator& ev, double order, int budget, unsigned threads) {
            CounterexampleResult r;
            {
                py::gil_scoped_release release;
                r = counterexample_search(ev, HolderOrder{order}, budget, threads);
            }
            py::dict d;
            d["violating"] = witness_dict(r.violating);
            d["satisfying"] = witness_dict(r.satisfying);
            d["evaluations"] = r.evaluations;
            return d;
        },
        py::arg("evaluator"), py::arg("order"), py::arg("budget") = 200, py::arg("threads") = 0);
}
