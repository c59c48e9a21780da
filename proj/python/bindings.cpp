#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "holomellin/errors.hpp"
#include "holomellin/json_io.hpp"
#include "holomellin/mellin_forward.hpp"
#include "holomellin/mellin_inverse.hpp"
#include "holomellin/parser.hpp"
#include "holomellin/rational_function.hpp"
#include "holomellin/series_oracle.hpp"
#include "holomellin/solvers.hpp"

namespace py = pybind11;
using namespace holomellin;

namespace {

std::vector<std::string> coeff_strings(const std::vector<Polynomial>& ps) {
    std::vector<std::string> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(p.str());
    return out;
}

std::vector<Rational> init_from_strings(const std::vector<std::string>& init) {
    std::vector<Rational> out;
    out.reserve(init.size());
    for (const auto& s : init) out.push_back(rational_from_string(s));
    return out;
}

py::dict sum_result_dict(const SumResult& r) {
    const char* status = r.status == SumStatus::Converged     ? "converged"
                         : r.status == SumStatus::BoundNotMet ? "bound-not-met"
                                                              : "divergent";
    py::dict d;
    d["value"] = r.value;
    d["bound"] = r.bound;
    d["terms"] = r.terms;
    d["status"] = status;
    d["ok"] = r.ok();
    return d;
}

py::dict ratio_dict(const RationalFunction& f) {
    py::dict d;
    d["num"] = f.num().str();
    d["den"] = f.den().str();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Mellin/inverse-Mellin operator calculus for holonomic equations";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const InvariantViolation& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        } catch (const Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<DiffOp>(m, "DiffOp")
        .def_property_readonly("order", &DiffOp::order)
        .def_property_readonly("coefficients",
                               [](const DiffOp& op) { return coeff_strings(op.coeffs()); })
        .def("to_json", [](const DiffOp& op) { return to_json_string(op); })
        .def("normalized", [](const DiffOp& op) { return normalize_diffop(op); })
        .def("equivalent",
             [](const DiffOp& a, const DiffOp& b) { return equivalent(a, b); })
        .def("__eq__", [](const DiffOp& a, const DiffOp& b) { return a == b; })
        .def("__repr__", [](const DiffOp& op) { return pretty(op); });

    py::class_<RecOp>(m, "RecOp")
        .def_property_readonly("order", &RecOp::order)
        .def_property_readonly("coefficients",
                               [](const RecOp& op) { return coeff_strings(op.coeffs()); })
        .def_property_readonly("homogeneous", &RecOp::homogeneous)
        .def_property_readonly("inhomogeneous_part",
                               [](const RecOp& op) {
                                   std::vector<std::pair<std::string, std::string>> out;
                                   for (const auto& [sym, c] : op.inhom().terms())
                                       out.emplace_back(sym.str(), c.str());
                                   return out;
                               })
        .def("to_json", [](const RecOp& op) { return to_json_string(op); })
        .def("normalized", [](const RecOp& op) { return normalize_recop(op); })
        .def("equivalent", [](const RecOp& a, const RecOp& b) { return equivalent(a, b); })
        .def("__eq__", [](const RecOp& a, const RecOp& b) { return a == b; })
        .def("__repr__", [](const RecOp& op) { return pretty(op); });

    m.def(
        "parse",
        [](const std::string& text, const std::string& kind) -> py::object {
            OperatorKind k = kind == "diff"  ? OperatorKind::Diff
                             : kind == "rec" ? OperatorKind::Rec
                                             : OperatorKind::Any;
            ParsedOperator p = parse_operator(text, k);
            if (p.is_diff()) return py::cast(p.diff());
            return py::cast(p.rec());
        },
        py::arg("text"), py::arg("kind") = "any",
        "Parse an operator expression into a DiffOp or RecOp");

    m.def("from_json", [](const std::string& text) -> py::object {
        auto v = operator_from_json(text);
        if (std::holds_alternative<DiffOp>(v)) return py::cast(std::get<DiffOp>(v));
        return py::cast(std::get<RecOp>(v));
    });

    m.def("ode_to_mellin_rec", &ode_to_mellin_rec,
          "Mellin transform of a holonomic differential equation");
    m.def(
        "rec_to_ode", [](const RecOp& rec) { return rec_to_ode(rec); },
        "Inverse Mellin transform: recurrence to differential equation");
    m.def("rec_to_ode_trace", [](const RecOp& rec) {
        InverseTrace trace;
        DiffOp ode = rec_to_ode(rec, &trace);
        std::vector<std::string> lines;
        for (const auto& rel : trace.passes) lines.push_back(rel.str());
        return py::make_tuple(ode, lines, trace.differentiated);
    });
    m.def("ode_to_coeff_rec", &ode_to_coeff_rec,
          "Recurrence satisfied by power-series coefficients of solutions");

    py::class_<SeriesExpansion>(m, "Series")
        .def_property_readonly("exact", [](const SeriesExpansion& s) { return s.exact; })
        .def("__len__", &SeriesExpansion::size)
        .def("coefficients",
             [](const SeriesExpansion& s) -> py::object {
                 if (s.exact) {
                     std::vector<std::string> out;
                     for (const auto& q : s.exact_coeffs) out.push_back(to_string(q));
                     return py::cast(out);
                 }
                 return py::cast(s.coeffs);
             })
        .def("coeff", [](const SeriesExpansion& s, size_t k) { return s.coeff(k); })
        .def(
            "mellin",
            [](const SeriesExpansion& s, long n, double tol, size_t max_terms) {
                return sum_result_dict(numeric_mellin(s, n, tol, max_terms));
            },
            py::arg("n"), py::arg("tol") = 1e-8, py::arg("max_terms") = 1000000)
        .def(
            "regularized_mellin",
            [](const SeriesExpansion& s, long n, double tol, size_t max_terms) {
                return sum_result_dict(numeric_regularized_mellin(s, n, tol, max_terms));
            },
            py::arg("n"), py::arg("tol") = 1e-8, py::arg("max_terms") = 1000000)
        .def(
            "boundary",
            [](const SeriesExpansion& s, int j, double tol) {
                BoundaryValue b = numeric_boundary(s, j, tol);
                py::dict d;
                d["value"] = b.value;
                d["error"] = b.error;
                d["ok"] = b.ok;
                return d;
            },
            py::arg("j"), py::arg("tol") = 1e-7);

    m.def(
        "expand",
        [](const DiffOp& ode, const std::vector<std::string>& init, size_t terms, bool exact) {
            return expand(ode, init_from_strings(init), terms, exact);
        },
        py::arg("ode"), py::arg("init"), py::arg("terms"), py::arg("exact") = true);

    m.def(
        "mellin_quadrature",
        [](const std::function<double(double)>& f, long n, double tol) {
            return mellin_quadrature(f, n, tol);
        },
        py::arg("f"), py::arg("n"), py::arg("tol") = 1e-9);
    m.def(
        "regularized_mellin_quadrature",
        [](const std::function<double(double)>& f, long n, double tol) {
            return regularized_mellin_quadrature(f, n, tol);
        },
        py::arg("f"), py::arg("n"), py::arg("tol") = 1e-9);

    m.def("hyper_solutions", [](const RecOp& rec) {
        std::vector<py::dict> out;
        for (const auto& cert : hyper_solutions(rec)) out.push_back(ratio_dict(cert.ratio));
        return out;
    });
    m.def("rational_ode_solutions", [](const DiffOp& ode) {
        RationalSolutions sols = rational_ode_solutions(ode);
        std::vector<py::dict> basis;
        for (const auto& f : sols.basis) basis.push_back(ratio_dict(f));
        py::dict d;
        d["basis"] = basis;
        d["notes"] = sols.notes;
        return d;
    });
    m.def("verify_rec_certificate",
          [](const RecOp& rec, const std::string& num, const std::string& den) {
              HypergeometricCertificate cert{RationalFunction(parse_polynomial(num, Var::N),
                                                              parse_polynomial(den, Var::N))};
              CertificateCheck c = verify_certificate(rec, cert);
              return py::make_tuple(c.ok, c.residual.str());
          });
    m.def("verify_ode_solution",
          [](const DiffOp& ode, const std::string& num, const std::string& den) {
              RationalFunction f(parse_polynomial(num, Var::X), parse_polynomial(den, Var::X));
              CertificateCheck c = verify_certificate(ode, f);
              return py::make_tuple(c.ok, c.residual.str());
          });

    m.attr("__version__") = "0.1.0";
}
