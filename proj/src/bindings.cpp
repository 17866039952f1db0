#include "xop/cli.hpp"
#include "xop/duality.hpp"
#include "xop/error.hpp"
#include "xop/exceptional.hpp"
#include "xop/paper_tables.hpp"
#include "xop/recurrence.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace xop;

namespace {

// Accepts int, str "p/q" or fractions.Fraction; floats are rejected by the parser.
Rational to_rational(const py::object& v) { return parse_rational(std::string(py::str(v))); }

py::object to_fraction(const Rational& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_string(q));
}

py::list coeffs(const Poly& p) {
    py::list out;
    for (const auto& c : p.coeffs()) {
        out.append(to_fraction(c));
    }
    return out;
}

py::tuple ratfn(const RationalFn& f) { return py::make_tuple(coeffs(f.num()), coeffs(f.den())); }

Rational opt(const py::object& v, const char* name) {
    if (v.is_none()) {
        throw ParameterError(std::string("missing parameter ") + name);
    }
    return to_rational(v);
}

ExcFamily family(const std::string& name, const py::object& a, const py::object& c, const py::object& alpha,
                 const std::vector<int>& F, const std::vector<int>& F1, const std::vector<int>& F2) {
    ExcFamily fam;
    if (name == "charlier") {
        fam = ExcCharlier{opt(a, "a"), FSet(F)};
    } else if (name == "hermite") {
        fam = ExcHermite{FSet(F)};
    } else if (name == "meixner") {
        fam = ExcMeixner{opt(a, "a"), opt(c, "c"), FPair(FSet(F1), FSet(F2))};
    } else if (name == "laguerre") {
        fam = ExcLaguerre{opt(alpha, "alpha"), FPair(FSet(F1), FSet(F2))};
    } else {
        throw ParameterError("unknown family " + name);
    }
    validate(fam);
    return fam;
}

py::dict recurrence_dict(const Recurrence& rec) {
    py::dict out;
    out["order"] = 2 * rec.w + 1;
    out["lambda"] = coeffs(rec.lambda);
    py::dict a;
    for (int j = -rec.w; j <= rec.w; ++j) {
        a[py::int_(j)] = ratfn(rec.at(j));
    }
    out["A"] = a;
    return out;
}

} // namespace

#define FAMILY_ARGS                                                                                                    \
    py::arg("family"), py::kw_only(), py::arg("a") = py::none(), py::arg("c") = py::none(),                            \
        py::arg("alpha") = py::none(), py::arg("F") = std::vector<int>{}, py::arg("F1") = std::vector<int>{},          \
        py::arg("F2") = std::vector<int>{}

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact exceptional Charlier, Meixner, Hermite and Laguerre polynomials and their recurrences.";

    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<UnsupportedFamilyError>(m, "UnsupportedFamilyError", PyExc_ValueError);
    py::register_exception<NotFoundError>(m, "NotFoundError", PyExc_LookupError);

    m.def(
        "exceptional",
        [](const std::string& name, int n, py::object a, py::object c, py::object alpha, std::vector<int> F,
           std::vector<int> F1, std::vector<int> F2) {
            return coeffs(exceptional_poly(family(name, a, c, alpha, F, F1, F2), n));
        },
        py::arg("family"), py::arg("n"), py::kw_only(), py::arg("a") = py::none(), py::arg("c") = py::none(),
        py::arg("alpha") = py::none(), py::arg("F") = std::vector<int>{}, py::arg("F1") = std::vector<int>{},
        py::arg("F2") = std::vector<int>{},
        "Coefficients (ascending) of the exceptional polynomial p_n; empty sets give the classical family.");

    m.def(
        "eigenvalue",
        [](const std::string& name, py::object a, py::object c, py::object alpha, std::vector<int> F,
           std::vector<int> F1, std::vector<int> F2, py::object c0) {
            return coeffs(default_lambda(family(name, a, c, alpha, F, F1, F2), to_rational(c0)));
        },
        FAMILY_ARGS, py::arg("const") = 0, "Coefficients of lambda with the given constant term.");

    m.def(
        "recurrence",
        [](const std::string& name, py::object a, py::object c, py::object alpha, std::vector<int> F,
           std::vector<int> F1, std::vector<int> F2, py::object c0) {
            const ExcFamily fam = family(name, a, c, alpha, F, F1, F2);
            return recurrence_dict(fit_recurrence(fam, default_lambda(fam, to_rational(c0))));
        },
        FAMILY_ARGS, py::arg("const") = 0,
        "Fitted recurrence: {'order', 'lambda', 'A': {j: (num, den)}} with A_j as rational functions of n.");

    m.def(
        "minimal_order",
        [](const std::string& name, py::object a, py::object c, py::object alpha, std::vector<int> F,
           std::vector<int> F1, std::vector<int> F2, int r_max, int n_lo, int n_hi) {
            const MinimalOrderResult r = minimal_order_search(family(name, a, c, alpha, F, F1, F2), r_max, n_lo, n_hi);
            py::dict out = recurrence_dict(r.rec);
            out["r_min"] = r.r_min;
            return out;
        },
        FAMILY_ARGS, py::arg("r_max") = 5, py::arg("n_lo") = 0, py::arg("n_hi") = 25);

    m.def(
        "verify_duality",
        [](const std::string& name, py::object a, py::object c, py::object alpha, std::vector<int> F,
           std::vector<int> F1, std::vector<int> F2, int m_max, int v_max) {
            return verify_duality(family(name, a, c, alpha, F, F1, F2), m_max, v_max);
        },
        FAMILY_ARGS, py::arg("m_max") = 8, py::arg("v_max") = 20);

    m.def("paper_cases", &paper_case_ids);

    m.def(
        "verify_paper",
        [](const std::string& id) {
            const VerificationReport rep = verify_paper_tables(id);
            py::dict out;
            out["passed"] = rep.passed();
            out["match"] = rep.count(EntryStatus::match);
            out["mismatch"] = rep.count(EntryStatus::mismatch);
            out["informational"] = rep.count(EntryStatus::informational);
            return out;
        },
        py::arg("case_id"));

    m.def(
        "cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the xop command line in-process; returns (exit_code, stdout, stderr).");
}
