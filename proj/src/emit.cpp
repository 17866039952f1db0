#include "xop/emit.hpp"

#include "xop/error.hpp"

#include <sstream>

namespace xop {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Poly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) {
        coeffs.push_back(to_string(c));
    }
    return Json{{"coeffs", coeffs}};
}

Json to_json(const RationalFn& f) {
    return Json{{"num", to_json(f.num())["coeffs"]}, {"den", to_json(f.den())["coeffs"]}};
}

Json to_json(const Recurrence& rec) {
    Json a = Json::array();
    for (int j = -rec.w; j <= rec.w; ++j) {
        a.push_back(Json{{"j", j}, {"A", to_json(rec.at(j))}, {"text", rec.at(j).to_string()}});
    }
    return Json{{"family", describe(rec.family)},
                {"order", 2 * rec.w + 1},
                {"w", rec.w},
                {"lambda", to_json(rec.lambda)},
                {"lambda_text", rec.lambda.to_string()},
                {"coefficients", a}};
}

Json to_json(const DiffOp& op) {
    Json h = Json::array();
    for (int j = -op.w; j <= op.w; ++j) {
        h.push_back(Json{{"j", j}, {"h", to_json(op.at(j))}, {"text", op.at(j).to_string()}});
    }
    return Json{{"w", op.w}, {"lambda", to_json(op.lambda)}, {"h", h}};
}

Json to_json(const VerificationReport& rep) {
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        Json item{{"slot", e.slot},
                  {"sample", e.sample},
                  {"status", to_string(e.status)},
                  {"paper", e.paper},
                  {"derived", e.derived}};
        if (!e.note.empty()) {
            item["note"] = e.note;
        }
        entries.push_back(std::move(item));
    }
    return Json{{"case", rep.case_id},
                {"passed", rep.passed()},
                {"match", rep.count(EntryStatus::match)},
                {"informational", rep.count(EntryStatus::informational)},
                {"mismatch", rep.count(EntryStatus::mismatch)},
                {"entries", entries}};
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) {
        throw ParameterError("rational must be a \"p/q\" string");
    }
    return parse_rational(j.get<std::string>());
}

namespace {

Poly coeff_array(const Json& arr) {
    if (!arr.is_array()) {
        throw ParameterError("coefficient list must be an array");
    }
    std::vector<Rational> c;
    for (const auto& v : arr) {
        c.push_back(rational_from_json(v));
    }
    return Poly(std::move(c));
}

std::string latex_term(const Rational& mag, int deg, char var) {
    std::string coef;
    if (deg == 0 || mag != 1) {
        coef = latex(mag);
    }
    if (deg == 0) {
        return coef;
    }
    std::string v(1, var);
    if (deg > 1) {
        v += "^{" + std::to_string(deg) + "}";
    }
    return coef + v;
}

} // namespace

Poly poly_from_json(const Json& j) { return coeff_array(j.at("coeffs")); }

RationalFn ratfn_from_json(const Json& j) { return RationalFn(coeff_array(j.at("num")), coeff_array(j.at("den"))); }

std::string latex(const Rational& q) {
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    const std::string sign = q < 0 ? "-" : "";
    return sign + "\\frac{" + mpz_class(abs(q.get_num())).get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string latex(const Poly& p, char var) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (int d = *p.degree(); d >= 0; --d) {
        const Rational& c = p.coeff(d);
        if (c == 0) {
            continue;
        }
        const Rational mag = abs(c);
        if (out.empty()) {
            out = (c < 0 ? "-" : "") + latex_term(mag, d, var);
        } else {
            out += (c < 0 ? " - " : " + ") + latex_term(mag, d, var);
        }
    }
    return out;
}

std::string latex(const RationalFn& f, char var) {
    if (f.is_polynomial()) {
        return latex(f.num(), var);
    }
    return "\\frac{" + latex(f.num(), var) + "}{" + latex(f.den(), var) + "}";
}

std::string latex(const Recurrence& rec) {
    std::ostringstream os;
    os << "A_j(n)=\\begin{cases}\n";
    for (int j = -rec.w; j <= rec.w; ++j) {
        os << latex(rec.at(j)) << ", &\\mbox{if $j=" << j << "$}" << (j < rec.w ? ",\\\\" : ".") << "\n";
    }
    os << "\\end{cases}\n";
    os << "\\lambda(x)=" << latex(rec.lambda) << "\n";
    return os.str();
}

std::string recurrence_csv(const Recurrence& rec, int n_lo, int n_hi) {
    std::ostringstream os;
    os << "j,n,value\n";
    for (int j = -rec.w; j <= rec.w; ++j) {
        const RationalFn& a = rec.at(j);
        if (a.is_constant()) {
            os << j << ",*," << to_string(a(0)) << "\n";
            continue;
        }
        for (int n = n_lo; n <= n_hi; ++n) {
            os << j << "," << n << ",";
            try {
                os << to_string(a(n));
            } catch (const DomainError&) {
                os << "undefined";
            }
            os << "\n";
        }
    }
    return os.str();
}

} // namespace xop
