#include "xop/cli.hpp"

#include "xop/classical.hpp"
#include "xop/duality.hpp"
#include "xop/emit.hpp"
#include "xop/error.hpp"
#include "xop/paper_tables.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <sstream>

namespace xop::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Flags {
    std::string family;
    std::string a;
    std::string c;
    std::string alpha;
    std::string F;
    std::string F1;
    std::string F2;
    std::string n_range;
    std::string konst;
    std::string x = "1/2";
    std::string suite;
    std::string case_id;
    std::string format = "text";
    int n = 0;
    int r_max = 5;
};

struct Given {
    std::map<std::string, CLI::Option*> opts;

    bool has(const std::string& name) const {
        const auto it = opts.find(name);
        return it != opts.end() && it->second->count() > 0;
    }
};

struct Output {
    Json results;
    std::string text;
    std::string csv;
    std::string latex;
    bool ok = true;
};

Rational flag_rational(const std::string& name, const std::string& value) {
    try {
        return parse_rational(value);
    } catch (const std::invalid_argument&) {
        throw UsageError("--" + name + ": not a rational number: '" + value + "'");
    }
}

FSet flag_set(const std::string& name, const std::string& value) {
    try {
        return FSet::parse(value);
    } catch (const std::invalid_argument& e) {
        throw UsageError("--" + name + ": " + e.what());
    }
}

std::pair<int, int> flag_range(const std::string& value) {
    const auto colon = value.find(':');
    try {
        if (colon == std::string::npos) {
            throw std::invalid_argument("missing ':'");
        }
        std::size_t used = 0;
        const int lo = std::stoi(value.substr(0, colon), &used);
        if (used != colon) {
            throw std::invalid_argument("trailing text");
        }
        const std::string rest = value.substr(colon + 1);
        const int hi = std::stoi(rest, &used);
        if (used != rest.size() || lo < 0 || hi < lo) {
            throw std::invalid_argument("bad bounds");
        }
        return {lo, hi};
    } catch (const std::exception&) {
        throw UsageError("--n-range: expected lo:hi with 0 <= lo <= hi, got '" + value + "'");
    }
}

void forbid(const Given& g, std::initializer_list<const char*> names, const std::string& why) {
    for (const char* n : names) {
        if (g.has(n)) {
            throw UsageError("--" + std::string(n) + " is not accepted " + why);
        }
    }
}

void require(const Given& g, std::initializer_list<const char*> names, const std::string& why) {
    for (const char* n : names) {
        if (!g.has(n)) {
            throw UsageError("--" + std::string(n) + " is required " + why);
        }
    }
}

ExcFamily make_family(const Flags& f, const Given& g, bool with_sets) {
    const std::string why = "for --family " + f.family;
    if (f.family == "charlier") {
        require(g, {"a"}, why);
        forbid(g, {"c", "alpha", "F1", "F2"}, why);
        if (!with_sets) {
            forbid(g, {"F"}, "by this verb");
        }
        return ExcCharlier{flag_rational("a", f.a), flag_set("F", f.F)};
    }
    if (f.family == "hermite") {
        forbid(g, {"a", "c", "alpha", "F1", "F2"}, why);
        if (!with_sets) {
            forbid(g, {"F"}, "by this verb");
        }
        return ExcHermite{flag_set("F", f.F)};
    }
    if (f.family == "meixner") {
        require(g, {"a", "c"}, why);
        forbid(g, {"alpha", "F"}, why);
        if (!with_sets) {
            forbid(g, {"F1", "F2"}, "by this verb");
        }
        return ExcMeixner{flag_rational("a", f.a), flag_rational("c", f.c),
                          FPair(flag_set("F1", f.F1), flag_set("F2", f.F2))};
    }
    if (f.family == "laguerre") {
        require(g, {"alpha"}, why);
        forbid(g, {"a", "c", "F"}, why);
        if (!with_sets) {
            forbid(g, {"F1", "F2"}, "by this verb");
        }
        return ExcLaguerre{flag_rational("alpha", f.alpha), FPair(flag_set("F1", f.F1), flag_set("F2", f.F2))};
    }
    throw UsageError("--family must be one of charlier, meixner, hermite, laguerre");
}

std::vector<int> degree_list(const Flags& f, const Given& g) {
    if (g.has("n") == g.has("n-range")) {
        throw UsageError("give exactly one of --n and --n-range");
    }
    if (g.has("n")) {
        if (f.n < 0) {
            throw UsageError("--n must be nonnegative");
        }
        return {f.n};
    }
    const auto [lo, hi] = flag_range(f.n_range);
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n) {
        out.push_back(n);
    }
    return out;
}

Output poly_listing(const std::vector<int>& ns, const std::function<Poly(int)>& make, const std::string& name) {
    Output o;
    o.results = Json::array();
    std::ostringstream text;
    std::ostringstream csv;
    std::ostringstream tex;
    csv << "n,i,coeff\n";
    for (int n : ns) {
        const Poly p = make(n);
        Json item{{"n", n}, {"poly", to_json(p)}};
        item["degree"] = p.degree() ? Json(*p.degree()) : Json(nullptr);
        o.results.push_back(std::move(item));
        if (ns.size() == 1) {
            text << p.to_string() << "\n";
        } else {
            text << n << ": " << p.to_string() << "\n";
        }
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
            csv << n << "," << i << "," << to_string(p.coeffs()[i]) << "\n";
        }
        tex << name << "_{" << n << "}(x) = " << latex(p) << "\\\\\n";
    }
    o.text = text.str();
    o.csv = csv.str();
    o.latex = tex.str();
    return o;
}

Output single_poly(const Poly& p, const std::string& key, const std::string& name) {
    Output o;
    o.results = Json{{key, to_json(p)}, {"text", p.to_string()}};
    o.results["degree"] = p.degree() ? Json(*p.degree()) : Json(nullptr);
    o.text = p.to_string() + "\n";
    std::ostringstream csv;
    csv << "i,coeff\n";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        csv << i << "," << to_string(p.coeffs()[i]) << "\n";
    }
    o.csv = csv.str();
    o.latex = name + "(x) = " + latex(p) + "\n";
    return o;
}

Output cmd_poly(const Flags& f, const Given& g) {
    const ExcFamily fam = make_family(f, g, false);
    const auto ns = degree_list(f, g);
    validate(fam);
    return poly_listing(ns, [&fam](int n) { return exceptional_poly(fam, n); }, "p");
}

Output cmd_exceptional(const Flags& f, const Given& g) {
    const ExcFamily fam = make_family(f, g, true);
    const auto ns = degree_list(f, g);
    validate(fam);
    FamilySequence seq(fam);
    return poly_listing(ns, [&seq](int n) { return seq(n); }, "p");
}

Output cmd_dual(const Flags& f, const Given& g) {
    const ExcFamily fam = make_family(f, g, true);
    const auto ns = degree_list(f, g);
    validate(fam);
    return poly_listing(ns, [&fam](int n) { return dual_poly(fam, n); }, "q");
}

Output cmd_casoratian(const Flags& f, const Given& g) {
    forbid(g, {"n", "n-range"}, "by casoratian");
    const ExcFamily fam = make_family(f, g, true);
    validate(fam);
    const Poly omega = std::visit(
        [](const auto& x) -> Poly {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ExcCharlier>) {
                return casoratian_charlier(x.F, x.a);
            } else if constexpr (std::is_same_v<T, ExcHermite>) {
                return wronskian_hermite(x.F);
            } else if constexpr (std::is_same_v<T, ExcMeixner>) {
                return casoratian_meixner(x.P, x.a, x.c);
            } else {
                return wronskian_laguerre(x.P, x.alpha);
            }
        },
        fam);
    return single_poly(omega, "omega", "\\Omega");
}

Rational lambda_constant(const Flags& f, const Given& g) { return g.has("const") ? flag_rational("const", f.konst) : 0; }

Output cmd_lambda(const Flags& f, const Given& g) {
    forbid(g, {"n", "n-range"}, "by lambda");
    const ExcFamily fam = make_family(f, g, true);
    validate(fam);
    return single_poly(default_lambda(fam, lambda_constant(f, g)), "lambda", "\\lambda");
}

Output cmd_duality(const Flags& f, const Given& g) {
    forbid(g, {"n"}, "by duality (use --n-range 0:m_max)");
    const ExcFamily fam = make_family(f, g, true);
    if (!is_discrete(fam)) {
        throw UnsupportedFamilyError("duality holds only for charlier and meixner");
    }
    const int m_max = g.has("n-range") ? flag_range(f.n_range).second : 8;
    const int v_max = static_cast<int>(family_u(fam)) + 20;
    Output o;
    o.ok = verify_duality(fam, m_max, v_max);
    o.results = Json{{"family", describe(fam)}, {"m_max", m_max}, {"v_max", v_max}, {"holds", o.ok}};
    o.text = std::string(o.ok ? "duality holds" : "duality FAILS") + " for m <= " + std::to_string(m_max) +
             ", v <= " + std::to_string(v_max) + "\n";
    o.csv = "m_max,v_max,holds\n" + std::to_string(m_max) + "," + std::to_string(v_max) + "," +
            (o.ok ? "true" : "false") + "\n";
    o.latex = o.text;
    return o;
}

std::string recurrence_text(const Recurrence& rec) {
    std::ostringstream os;
    os << "order " << 2 * rec.w + 1 << ", lambda(x) = " << rec.lambda.to_string() << "\n";
    for (int j = -rec.w; j <= rec.w; ++j) {
        os << "A_" << j << "(n) = " << rec.at(j).to_string() << "\n";
    }
    return os.str();
}

Output cmd_recurrence(const Flags& f, const Given& g) {
    forbid(g, {"n"}, "by recurrence (use --n-range for the fit window)");
    const ExcFamily fam = make_family(f, g, true);
    validate(fam);
    const Poly lambda = default_lambda(fam, lambda_constant(f, g));
    FitOptions opts;
    int lo = 0;
    int hi = 12;
    if (g.has("n-range")) {
        std::tie(lo, hi) = flag_range(f.n_range);
        opts.n_lo = lo;
        opts.n_hi = hi;
    }
    const Recurrence rec = fit_recurrence(fam, lambda, opts);
    Output o;
    o.results = to_json(rec);
    if (is_discrete(fam)) {
        const DiffOp op = recover_operator(fam, lambda);
        const Recurrence via = recurrence_from_operator(op, fam);
        bool agree = true;
        for (int j = -rec.w; j <= rec.w; ++j) {
            agree = agree && via.at(j) == rec.at(j);
        }
        o.results["operator"] = to_json(op);
        o.results["operator_route_agrees"] = agree;
        o.ok = agree;
    }
    o.text = recurrence_text(rec);
    o.csv = recurrence_csv(rec, lo, hi);
    o.latex = latex(rec);
    return o;
}

Output cmd_minimal_order(const Flags& f, const Given& g) {
    forbid(g, {"n", "const"}, "by minimal-order");
    const ExcFamily fam = make_family(f, g, true);
    const auto [lo, hi] = g.has("n-range") ? flag_range(f.n_range) : std::pair{0, 25};
    if (f.r_max < 1) {
        throw UsageError("--r-max must be at least 1");
    }
    const auto res = minimal_order_search(fam, f.r_max, lo, hi);
    Output o;
    o.results = Json{{"family", describe(fam)},
                     {"window", {lo, hi}},
                     {"r_min", res.r_min},
                     {"order", 2 * res.r_min + 1},
                     {"lambda", to_json(res.lambda)},
                     {"lambda_text", res.lambda.to_string()},
                     {"nullity", res.nullity},
                     {"recurrence", to_json(res.rec)}};
    o.text = "r_min = " + std::to_string(res.r_min) + " (order " + std::to_string(2 * res.r_min + 1) +
             ") on n in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]\n" + recurrence_text(res.rec);
    o.csv = "r_min,order\n" + std::to_string(res.r_min) + "," + std::to_string(2 * res.r_min + 1) + "\n";
    o.latex = latex(res.rec);
    return o;
}

Output cmd_verify(const Flags& f, const Given& g) {
    std::vector<std::string> ids;
    if (g.has("suite") == g.has("case")) {
        throw UsageError("give exactly one of --suite paper and --case ID");
    }
    if (g.has("suite")) {
        if (f.suite != "paper") {
            throw UsageError("--suite: only 'paper' is available");
        }
        ids = paper_case_ids();
    } else {
        const auto& known = paper_case_ids();
        if (std::find(known.begin(), known.end(), f.case_id) == known.end()) {
            throw UsageError("--case: unknown case id '" + f.case_id + "'");
        }
        ids = {f.case_id};
    }
    Output o;
    o.results = Json::array();
    std::ostringstream text;
    std::ostringstream csv;
    std::ostringstream tex;
    csv << "case,slot,sample,status\n";
    tex << "\\begin{tabular}{llll}\ncase & slot & sample & status\\\\\n\\hline\n";
    for (const auto& id : ids) {
        const auto rep = verify_paper_tables(id);
        o.ok = o.ok && rep.passed();
        o.results.push_back(to_json(rep));
        text << id << ": " << (rep.passed() ? "PASS" : "FAIL") << " (" << rep.count(EntryStatus::match)
             << " match, " << rep.count(EntryStatus::informational) << " informational, "
             << rep.count(EntryStatus::mismatch) << " mismatch)\n";
        for (const auto& e : rep.entries) {
            csv << id << "," << e.slot << "," << e.sample << "," << to_string(e.status) << "\n";
            tex << id << " & " << e.slot << " & " << e.sample << " & " << to_string(e.status) << "\\\\\n";
            if (e.status == EntryStatus::match) {
                continue;
            }
            text << "  " << to_string(e.status) << " " << e.slot << " [" << e.sample << "]\n"
                 << "    table:   " << e.paper << "\n"
                 << "    derived: " << e.derived << "\n";
            if (!e.note.empty()) {
                text << "    " << e.note << "\n";
            }
        }
    }
    tex << "\\end{tabular}\n";
    o.text = text.str();
    o.csv = csv.str();
    o.latex = tex.str();
    return o;
}

Output cmd_limits(const Flags& f, const Given& g) {
    forbid(g, {"n-range", "const"}, "by limits");
    require(g, {"n"}, "by limits");
    const Rational x = flag_rational("x", f.x);
    Output o;
    Json gaps = Json::array();
    std::vector<Rational> mags;
    std::ostringstream text;
    std::ostringstream csv;
    std::string target;
    if (f.family == "charlier") {
        forbid(g, {"a", "c", "alpha", "F1", "F2"}, "by the charlier->hermite probe (a = 2m^2 is swept)");
        const FSet F = flag_set("F", f.F);
        target = "hermite";
        csv << "m,a,gap\n";
        for (int m : {5, 10, 20, 40}) {
            const Rational gap = limit_probe_charlier_hermite(F, f.n, m, x);
            gaps.push_back(Json{{"m", m}, {"a", to_string(Rational(2 * m * m))}, {"gap", to_string(gap)}});
            mags.push_back(abs(gap));
            csv << m << "," << 2 * m * m << "," << to_string(gap) << "\n";
            text << "m=" << m << " gap=" << to_string(gap) << "\n";
        }
    } else if (f.family == "meixner") {
        require(g, {"alpha"}, "by the meixner->laguerre probe (c = alpha + 1)");
        forbid(g, {"a", "c", "F"}, "by the meixner->laguerre probe (a = 1 - 2^-t is swept)");
        const FPair P(flag_set("F1", f.F1), flag_set("F2", f.F2));
        const Rational alpha = flag_rational("alpha", f.alpha);
        target = "laguerre";
        csv << "t,a,gap\n";
        for (int t = 2; t <= 8; ++t) {
            const Rational a = 1 - pow(Rational(2), -t);
            const Rational gap = limit_probe_meixner_laguerre(P, alpha, f.n, a, x);
            gaps.push_back(Json{{"t", t}, {"a", to_string(a)}, {"gap", to_string(gap)}});
            mags.push_back(abs(gap));
            csv << t << "," << to_string(a) << "," << to_string(gap) << "\n";
            text << "a=" << to_string(a) << " gap=" << to_string(gap) << "\n";
        }
    } else {
        throw UsageError("limits: --family must be charlier (to hermite) or meixner (to laguerre)");
    }
    bool monotone = true;
    for (std::size_t i = 1; i < mags.size(); ++i) {
        monotone = monotone && (mags[i] < mags[i - 1] || mags[i] == 0);
    }
    const bool decays = mags.back() < mags.front() || mags.front() == 0;
    o.ok = decays;
    o.results = Json{{"from", f.family}, {"to", target}, {"n", f.n}, {"x", to_string(x)},
                     {"gaps", gaps},     {"monotone", monotone}, {"decays", decays}};
    text << (monotone ? "gaps decrease monotonically" : (decays ? "gaps decay (not monotonically)" : "gaps do not decay"))
         << "\n";
    o.text = text.str();
    o.csv = csv.str();
    o.latex = o.text;
    return o;
}

using Handler = std::function<Output(const Flags&, const Given&)>;

struct Verb {
    const char* name;
    const char* help;
    Handler handler;
    std::vector<const char*> options;
};

const std::vector<Verb>& verbs() {
    static const std::vector<Verb> v = {
        {"poly", "classical polynomial p_n", cmd_poly, {"family", "a", "c", "alpha", "n", "n-range"}},
        {"exceptional", "exceptional polynomial p_n^F", cmd_exceptional,
         {"family", "a", "c", "alpha", "F", "F1", "F2", "n", "n-range"}},
        {"casoratian", "Casoratian / Wronskian Omega", cmd_casoratian,
         {"family", "a", "c", "alpha", "F", "F1", "F2", "n", "n-range"}},
        {"lambda", "eigenvalue polynomial lambda", cmd_lambda,
         {"family", "a", "c", "alpha", "F", "F1", "F2", "const", "n", "n-range"}},
        {"dual", "dual polynomial q_n (discrete families)", cmd_dual,
         {"family", "a", "c", "alpha", "F", "F1", "F2", "n", "n-range"}},
        {"duality", "check q_m(v) = kappa xi_m zeta_v p_v(m)", cmd_duality,
         {"family", "a", "c", "alpha", "F", "F1", "F2", "n", "n-range"}},
        {"recurrence", "fit the order 2w+1 recurrence", cmd_recurrence,
         {"family", "a", "c", "alpha", "F", "F1", "F2", "const", "n", "n-range"}},
        {"minimal-order", "search the minimal recurrence order", cmd_minimal_order,
         {"family", "a", "c", "alpha", "F", "F1", "F2", "const", "n", "n-range", "r-max"}},
        {"verify", "check the published coefficient tables", cmd_verify, {"suite", "case"}},
        {"limits", "scaled-limit gap probes", cmd_limits,
         {"family", "a", "c", "alpha", "F", "F1", "F2", "const", "n", "n-range", "x"}},
    };
    return v;
}

CLI::Option* add_flag(CLI::App* sub, const std::string& name, Flags& f) {
    const std::string flag = "--" + name;
    if (name == "family") return sub->add_option(flag, f.family, "charlier | meixner | hermite | laguerre");
    if (name == "a") return sub->add_option(flag, f.a, "parameter a (p/q)");
    if (name == "c") return sub->add_option(flag, f.c, "parameter c (p/q)");
    if (name == "alpha") return sub->add_option(flag, f.alpha, "parameter alpha (p/q)");
    if (name == "F") return sub->add_option(flag, f.F, "index set, comma list; empty string for none");
    if (name == "F1") return sub->add_option(flag, f.F1, "first index set of the pair");
    if (name == "F2") return sub->add_option(flag, f.F2, "second index set of the pair");
    if (name == "n") return sub->add_option(flag, f.n, "degree / index");
    if (name == "n-range") return sub->add_option(flag, f.n_range, "lo:hi");
    if (name == "const") return sub->add_option(flag, f.konst, "additive constant of lambda (p/q)");
    if (name == "r-max") return sub->add_option(flag, f.r_max, "largest half-order to try");
    if (name == "x") return sub->add_option(flag, f.x, "evaluation point (p/q)");
    if (name == "suite") return sub->add_option(flag, f.suite, "paper");
    if (name == "case") return sub->add_option(flag, f.case_id, "single case id");
    throw std::logic_error("unknown flag " + name);
}

std::string emit(const Output& o, const std::string& format, const std::string& verb,
                 const std::vector<std::string>& args) {
    if (format == "json") {
        Json doc{{"schema_version", "1"},
                 {"command", Json{{"verb", verb}, {"args", args}}},
                 {"results", o.results},
                 {"summary", Json{{"ok", o.ok}}}};
        return doc.dump(2) + "\n";
    }
    if (format == "csv") {
        return o.csv;
    }
    if (format == "latex") {
        return o.latex;
    }
    return o.text;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact exceptional orthogonal polynomials and their recurrences", "xop"};
    app.require_subcommand(1);
    Flags flags;
    std::map<std::string, Given> given;
    for (const auto& v : verbs()) {
        CLI::App* sub = app.add_subcommand(v.name, v.help);
        Given& g = given[v.name];
        for (const char* name : v.options) {
            g.opts[name] = add_flag(sub, name, flags);
        }
        sub->add_option("--format", flags.format, "text | json | csv | latex")
            ->check(CLI::IsMember({"text", "json", "csv", "latex"}));
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const CLI::App* chosen = app.get_subcommands().front();
    const std::string verb = chosen->get_name();
    const auto it = std::find_if(verbs().begin(), verbs().end(), [&](const Verb& v) { return verb == v.name; });
    try {
        const Output o = it->handler(flags, given[verb]);
        out << emit(o, flags.format, verb, args);
        return o.ok ? 0 : 1;
    } catch (const UsageError& e) {
        err << "xop " << verb << ": " << e.what() << "\n";
        return 2;
    } catch (const ParameterError& e) {
        err << "xop " << verb << ": parameter error: " << e.what() << "\n";
        return 3;
    } catch (const UnsupportedFamilyError& e) {
        err << "xop " << verb << ": " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        err << "xop " << verb << ": domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "xop " << verb << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "xop " << verb << ": " << e.what() << "\n";
        return 1;
    }
}

} // namespace xop::cli
