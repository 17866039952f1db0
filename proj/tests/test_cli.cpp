#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "xop/cli.hpp"
#include "xop/emit.hpp"
#include "xop/exceptional.hpp"
#include "xop/paper_tables.hpp"
#include "xop/recurrence.hpp"

#include <sstream>

using namespace xop;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    const Run r = run(args);
    REQUIRE(r.code == 0);
    return Json::parse(r.out);
}

Rational q(long p, long d = 1) { return make_rational(p, d); }

} // namespace

TEST_CASE("poly prints the classical polynomial") {
    const Run r = run({"poly", "--family", "hermite", "--n", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
    const Json j = run_json({"poly", "--family", "charlier", "--a", "1", "--n", "2"});
    CHECK(poly_from_json(j["results"][0]["poly"]) == Poly(std::vector<Rational>{q(1, 2), q(-3, 2), q(1, 2)}));
}

TEST_CASE("recurrence json reproduces the printed charlier table") {
    const Json j = run_json({"recurrence", "--family", "charlier", "--a", "2", "--F", "1,2", "--const", "-4/3"});
    CHECK(j["schema_version"] == "1");
    const Json& res = j["results"];
    CHECK(res["order"] == 7);
    CHECK(res["operator_route_agrees"] == true);
    const auto& coeffs = res["coefficients"];
    REQUIRE(coeffs.size() == 7);
    const Recurrence table = table_recurrence(paper_table("charlier-12-ord7", CaseParams{2, 0, 0}));
    for (const auto& c : coeffs) {
        const int jj = c["j"].get<int>();
        CAPTURE(jj);
        CHECK(ratfn_from_json(c["A"]) == table.at(jj));
    }
}

TEST_CASE("minimal-order reports order five for meixner (|1)") {
    const Json j =
        run_json({"minimal-order", "--family", "meixner", "--a", "1/2", "--c", "2", "--F1", "", "--F2", "1", "--r-max", "5"});
    CHECK(j["results"]["r_min"] == 2);
    CHECK(j["results"]["order"] == 5);
}

TEST_CASE("emitters") {
    CHECK(to_json(Poly::constant(q(4, 3))).dump() == R"({"coeffs":["4/3"]})");
    CHECK(to_json(Poly(std::vector<Rational>{0, 2, 0, q(4, 3)})).dump() == R"({"coeffs":["0","2","0","4/3"]})");
    CHECK(to_json(q(-6, 4)) == "-3/2");
    const Recurrence table = table_recurrence(paper_table("charlier-12-ord7", CaseParams{2, 0, 0}));
    const std::string csv = recurrence_csv(table, 0, 3);
    CHECK(csv.rfind("j,n,value\n", 0) == 0);
    CHECK(csv.find("\n-3,*,4/3\n") != std::string::npos);
    CHECK(latex(q(-1, 2)) == "-\\frac{1}{2}");
}

TEST_CASE("json round trip") {
    for (const std::string& id : paper_case_ids()) {
        const Recurrence rec = table_recurrence(paper_table(id, CaseParams{q(1, 2), 2, q(1, 2)}));
        const Json j = Json::parse(to_json(rec).dump());
        CHECK(poly_from_json(j["lambda"]) == rec.lambda);
        for (const auto& c : j["coefficients"]) {
            CHECK(ratfn_from_json(c["A"]) == rec.at(c["j"].get<int>()));
        }
    }
    CHECK(rational_from_json(to_json(q(22, -7))) == q(-22, 7));
}

TEST_CASE("identical arguments give identical bytes") {
    const std::vector<std::vector<std::string>> cmds{
        {"recurrence", "--family", "meixner", "--a", "1/2", "--c", "2", "--F1", "1", "--F2", "1", "--format", "json"},
        {"verify", "--case", "hermite-12-ord9", "--format", "json"},
        {"duality", "--family", "charlier", "--a", "1/2", "--F", "2,3"},
    };
    for (const auto& c : cmds) {
        const Run a = run(c);
        const Run b = run(c);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("other verbs") {
    CHECK(run_json({"exceptional", "--family", "charlier", "--a", "2", "--F", "1,2", "--n", "1"})["results"][0]["degree"]
              .is_null());
    CHECK(poly_from_json(run_json({"lambda", "--family", "hermite", "--F", "1,2"})["results"]["lambda"]) ==
          lambda_hermite(FSet{1, 2}));
    CHECK(run({"casoratian", "--family", "laguerre", "--alpha", "1", "--F1", "1", "--F2", "1"}).code == 0);
    CHECK(run({"dual", "--family", "meixner", "--a", "1/2", "--c", "2", "--F2", "1", "--n", "2"}).code == 0);
    CHECK(run_json({"duality", "--family", "meixner", "--a", "1/2", "--c", "2", "--F1", "1,2"})["results"]["holds"] ==
          true);
    CHECK(run({"limits", "--family", "charlier", "--F", "1,2", "--n", "4"}).code == 0);
    CHECK(run({"verify", "--suite", "paper"}).code == 0);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"poly", "--family", "hermite"}).code == 2);
    CHECK(run({"poly", "--family", "hermite", "--n", "2", "--a", "1"}).code == 2);
    CHECK(run({"poly", "--family", "charlier", "--a", "0", "--n", "2"}).code == 3);
    CHECK(run({"poly", "--family", "meixner", "--a", "1", "--c", "2", "--n", "2"}).code == 3);
    CHECK(run({"dual", "--family", "hermite", "--n", "2"}).code == 3);
    CHECK(run({"verify", "--case", "nope"}).code == 2);
    const Run bad = run({"poly", "--family", "charlier", "--a", "x/y", "--n", "2"});
    CHECK(bad.code == 2);
    CHECK_FALSE(bad.err.empty());
}
