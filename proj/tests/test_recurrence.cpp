#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "xop/classical.hpp"
#include "xop/error.hpp"
#include "xop/exceptional.hpp"
#include "xop/paper_tables.hpp"
#include "xop/recurrence.hpp"

using namespace xop;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

Poly P(std::initializer_list<Rational> c) { return Poly(std::vector<Rational>(c)); }

Poly charlier12_lambda(const Rational& a) { return lambda_charlier(FSet{1, 2}, a, -a * a * a / 6); }

struct Case {
    ExcFamily fam;
    Poly lambda;
};

std::vector<Case> route_cases() {
    std::vector<Case> out;
    for (const Rational& a : {q(1, 2), q(3)}) {
        for (const FSet& f : {FSet{}, FSet{1, 2}, FSet{2, 3}}) {
            const ExcFamily fam = ExcCharlier{a, f};
            out.push_back({fam, default_lambda(fam)});
        }
    }
    const std::vector<std::pair<Rational, Rational>> params{{q(1, 2), 2}, {q(1, 3), q(5, 2)}};
    for (const auto& [a, c] : params) {
        for (const FPair& p : {FPair(FSet{1, 2}, FSet{}), FPair(FSet{}, FSet{1}), FPair(FSet{1}, FSet{1})}) {
            const ExcFamily fam = ExcMeixner{a, c, p};
            out.push_back({fam, default_lambda(fam)});
        }
    }
    return out;
}

std::vector<Recurrence> paper_recurrences() {
    std::vector<Recurrence> out;
    const std::vector<CaseParams> grid{{q(1, 2), 2, q(1, 2)}, {3, q(5, 2), 3}};
    for (const std::string& id : paper_case_ids()) {
        for (const CaseParams& cp : grid) {
            const PaperTable t = paper_table(id, cp);
            out.push_back(fit_recurrence(table_recurrence(t).family, t.builder_lambda));
        }
    }
    return out;
}

} // namespace

TEST_CASE("per-n solve") {
    FamilySequence seq(ExcCharlier{2, FSet{1, 2}});
    const auto a = solve_at(seq, charlier12_lambda(2), 5);
    CHECK(a.at(3) == 16);
    // p_2 vanishes, so n = 5 says nothing about A_{-3}.
    CHECK(a.count(-3) == 0);
    CHECK(solve_at(seq, charlier12_lambda(2), 6).at(-3) == q(4, 3));
}

TEST_CASE("classical charlier operator and recurrence") {
    const Rational a = q(5, 3);
    const ExcFamily fam = ExcCharlier{a, FSet{}};
    DiffOp op = recover_operator(fam, Poly::x());
    CHECK(op.w == 1);
    CHECK(op.max_degree() <= 1);
    Recurrence rec = recurrence_from_operator(op, fam);
    CHECK(rec.at(1) == RationalFn(P({1, 1})));
    CHECK(rec.at(0) == RationalFn(P({a, 1})));
    CHECK(rec.at(-1) == RationalFn(Poly::constant(a)));
    Recurrence fit = fit_recurrence(fam, Poly::x());
    for (int j = -1; j <= 1; ++j) {
        CHECK(fit.at(j) == rec.at(j));
    }
    for (int n = 0; n < 10; ++n) {
        CHECK(fit.at(1)(n) == n + 1);
    }
}

TEST_CASE("charlier {1,2} operator matches the printed coefficients") {
    const Rational a = 2;
    const ExcFamily fam = ExcCharlier{a, FSet{1, 2}};
    DiffOp op = recover_operator(fam, charlier12_lambda(a));
    CHECK(op.w == 3);
    CHECK(op.at(-3) == Poly::x() * P({-4, 1}) * P({-5, 1}) * q(-1, 6));
    CHECK(op.at(3) == Poly::constant(q(-4, 3)));
    Recurrence rec = recurrence_from_operator(op, fam);
    CHECK(rec.at(-3) == RationalFn(Poly::constant(q(4, 3))));
    CHECK(rec.at(1) == RationalFn(P({1, 1}) * P({-2, 1}) * P({a - 1, 1}) * q(1, 2)));
}

TEST_CASE("operator recovery rejects continuous families") {
    CHECK_THROWS_AS(recover_operator(ExcHermite{FSet{1, 2}}, lambda_hermite(FSet{1, 2})), UnsupportedFamilyError);
}

TEST_CASE("fit examples") {
    Recurrence h = fit_recurrence(ExcHermite{FSet{1, 2}}, P({0, 2, 0, q(4, 3)}));
    CHECK(h.at(3)(5) == q(1, 21));
    CHECK(h.at(-2).is_zero());
    CHECK(h.at(0).is_zero());
    CHECK(h.at(2).is_zero());

    Recurrence l = fit_recurrence(ExcLaguerre{1, FPair(FSet{}, FSet{1})}, Poly::x() * P({4, 1}) * q(-1, 2));
    CHECK(l.at(2) == RationalFn(Poly::x() * P({1, 1}) * q(-1, 2)));
    CHECK(l.at(2)(2) == -3);
}

TEST_CASE("route equivalence") {
    for (const Case& c : route_cases()) {
        CAPTURE(describe(c.fam));
        Recurrence a = recurrence_from_operator(recover_operator(c.fam, c.lambda), c.fam);
        Recurrence b = fit_recurrence(c.fam, c.lambda);
        REQUIRE(a.w == b.w);
        for (int j = -a.w; j <= a.w; ++j) {
            CHECK(a.at(j) == b.at(j));
        }
    }
}

TEST_CASE("operator coefficients vanish across the sigma boundary") {
    for (const Case& c : route_cases()) {
        CAPTURE(describe(c.fam));
        DiffOp op = recover_operator(c.fam, c.lambda);
        Recurrence rec = recurrence_from_operator(op, c.fam);
        const long u = family_u(c.fam);
        for (int n = static_cast<int>(u); n <= u + 12; ++n) {
            for (int j = -op.w; j <= op.w; ++j) {
                const int m = n + j;
                if (m < u) {
                    continue;
                }
                if (in_sigma(c.fam, n) && !in_sigma(c.fam, m)) {
                    CHECK(op.at(j)(n) == 0);
                }
                if (!in_sigma(c.fam, n) && in_sigma(c.fam, m) && rec.at(j).den()(n) != 0) {
                    CHECK(rec.at(j)(n) == 0);
                }
            }
        }
    }
}

TEST_CASE("paper recurrences: residual, denominators and exact order") {
    for (const Recurrence& rec : paper_recurrences()) {
        CAPTURE(describe(rec.family));
        FamilySequence seq(rec.family);
        for (int n = 0; n <= 10; ++n) {
            CHECK(residual(rec, seq, n).is_zero());
        }
        for (int j = -rec.w; j <= rec.w; ++j) {
            const Poly& den = rec.at(j).den();
            for (int n = 0; n <= 200; ++n) {
                if (den(n) == 0) {
                    FAIL_CHECK("denominator of A_" << j << " vanishes at n = " << n);
                }
            }
        }
        CHECK_FALSE(rec.at(rec.w).is_zero());
        CHECK_FALSE(rec.at(-rec.w).is_zero());
    }
}

TEST_CASE("printed tables have zero residual") {
    const Recurrence c7 = table_recurrence(paper_table("charlier-12-ord7", CaseParams{2, 0, 0}));
    CHECK(residual(c7, 7).is_zero());
    const Recurrence m3 = table_recurrence(paper_table("meixner-11-ord7", CaseParams{q(1, 2), 2, 0}));
    CHECK(residual(m3, 5).is_zero());
    const Recurrence c9 = table_recurrence(paper_table("charlier-12-ord9", CaseParams{2, 0, 0}));
    FamilySequence seq(c7.family);
    for (int n = 0; n <= 10; ++n) {
        CHECK(residual(c7, seq, n).is_zero());
        CHECK(residual(c9, seq, n).is_zero());
    }
    CHECK_THROWS_AS(paper_table("no-such-case", CaseParams{}), NotFoundError);
}

TEST_CASE("minimal order") {
    CHECK(minimal_order_search(ExcCharlier{2, FSet{}}, 3, 0, 25).r_min == 1);
    CHECK(minimal_order_search(ExcHermite{FSet{}}, 3, 0, 25).r_min == 1);
    CHECK(minimal_order_search(ExcMeixner{q(1, 2), 2, FPair()}, 3, 0, 25).r_min == 1);
    CHECK(minimal_order_search(ExcLaguerre{q(1, 2), FPair()}, 3, 0, 25).r_min == 1);
    MinimalOrderResult c = minimal_order_search(ExcCharlier{2, FSet{1, 2}}, 5, 0, 25);
    CHECK(c.r_min == 3);
    CHECK(c.lambda.degree() == std::optional<int>(3));
    FamilySequence seq(c.rec.family);
    for (int n = 0; n <= 10; ++n) {
        CHECK(residual(c.rec, seq, n).is_zero());
    }
    CHECK(minimal_order_search(ExcMeixner{q(1, 2), 2, FPair(FSet{}, FSet{1})}, 5, 0, 25).r_min == 2);
    CHECK_THROWS_AS(minimal_order_search(ExcCharlier{2, FSet{1, 2}}, 2, 0, 25), NotFoundError);
}

TEST_CASE("paper table verification passes") {
    for (const std::string& id : paper_case_ids()) {
        CAPTURE(id);
        const VerificationReport rep = verify_paper_tables(id);
        CHECK(rep.passed());
        CHECK(rep.count(EntryStatus::mismatch) == 0);
    }
}
