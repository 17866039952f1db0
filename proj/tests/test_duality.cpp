#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corpus.hpp"
#include "oracles.hpp"
#include "xop/classical.hpp"
#include "xop/duality.hpp"
#include "xop/error.hpp"
#include "xop/exceptional.hpp"

using namespace xop;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

} // namespace

TEST_CASE("dual charlier examples") {
    for (int n = 0; n < 6; ++n) {
        CHECK(dual_charlier(FSet{}, q(2, 3), n) == charlier(n, q(2, 3)));
    }
    CHECK(dual_charlier(FSet{1, 2}, 2, 0).degree() == std::optional<int>(0));
    CHECK(dual_charlier(FSet{1, 2}, 2, 3).degree() == std::optional<int>(3));
}

TEST_CASE("dual meixner examples") {
    for (int n = 0; n < 6; ++n) {
        CHECK(dual_meixner(FPair(), q(1, 2), q(5, 2), n) == meixner(n, q(1, 2), q(5, 2)));
    }
    CHECK(dual_meixner(FPair(FSet{}, FSet{1}), q(1, 2), 2, 1).degree() == std::optional<int>(1));
    CHECK(dual_meixner(FPair(FSet{1}, FSet{1}), q(1, 2), 2, 2).degree() == std::optional<int>(2));
}

TEST_CASE("christoffel divisibility over the corpus") {
    // Each call performs an exact division and throws if a remainder appears.
    for (const FSet& f : corpus::small_sets()) {
        CAPTURE(f.to_string());
        for (int n = 0; n <= 5; ++n) {
            CHECK(dual_charlier(f, q(1, 2), n).degree() == std::optional<int>(n));
        }
    }
    for (const FPair& p : corpus::named_pairs()) {
        CAPTURE(p.to_string());
        for (int n = 0; n <= 5; ++n) {
            // Integer c can drop the degree (c = n for ({1},{})); only divisibility is asserted there.
            CHECK_NOTHROW(dual_meixner(p, q(1, 2), 2, n));
            CHECK(dual_meixner(p, q(1, 2), q(5, 2), n).degree() == std::optional<int>(n));
            CHECK(dual_meixner(p, q(1, 3), q(7, 3), n).degree() == std::optional<int>(n));
        }
    }
}

TEST_CASE("charlier constants") {
    for (int v = 0; v < 8; ++v) {
        DualityConstants k = duality_constants_charlier(FSet{}, 2, 0, v);
        CHECK(k.kappa == 1);
        CHECK(k.xi == 1);
        CHECK(k.zeta == oracle::ipow(-2, -v) * oracle::fact(v));
    }
    CHECK(duality_constants_charlier(FSet{1, 2}, 2, 0, 0).xi == q(1, 2));
    CHECK_THROWS_AS(duality_constants_charlier(FSet{1, 2}, 2, 0, 1), DomainError);
}

TEST_CASE("classical charlier self-duality against the defining sum") {
    const Rational a = q(3, 2);
    for (int m = 0; m <= 6; ++m) {
        for (int v = 0; v <= 6; ++v) {
            DualityConstants k = duality_constants_charlier(FSet{}, a, m, v);
            CHECK(oracle::charlier_at(m, a, v) == k.kappa * k.xi * k.zeta * oracle::charlier_at(v, a, m));
        }
    }
}

TEST_CASE("meixner constants") {
    CHECK(duality_constants_meixner(FPair(), q(1, 2), 2, 3, 4).kappa == 1);
    CHECK_THROWS_AS(duality_constants_meixner(FPair(FSet{1, 2}, FSet{}), q(1, 2), q(5, 2), 1, 1), DomainError);
    CHECK(duality_constants_meixner(FPair(FSet{}, FSet{1}), q(1, 2), 2, 0, 1).zeta != 0);
}

TEST_CASE("zeta vanishing matches sigma") {
    for (const FSet& f : corpus::small_sets()) {
        for (int v = static_cast<int>(f.u()); v <= f.u() + 9; ++v) {
            if (sigma_contains(f, v)) {
                CHECK(zeta_charlier(f, 2, v) != 0);
            } else {
                CHECK_THROWS_AS(zeta_charlier(f, 2, v), DomainError);
            }
        }
    }
    for (const FPair& p : corpus::named_pairs()) {
        for (int v = static_cast<int>(p.u()); v <= p.u() + 9; ++v) {
            if (sigma_contains(p, v)) {
                CHECK(zeta_meixner(p, q(1, 2), 2, v) != 0);
            } else {
                CHECK_THROWS_AS(zeta_meixner(p, q(1, 2), 2, v), DomainError);
            }
        }
    }
}

TEST_CASE("duality identities") {
    CHECK(verify_duality(ExcCharlier{q(7, 3), FSet{}}, 6, 12));
    CHECK(verify_duality(ExcCharlier{2, FSet{1, 2}}, 8, 20));
    CHECK(verify_duality(ExcMeixner{q(1, 2), 2, FPair(FSet{1}, FSet{1})}, 6, 15));
    // Admissibility plays no role.
    CHECK(verify_duality(ExcCharlier{-3, FSet{1}}, 5, 12));
    CHECK(verify_duality(ExcCharlier{q(1, 2), FSet{1, 3, 4}}, 5, 16));
    CHECK(verify_duality(ExcMeixner{q(1, 3), q(-1, 2), FPair(FSet{1, 2}, FSet{1})}, 4, 14));
    CHECK_THROWS_AS(verify_duality(ExcHermite{FSet{1, 2}}, 3, 3), UnsupportedFamilyError);
}

TEST_CASE("duality identity evaluated directly") {
    const Rational a = q(1, 2);
    const FSet F{2, 3};
    const ExcFamily fam = ExcCharlier{a, F};
    for (int m = 0; m <= 4; ++m) {
        const Poly qm = dual_charlier(F, a, m);
        for (int v = static_cast<int>(F.u()); v <= F.u() + 10; ++v) {
            if (!sigma_contains(F, v)) {
                continue;
            }
            const DualityConstants k = duality_constants(fam, m, v);
            CHECK(qm(v) == k.kappa * k.xi * k.zeta * exc_charlier(F, a, v)(m));
        }
    }
}

TEST_CASE("weight masses") {
    CHECK(weight_mass_charlier(FSet{}, 2, 0) == 1);
    CHECK(weight_mass_charlier(FSet{1, 2}, 2, 1) == 0);
    CHECK(weight_mass_charlier(FSet{1, 2}, 2, 3) == q(8, 3));
    CHECK(weight_mass_meixner_rel(FPair(), q(1, 2), 2, 0) == 1);
    const FPair p12(FSet{1, 2}, FSet{});
    CHECK(weight_mass_meixner_rel(p12, q(1, 2), q(5, 2), static_cast<int>(p12.u()) + 1) == 0);
    CHECK(weight_mass_meixner_rel(FPair(FSet{}, FSet{1}), q(1, 2), 2, 2) > 0);
}

TEST_CASE("masses are positive exactly on sigma under admissibility") {
    for (const FSet& f : corpus::small_sets()) {
        if (!admissible_charlier(f)) {
            continue;
        }
        CAPTURE(f.to_string());
        for (int x = static_cast<int>(f.u()); x <= f.u() + 12; ++x) {
            const Rational w = weight_mass_charlier(f, q(3, 2), x);
            if (sigma_contains(f, x)) {
                CHECK(w > 0);
            } else {
                CHECK(w == 0);
            }
        }
    }
    for (const FPair& p : corpus::named_pairs()) {
        for (const Rational& c : {q(1, 2), q(2), q(-3, 2)}) {
            if (!admissible_meixner(p, c)) {
                continue;
            }
            CAPTURE(p.to_string());
            CAPTURE(c);
            for (int x = static_cast<int>(p.u()); x <= p.u() + 12; ++x) {
                const Rational w = weight_mass_meixner_rel(p, q(1, 2), c, x);
                if (sigma_contains(p, x)) {
                    CHECK(w > 0);
                } else {
                    CHECK(w == 0);
                }
            }
        }
    }
}
