#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "xop/calculus.hpp"
#include "xop/error.hpp"
#include "xop/interpolate.hpp"
#include "xop/matrix.hpp"
#include "xop/poly.hpp"
#include "xop/rational.hpp"
#include "xop/rational_fn.hpp"

#include <random>

using namespace xop;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

Poly P(std::initializer_list<Rational> c) { return Poly(std::vector<Rational>(c)); }

Poly random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(-1, max_deg);
    std::uniform_int_distribution<int> coef(-4, 4);
    std::vector<Rational> c;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) {
        c.emplace_back(coef(rng));
    }
    return Poly(c);
}

} // namespace

TEST_CASE("rationals stay reduced") {
    Rational r = q(2, 4) + q(1, 6);
    CHECK(to_string(r) == "2/3");
    CHECK(to_string(q(3, -6)) == "-1/2");
    CHECK(to_string(q(8, 4)) == "2");
    CHECK(parse_rational("-4/6") == q(-2, 3));
    CHECK(parse_rational(" 7 ") == 7);
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(q(7, 3), 0) == 1);
    CHECK(pochhammer(1, 5) == 120);
    CHECK(pochhammer(q(1, 2), 3) == q(15, 8));
    CHECK(factorial(6) == 720);
    CHECK(binomial(6, 2) == 15);
}

TEST_CASE("poly basics") {
    Poly zero;
    CHECK(zero.is_zero());
    CHECK_FALSE(zero.degree().has_value());
    Poly p = P({1, 0, q(1, 2)});
    CHECK(*p.degree() == 2);
    CHECK(p.leading() == q(1, 2));
    CHECK((p - p).is_zero());
    CHECK(p(2) == 3);
    CHECK(p.shifted(1) == P({q(3, 2), 1, q(1, 2)}));
    auto [quo, rem] = divmod(P({-1, 0, 1}), P({-1, 1}));
    CHECK(quo == P({1, 1}));
    CHECK(rem.is_zero());
    CHECK(gcd(P({-1, 0, 1}), P({1, 1})) == P({1, 1}));
}

TEST_CASE("det_poly examples") {
    CHECK(det_poly(PolyMatrix()) == Poly::constant(1));
    PolyMatrix m{{Poly::x(), Poly::constant(1)}, {Poly::constant(1), Poly::x()}};
    CHECK(det_poly(m) == P({-1, 0, 1}));
    CHECK_THROWS_AS(det_poly(PolyMatrix(2, 3)), DimensionError);
}

TEST_CASE("det_poly agrees with cofactor expansion up to 4x4") {
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t k = 1 + trial % 4;
        PolyMatrix m(k, k);
        std::vector<std::vector<Poly>> rows(k, std::vector<Poly>(k));
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = 0; c < k; ++c) {
                rows[r][c] = random_poly(rng, 2);
                m(r, c) = rows[r][c];
            }
        }
        CHECK(det_poly(m) == oracle::det_poly(rows));
    }
}

TEST_CASE("rational det agrees with cofactor expansion") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t k = 1 + trial % 4;
        RationalMatrix m(k, k);
        std::vector<std::vector<Rational>> rows(k, std::vector<Rational>(k));
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = 0; c < k; ++c) {
                rows[r][c] = q(coef(rng), 1 + static_cast<long>((r + c) % 3));
                m(r, c) = rows[r][c];
            }
        }
        CHECK(det(m) == oracle::det_rational(rows));
    }
}

TEST_CASE("antidifference") {
    CHECK(antidifference(Poly::constant(1), 0) == Poly::x());
    Poly s = antidifference(Poly::x(), 0);
    CHECK(s == P({0, q(1, 2), q(1, 2)}));
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        Poly p = random_poly(rng, 6);
        const Rational c0 = q(trial - 25, 7);
        Poly l = antidifference(p, c0);
        CHECK(l - l.shifted(-1) == p);
        CHECK(l.coeff(0) == c0);
        if (!p.is_zero()) {
            CHECK(*l.degree() == *p.degree() + 1);
        }
    }
}

TEST_CASE("antiderivative") {
    CHECK(antiderivative(Poly(), 5) == Poly::constant(5));
    CHECK(antiderivative(P({2, 0, 4}), 0) == P({0, 2, 0, q(4, 3)}));
    CHECK(antiderivative(P({0, 0, 3}), -1) == P({-1, 0, 0, 1}));
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Poly p = random_poly(rng, 6);
        CHECK(antiderivative(p, q(trial, 3)).derivative() == p);
    }
}

TEST_CASE("solve_linear_exact") {
    RationalMatrix id{{1, 0}, {0, 1}};
    std::vector<Rational> b{q(1, 2), -3};
    LinearSolution s = solve_linear_exact(id, b);
    CHECK(s.kind == LinearSolution::Kind::unique);
    CHECK(s.particular == b);

    RationalMatrix z{{0}};
    std::vector<Rational> zb{0};
    LinearSolution f = solve_linear_exact(z, zb);
    CHECK(f.kind == LinearSolution::Kind::family);
    CHECK(f.nullspace.size() == 1);

    std::vector<Rational> ib{1};
    CHECK(solve_linear_exact(z, ib).kind == LinearSolution::Kind::infeasible);
}

TEST_CASE("nullspace vectors are annihilated") {
    RationalMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    for (std::size_t r = 0; r < 3; ++r) {
        Rational acc = 0;
        for (std::size_t c = 0; c < 3; ++c) {
            acc += m(r, c) * ns[0][c];
        }
        CHECK(acc == 0);
    }
}

TEST_CASE("rational_interpolate") {
    std::vector<Sample> s;
    for (long n = 0; n <= 5; ++n) {
        s.push_back({n, q(n * n, 2)});
    }
    RationalFn f = rational_interpolate(s, 2, 0);
    CHECK(f.num() == P({0, 0, q(1, 2)}));
    CHECK(f.den() == Poly::constant(1));

    auto g = [](long n) -> Rational {
        return q((n - 1) * (n - 2), 6 * (n + 1) * (n + 2));
    };
    std::vector<Sample> t;
    for (long n = 0; n <= 9; ++n) {
        t.push_back({n, g(n)});
    }
    RationalFn h = rational_interpolate(t, 2, 2);
    CHECK(h.den() == P({2, 3, 1}));
    for (long n = 10; n < 15; ++n) {
        CHECK(h(n) == g(n));
    }

    std::vector<Sample> c;
    for (long n = 0; n <= 6; ++n) {
        c.push_back({n, q(4, 3)});
    }
    RationalFn k = rational_interpolate(c, 2, 2);
    CHECK(k.is_constant());
    CHECK(k.num() == Poly::constant(q(4, 3)));
    CHECK(k.den() == Poly::constant(1));
}

TEST_CASE("rational_interpolate rejects too-small bounds") {
    std::vector<Sample> s;
    for (long n = 0; n <= 8; ++n) {
        s.push_back({n, q(n * n * n)});
    }
    CHECK_THROWS_AS(rational_interpolate(s, 1, 0), DegreeBoundError);
}

TEST_CASE("rational function arithmetic normalizes") {
    RationalFn f(P({-1, 0, 1}), P({2, 2}));
    CHECK(f.num() == P({-q(1, 2), q(1, 2)}));
    CHECK(f.den() == Poly::constant(1));
    RationalFn g(Poly::constant(1), P({0, 1}));
    CHECK(g(2) == q(1, 2));
    CHECK_THROWS_AS(g(0), DomainError);
    CHECK((g - g).is_zero());
}
