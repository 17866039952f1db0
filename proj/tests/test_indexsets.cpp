#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "xop/error.hpp"
#include "xop/indexsets.hpp"
#include "xop/rational.hpp"

using namespace xop;

namespace {

std::vector<FSet> subsets_upto(int top) {
    std::vector<FSet> out;
    for (int mask = 0; mask < (1 << top); ++mask) {
        std::vector<int> e;
        for (int b = 0; b < top; ++b) {
            if (mask & (1 << b)) {
                e.push_back(b + 1);
            }
        }
        out.emplace_back(e);
    }
    return out;
}

bool runs_even(const FSet& f) {
    const auto& e = f.elems();
    std::size_t i = 0;
    while (i < e.size()) {
        std::size_t j = i;
        while (j + 1 < e.size() && e[j + 1] == e[j] + 1) {
            ++j;
        }
        if ((j - i + 1) % 2 != 0) {
            return false;
        }
        i = j + 1;
    }
    return true;
}

} // namespace

TEST_CASE("FSet construction and numbers") {
    FSet f{2, 1};
    CHECK(f.elems() == std::vector<int>{1, 2});
    CHECK(f.u() == 0);
    CHECK(f.w() == 3);
    CHECK(FSet{}.u() == 0);
    CHECK(FSet{}.w() == 1);
    CHECK(FSet::parse("1,2") == f);
    CHECK(FSet::parse("") == FSet{});
    CHECK_THROWS_AS(FSet({0, 1}), ParameterError);
    CHECK_THROWS_AS(FSet({1, 1}), ParameterError);
}

TEST_CASE("sigma membership") {
    CHECK(sigma_contains(FSet{1, 2}, 0));
    CHECK_FALSE(sigma_contains(FSet{1, 2}, 1));
    CHECK(sigma_contains(FSet{}, 0));
    CHECK(sigma_contains(FPair(FSet{}, FSet{1}), 1));
    CHECK_FALSE(sigma_contains(FPair(FSet{1}, FSet{1}), 2));
    CHECK(sigma_contains(FPair(FSet{1, 2}, FSet{}), 0));
}

TEST_CASE("sigma counting law") {
    for (const FSet& f : subsets_upto(7)) {
        const long u = f.u();
        for (int N = f.max(); N <= f.max() + 4; ++N) {
            long count = 0;
            for (long n = u; n <= u + N; ++n) {
                count += sigma_contains(f, n) ? 1 : 0;
            }
            long small = 0;
            for (int e : f.elems()) {
                small += e <= N ? 1 : 0;
            }
            CHECK(count == N + 1 - small);
        }
        CHECK(u >= 0);
        CHECK(f.w() >= 1);
    }
}

TEST_CASE("pair formulas reduce to set formulas") {
    for (const FSet& f : subsets_upto(6)) {
        FPair p(f, FSet{});
        CHECK(p.u() == f.u());
        CHECK(p.w() == f.w());
        for (long n = 0; n < 12; ++n) {
            CHECK(sigma_contains(p, n) == sigma_contains(f, n));
        }
    }
}

TEST_CASE("involution") {
    CHECK(involution(FSet{1, 2}) == FSet{2});
    CHECK(involution(FSet{1}) == FSet{1});
    CHECK(involution(FSet{}) == FSet{});
    CHECK(involution(involution(FSet{2, 5, 6})) == FSet{2, 5, 6});
    int checked = 0;
    for (const FSet& f : subsets_upto(8)) {
        if (f.empty()) {
            continue;
        }
        CHECK(involution(involution(f)) == f);
        ++checked;
    }
    CHECK(checked == 255);
}

TEST_CASE("charlier admissibility") {
    CHECK(admissible_charlier(FSet{1, 2}));
    CHECK_FALSE(admissible_charlier(FSet{1}));
    CHECK(admissible_charlier(FSet{}));
    for (const FSet& f : subsets_upto(8)) {
        CHECK(admissible_charlier(f) == runs_even(f));
    }
}

TEST_CASE("meixner admissibility") {
    CHECK(admissible_meixner(FPair(FSet{1, 2}, FSet{}), make_rational(1, 2)));
    CHECK_FALSE(admissible_meixner(FPair(FSet{1, 2}, FSet{}), make_rational(-1, 2)));
    CHECK(admissible_meixner(FPair(FSet{}, FSet{1}), 3));
    CHECK(admissible_meixner(FPair(FSet{1, 2}, FSet{}), make_rational(-3, 2)));
    CHECK_FALSE(admissible_meixner(FPair(FSet{1, 2}, FSet{}), make_rational(-5, 2)));
    CHECK_THROWS_AS(admissible_meixner(FPair(FSet{1}, FSet{}), -2), ParameterError);
}
