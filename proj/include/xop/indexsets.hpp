#pragma once

#include "xop/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace xop {

/// Finite set of positive integers, stored strictly increasing.
class FSet {
public:
    FSet() = default;
    // Sorts the input; throws std::invalid_argument on duplicates or
    // nonpositive entries.
    FSet(std::vector<int> elems); // NOLINT(google-explicit-constructor)
    FSet(std::initializer_list<int> elems) : FSet(std::vector<int>(elems)) {}

    // "1,2" or "" for the empty set.
    static FSet parse(std::string_view text);

    const std::vector<int>& elems() const noexcept { return elems_; }
    bool empty() const noexcept { return elems_.empty(); }
    int k() const noexcept { return static_cast<int>(elems_.size()); }
    // Largest element, 0 when empty.
    int max() const noexcept { return elems_.empty() ? 0 : elems_.back(); }
    // Largest element, or the given value when empty.
    int max_or(int empty_value) const noexcept { return elems_.empty() ? empty_value : elems_.back(); }
    long sum() const noexcept;
    bool contains(int f) const;

    // u_F = sum F - C(k+1, 2)
    long u() const noexcept;
    // w_F = sum F - C(k, 2) + 1
    long w() const noexcept;

    std::string to_string() const;

    friend bool operator==(const FSet&, const FSet&) = default;

private:
    std::vector<int> elems_;
};

/// Pair (F1, F2) of finite sets; F2 contributes rows built from the
/// reciprocal-parameter family.
class FPair {
public:
    FPair() = default;
    FPair(FSet f1, FSet f2) : f1_(std::move(f1)), f2_(std::move(f2)) {}

    const FSet& f1() const noexcept { return f1_; }
    const FSet& f2() const noexcept { return f2_; }
    int k1() const noexcept { return f1_.k(); }
    int k2() const noexcept { return f2_.k(); }
    int k() const noexcept { return k1() + k2(); }
    // u = sum F1 + sum F2 - C(k1+1, 2) - C(k2, 2)
    long u() const noexcept;
    // w = sum F1 + sum F2 - C(k1, 2) - C(k2, 2) + 1
    long w() const noexcept;

    std::string to_string() const;

    friend bool operator==(const FPair&, const FPair&) = default;

private:
    FSet f1_;
    FSet f2_;
};

// n >= u_F and n - u_F not in F.
bool sigma_contains(const FSet& f, long n);
// n >= u and n - u not in F1 (F2 excludes nothing).
bool sigma_contains(const FPair& p, long n);

// I(F) = {1, ..., max F} \ {max F - f : f in F}; I(empty) = empty.
FSet involution(const FSet& f);

// prod_{f in F} (x - f) >= 0 on every nonnegative integer x.
bool admissible_charlier(const FSet& f);

// prod_{F1}(x-f) prod_{F2}(x+c+f) / (x+c)_{c_hat} >= 0 for all integers x >= 0,
// c_hat = max(-floor(c), 0). Throws ParameterError for c in {0, -1, ...}.
bool admissible_meixner(const FPair& p, const Rational& c);

} // namespace xop
