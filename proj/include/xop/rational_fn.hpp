#pragma once

#include "xop/poly.hpp"

#include <string>

namespace xop {

/// Quotient num/den of polynomials in the index variable n, kept reduced
/// (gcd(num, den) = 1) with a monic denominator.
class RationalFn {
public:
    RationalFn() : den_(Poly::constant(1)) {}
    RationalFn(Poly num); // NOLINT(google-explicit-constructor)
    RationalFn(Poly num, Poly den);

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const { return *den_.degree() == 0; }
    bool is_constant() const;

    // Throws DomainError when the denominator vanishes at n.
    Rational operator()(const Rational& n) const;

    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

    std::string to_string(char var = 'n') const;

private:
    void normalize();

    Poly num_;
    Poly den_;
};

} // namespace xop
