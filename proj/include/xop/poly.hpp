#pragma once

#include "xop/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace xop {

/// Dense univariate polynomial over the rationals.
///
/// Coefficients are stored in ascending degree with no trailing zeros, so
/// the zero polynomial has an empty coefficient list and no degree.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);

    static Poly constant(const Rational& c);
    static Poly x();
    static Poly monomial(const Rational& c, int degree);
    // c0 + c1 x
    static Poly linear(const Rational& c0, const Rational& c1);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    // Empty for the zero polynomial.
    std::optional<int> degree() const noexcept;
    // Zero for indices past the degree.
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    // Requires a nonzero polynomial.
    const Rational& leading() const;

    Rational operator()(const Rational& x) const;

    // p(scale * x + shift)
    Poly compose_affine(const Rational& scale, const Rational& shift) const;
    // p(x + s)
    Poly shifted(const Rational& s) const { return compose_affine(1, s); }
    // p(-x)
    Poly reflected() const { return compose_affine(-1, 0); }
    Poly compose(const Poly& inner) const;
    Poly derivative(int order = 1) const;
    Poly monic() const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& c);
    Poly& operator/=(const Rational& c);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(Poly p, const Rational& c) { return p *= c; }
    friend Poly operator*(const Rational& c, Poly p) { return p *= c; }
    friend Poly operator/(Poly p, const Rational& c) { return p /= c; }
    friend Poly operator-(Poly p);

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Human-readable form, highest degree first: "1/6*x^3 - 1/2*x^2 + 4/3".
    std::string to_string(char var = 'x') const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
// Quotient of a remainder-free division; throws ConsistencyError otherwise.
Poly exact_div(const Poly& num, const Poly& den);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

// Binomial C(arg, j) as a polynomial: arg (arg-1) ... (arg-j+1) / j!.
Poly binomial_poly(const Poly& arg, int j);

} // namespace xop
