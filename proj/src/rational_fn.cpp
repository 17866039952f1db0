#include "xop/rational_fn.hpp"

#include "xop/error.hpp"

#include <stdexcept>

namespace xop {

RationalFn::RationalFn(Poly num) : num_(std::move(num)), den_(Poly::constant(1)) {}

RationalFn::RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) {
        throw std::domain_error("rational function with zero denominator");
    }
    normalize();
}

void RationalFn::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    const Poly g = gcd(num_, den_);
    if (*g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    const Rational lead = den_.leading();
    num_ /= lead;
    den_ /= lead;
}

bool RationalFn::is_constant() const {
    return is_polynomial() && (num_.is_zero() || *num_.degree() == 0);
}

Rational RationalFn::operator()(const Rational& n) const {
    const Rational d = den_(n);
    if (d == 0) {
        throw DomainError("rational function denominator vanishes at n = " + xop::to_string(n));
    }
    return num_(n) / d;
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) {
        throw std::domain_error("rational function division by zero");
    }
    return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

std::string RationalFn::to_string(char var) const {
    if (is_polynomial()) {
        return num_.to_string(var);
    }
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

} // namespace xop
