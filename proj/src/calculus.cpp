#include "xop/calculus.hpp"

#include <vector>

namespace xop {

Poly antidifference(const Poly& p, const Rational& c0) {
    if (p.is_zero()) {
        return Poly::constant(c0);
    }
    const int d = *p.degree();
    // b[i] is the coefficient of x^i in lambda. The backward difference of
    // x^i has coefficient C(i,t)(-1)^(i-t+1) at x^t, and i at x^(i-1), so the
    // system is triangular from the top.
    std::vector<Rational> b(static_cast<std::size_t>(d) + 2);
    b[0] = c0;
    for (int t = d; t >= 0; --t) {
        Rational rhs = p.coeff(t);
        for (int i = t + 2; i <= d + 1; ++i) {
            Rational c = binomial(i, t);
            if ((i - t + 1) % 2 != 0) {
                c = -c;
            }
            rhs -= b[static_cast<std::size_t>(i)] * c;
        }
        b[static_cast<std::size_t>(t) + 1] = rhs / (t + 1);
    }
    return Poly(std::move(b));
}

Poly antiderivative(const Poly& p, const Rational& c0) {
    std::vector<Rational> b(p.coeffs().size() + 1);
    b[0] = c0;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        b[i + 1] = p.coeffs()[i] / static_cast<long>(i + 1);
    }
    return Poly(std::move(b));
}

Poly backward_difference(const Poly& p) {
    return p - p.shifted(-1);
}

} // namespace xop
