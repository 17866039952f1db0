#include "xop/classical.hpp"

#include "xop/error.hpp"

namespace xop {

void require_charlier_a(const Rational& a) {
    if (a == 0) {
        throw ParameterError("Charlier parameter a must be nonzero");
    }
}

void require_meixner_a(const Rational& a) {
    if (a == 0 || a == 1) {
        throw ParameterError("Meixner parameter a must not be 0 or 1");
    }
}

void require_meixner_c(const Rational& c) {
    if (is_integer(c) && c <= 0) {
        throw ParameterError("Meixner parameter c must not be 0, -1, -2, ...");
    }
}

void validate(const FamilyParams& params) {
    struct Visitor {
        void operator()(const CharlierParams& p) const { require_charlier_a(p.a); }
        void operator()(const MeixnerParams& p) const {
            require_meixner_a(p.a);
            require_meixner_c(p.c);
        }
        void operator()(const HermiteParams&) const {}
        void operator()(const LaguerreParams&) const {}
    };
    std::visit(Visitor{}, params);
}

Poly charlier(int n, const Rational& a) {
    require_charlier_a(a);
    if (n < 0) {
        return {};
    }
    const Poly x = Poly::x();
    Poly acc;
    for (int j = 0; j <= n; ++j) {
        const Rational scale = pow(-a, n - j) * binomial(n, j) * factorial(j);
        acc += binomial_poly(x, j) * scale;
    }
    return acc / factorial(n);
}

Poly meixner(int n, const Rational& a, const Rational& c) {
    require_meixner_a(a);
    if (n < 0) {
        return {};
    }
    const Poly x = Poly::x();
    const Poly reflected = Poly::linear(-c, -1); // -x - c
    Poly acc;
    for (int j = 0; j <= n; ++j) {
        acc += binomial_poly(x, j) * binomial_poly(reflected, n - j) * pow(a, -j);
    }
    const Rational one_minus_a = 1 - a;
    return acc * pow(a / one_minus_a, n);
}

Poly hermite(int n) {
    if (n < 0) {
        return {};
    }
    // H_n = n! sum_j (-1)^j (2x)^(n-2j) / (j! (n-2j)!)
    std::vector<Rational> cs(static_cast<std::size_t>(n) + 1);
    for (int j = 0; 2 * j <= n; ++j) {
        Rational term = factorial(n) * pow(Rational(2), n - 2 * j) / (factorial(j) * factorial(n - 2 * j));
        if (j % 2 != 0) {
            term = -term;
        }
        cs[static_cast<std::size_t>(n - 2 * j)] = term;
    }
    return Poly(std::move(cs));
}

namespace {

// C(z, m) for rational z.
Rational binomial_rational(const Rational& z, int m) {
    if (m < 0) {
        return 0;
    }
    Rational acc = 1;
    for (int i = 0; i < m; ++i) {
        acc *= z - i;
    }
    return acc / factorial(m);
}

} // namespace

Poly laguerre(int n, const Rational& alpha) {
    if (n < 0) {
        return {};
    }
    std::vector<Rational> cs(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        Rational term = binomial_rational(alpha + n, n - j) / factorial(j);
        if (j % 2 != 0) {
            term = -term;
        }
        cs[static_cast<std::size_t>(j)] = term;
    }
    return Poly(std::move(cs));
}

Poly charlier_op_apply(const Rational& a, const Poly& p) {
    require_charlier_a(a);
    const Poly x = Poly::x();
    return -(x * p.shifted(-1)) + Poly::linear(a, 1) * p - p.shifted(1) * a;
}

Poly meixner_op_apply(const Rational& a, const Rational& c, const Poly& p) {
    require_meixner_a(a);
    const Poly x = Poly::x();
    const Poly mid = Poly::linear(a * c, 1 + a);
    const Poly up = Poly::linear(a * c, a);
    return (x * p.shifted(-1) - mid * p + up * p.shifted(1)) / (a - 1);
}

} // namespace xop
