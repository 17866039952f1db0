#include "xop/duality.hpp"

#include "xop/classical.hpp"
#include "xop/error.hpp"
#include "xop/matrix.hpp"

namespace xop {

Poly dual_charlier(const FSet& F, const Rational& a, int n) {
    require_charlier_a(a);
    if (n < 0) {
        throw DomainError("dual_charlier: n must be nonnegative");
    }
    const long u = F.u();
    const std::size_t size = static_cast<std::size_t>(F.k()) + 1;
    PolyMatrix m(size, size);
    Poly denom = Poly::constant(1);
    for (std::size_t j = 0; j < size; ++j) {
        const Poly c = charlier(n + static_cast<int>(j), a);
        m(0, j) = c.shifted(-u);
        for (std::size_t i = 0; i < F.elems().size(); ++i) {
            m(i + 1, j) = Poly::constant(c(F.elems()[i]));
        }
    }
    for (int f : F.elems()) {
        denom *= Poly::linear(-(f + u), 1);
    }
    return exact_div(det_poly(m), denom);
}

Poly dual_meixner(const FPair& P, const Rational& a, const Rational& c, int n) {
    require_meixner_a(a);
    require_meixner_c(c);
    if (n < 0) {
        throw DomainError("dual_meixner: n must be nonnegative");
    }
    const long u = P.u();
    const std::size_t size = static_cast<std::size_t>(P.k()) + 1;
    const Rational inv_a = 1 / a;
    PolyMatrix m(size, size);
    for (std::size_t j = 0; j < size; ++j) {
        const int deg = n + static_cast<int>(j);
        const Poly mx = meixner(deg, a, c);
        m(0, j) = mx.shifted(-u);
        std::size_t row = 1;
        for (int f : P.f1().elems()) {
            m(row++, j) = Poly::constant(mx(f));
        }
        const Poly mr = meixner(deg, inv_a, c);
        for (int f : P.f2().elems()) {
            const Rational v = mr(f);
            m(row++, j) = Poly::constant(j % 2 == 0 ? v : Rational(-v));
        }
    }
    Poly denom = Poly::constant((static_cast<long>(n) * P.k2()) % 2 == 0 ? 1 : -1);
    for (int f : P.f1().elems()) {
        denom *= Poly::linear(-(f + u), 1);
    }
    for (int f : P.f2().elems()) {
        denom *= Poly::linear(c + f - u, 1);
    }
    return exact_div(det_poly(m), denom);
}

Poly dual_poly(const ExcFamily& fam, int n) {
    if (const auto* ch = std::get_if<ExcCharlier>(&fam)) {
        return dual_charlier(ch->F, ch->a, n);
    }
    if (const auto* me = std::get_if<ExcMeixner>(&fam)) {
        return dual_meixner(me->P, me->a, me->c, n);
    }
    throw UnsupportedFamilyError("dual polynomials exist only for the discrete families");
}

Rational zeta_charlier(const FSet& F, const Rational& a, int v) {
    require_charlier_a(a);
    if (!sigma_contains(F, v)) {
        throw DomainError("zeta: v = " + std::to_string(v) + " is not in sigma_F");
    }
    const long u = F.u();
    Rational num = pow(-a, -v) * factorial(v - u);
    Rational den = 1;
    for (int f : F.elems()) {
        num *= factorial(f);
        den *= Rational(v - f - u);
    }
    return num / den;
}

Rational zeta_meixner(const FPair& P, const Rational& a, const Rational& c, int v) {
    require_meixner_a(a);
    if (!sigma_contains(P, v)) {
        throw DomainError("zeta: v = " + std::to_string(v) + " is not in sigma");
    }
    const long u = P.u();
    const Rational num = pow(a - 1, v) * factorial(v - u);
    Rational den = pow(a, v) * pochhammer_signed(1 + c, v - u - 1);
    for (int f : P.f1().elems()) {
        den *= Rational(v - f - u);
    }
    for (int f : P.f2().elems()) {
        den *= v + c + f - u;
    }
    return num / den;
}

DualityConstants duality_constants_charlier(const FSet& F, const Rational& a, int m, int v) {
    if (m < 0) {
        throw DomainError("duality constants: m must be nonnegative");
    }
    const long k = F.k();
    DualityConstants out;
    Rational den = 1;
    for (long i = 0; i <= k; ++i) {
        den *= factorial(m + i);
    }
    out.xi = pow(-a, (k + 1) * m) / den;
    out.zeta = zeta_charlier(F, a, v);
    return out;
}

DualityConstants duality_constants_meixner(const FPair& P, const Rational& a, const Rational& c, int m, int v) {
    if (m < 0) {
        throw DomainError("duality constants: m must be nonnegative");
    }
    require_meixner_c(c);
    const long k1 = P.k1();
    const long k2 = P.k2();
    const long k = P.k();
    const long sum2 = P.f2().sum();
    DualityConstants out;

    Rational kappa_num = pow(a, k2 * (k1 + 1) + sum2);
    Rational kappa_den = pow(a - 1, k2 * (k1 + 1));
    for (const FSet* s : {&P.f1(), &P.f2()}) {
        for (int f : s->elems()) {
            kappa_num *= factorial(f);
            kappa_den *= pochhammer(1 + c, f - 1);
        }
    }
    out.kappa = kappa_num / kappa_den;
    if (sum2 % 2 != 0) {
        out.kappa = -out.kappa;
    }

    Rational xi_num = pow(a, (k1 + 1) * m);
    Rational xi_den = pow(a - 1, (k + 1) * m);
    for (long i = 0; i <= k; ++i) {
        xi_num *= pochhammer_signed(1 + c, m + i - 1);
        xi_den *= factorial(m + i);
    }
    out.xi = xi_num / xi_den;
    out.zeta = zeta_meixner(P, a, c, v);
    return out;
}

DualityConstants duality_constants(const ExcFamily& fam, int m, int v) {
    if (const auto* ch = std::get_if<ExcCharlier>(&fam)) {
        return duality_constants_charlier(ch->F, ch->a, m, v);
    }
    if (const auto* me = std::get_if<ExcMeixner>(&fam)) {
        return duality_constants_meixner(me->P, me->a, me->c, m, v);
    }
    throw UnsupportedFamilyError("duality holds only for the discrete families");
}

bool verify_duality(const ExcFamily& fam, int m_max, int v_max) {
    if (!is_discrete(fam)) {
        throw UnsupportedFamilyError("duality holds only for the discrete families");
    }
    validate(fam);
    FamilySequence p(fam);
    const long u = family_u(fam);
    for (int m = 0; m <= m_max; ++m) {
        const Poly q = dual_poly(fam, m);
        for (int v = static_cast<int>(u); v <= v_max; ++v) {
            if (!in_sigma(fam, v)) {
                continue;
            }
            const auto k = duality_constants(fam, m, v);
            if (q(v) != k.kappa * k.xi * k.zeta * p(v)(m)) {
                return false;
            }
        }
    }
    return true;
}

Rational weight_mass_charlier(const FSet& F, const Rational& a, int x) {
    require_charlier_a(a);
    const long u = F.u();
    if (x < u) {
        throw DomainError("weight mass: x = " + std::to_string(x) + " is below u_F");
    }
    Rational r = pow(a, x - u) / factorial(x - u);
    for (int f : F.elems()) {
        r *= Rational(x - f - u);
    }
    return r;
}

Rational weight_mass_meixner_rel(const FPair& P, const Rational& a, const Rational& c, int x) {
    require_meixner_a(a);
    require_meixner_c(c);
    const long u = P.u();
    if (x < u) {
        throw DomainError("weight mass: x = " + std::to_string(x) + " is below u");
    }
    Rational r = pow(a, x - u) * pochhammer(c, x - u) / factorial(x - u);
    for (int f : P.f1().elems()) {
        r *= Rational(x - f - u);
    }
    for (int f : P.f2().elems()) {
        r *= x + c + f - u;
    }
    return r;
}

} // namespace xop
