#include "xop/exceptional.hpp"

#include "xop/calculus.hpp"
#include "xop/classical.hpp"
#include "xop/error.hpp"
#include "xop/matrix.hpp"

#include <sstream>

namespace xop {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Columns p(x), p(x+1), ..., p(x+cols-1), the j-th divided by scale^j.
void fill_shift_row(PolyMatrix& m, std::size_t row, const Poly& p, std::size_t cols, const Rational& scale = 1) {
    Rational div = 1;
    for (std::size_t j = 0; j < cols; ++j) {
        m(row, j) = p.shifted(static_cast<long>(j)) / div;
        div *= scale;
    }
}

// Columns p, p', ..., p^(cols-1).
void fill_derivative_row(PolyMatrix& m, std::size_t row, const Poly& p, std::size_t cols) {
    Poly d = p;
    for (std::size_t j = 0; j < cols; ++j) {
        m(row, j) = d;
        d = d.derivative();
    }
}

void require_n(int n) {
    if (n < 0) {
        throw DomainError("degree index n must be nonnegative");
    }
}

} // namespace

void validate(const ExcFamily& fam) {
    std::visit(overloaded{
                   [](const ExcCharlier& f) { require_charlier_a(f.a); },
                   [](const ExcHermite&) {},
                   [](const ExcMeixner& f) {
                       require_meixner_a(f.a);
                       require_meixner_c(f.c);
                   },
                   [](const ExcLaguerre&) {},
               },
               fam);
}

bool is_discrete(const ExcFamily& fam) {
    return std::holds_alternative<ExcCharlier>(fam) || std::holds_alternative<ExcMeixner>(fam);
}

std::string family_name(const ExcFamily& fam) {
    return std::visit(overloaded{
                          [](const ExcCharlier&) { return std::string("charlier"); },
                          [](const ExcHermite&) { return std::string("hermite"); },
                          [](const ExcMeixner&) { return std::string("meixner"); },
                          [](const ExcLaguerre&) { return std::string("laguerre"); },
                      },
                      fam);
}

std::string describe(const ExcFamily& fam) {
    std::ostringstream os;
    std::visit(overloaded{
                   [&](const ExcCharlier& f) { os << "charlier a=" << to_string(f.a) << " F={" << f.F.to_string() << "}"; },
                   [&](const ExcHermite& f) { os << "hermite F={" << f.F.to_string() << "}"; },
                   [&](const ExcMeixner& f) {
                       os << "meixner a=" << to_string(f.a) << " c=" << to_string(f.c) << " P=" << f.P.to_string();
                   },
                   [&](const ExcLaguerre& f) { os << "laguerre alpha=" << to_string(f.alpha) << " P=" << f.P.to_string(); },
               },
               fam);
    return os.str();
}

long family_u(const ExcFamily& fam) {
    return std::visit(overloaded{
                          [](const ExcCharlier& f) { return f.F.u(); },
                          [](const ExcHermite& f) { return f.F.u(); },
                          [](const ExcMeixner& f) { return f.P.u(); },
                          [](const ExcLaguerre& f) { return f.P.u(); },
                      },
                      fam);
}

long family_w(const ExcFamily& fam) {
    return std::visit(overloaded{
                          [](const ExcCharlier& f) { return f.F.w(); },
                          [](const ExcHermite& f) { return f.F.w(); },
                          [](const ExcMeixner& f) { return f.P.w(); },
                          [](const ExcLaguerre& f) { return f.P.w(); },
                      },
                      fam);
}

int family_k(const ExcFamily& fam) {
    return std::visit(overloaded{
                          [](const ExcCharlier& f) { return f.F.k(); },
                          [](const ExcHermite& f) { return f.F.k(); },
                          [](const ExcMeixner& f) { return f.P.k(); },
                          [](const ExcLaguerre& f) { return f.P.k(); },
                      },
                      fam);
}

bool in_sigma(const ExcFamily& fam, long n) {
    return std::visit(overloaded{
                          [n](const ExcCharlier& f) { return sigma_contains(f.F, n); },
                          [n](const ExcHermite& f) { return sigma_contains(f.F, n); },
                          [n](const ExcMeixner& f) { return sigma_contains(f.P, n); },
                          [n](const ExcLaguerre& f) { return sigma_contains(f.P, n); },
                      },
                      fam);
}

Poly exc_charlier(const FSet& F, const Rational& a, int n) {
    require_charlier_a(a);
    require_n(n);
    const std::size_t size = static_cast<std::size_t>(F.k()) + 1;
    PolyMatrix m(size, size);
    fill_shift_row(m, 0, charlier(n - static_cast<int>(F.u()), a), size);
    for (std::size_t i = 0; i < F.elems().size(); ++i) {
        fill_shift_row(m, i + 1, charlier(F.elems()[i], a), size);
    }
    return det_poly(m);
}

Poly exc_hermite(const FSet& F, int n) {
    require_n(n);
    const std::size_t size = static_cast<std::size_t>(F.k()) + 1;
    PolyMatrix m(size, size);
    fill_derivative_row(m, 0, hermite(n - static_cast<int>(F.u())), size);
    for (std::size_t i = 0; i < F.elems().size(); ++i) {
        fill_derivative_row(m, i + 1, hermite(F.elems()[i]), size);
    }
    return det_poly(m);
}

Poly exc_meixner(const FPair& P, const Rational& a, const Rational& c, int n) {
    require_meixner_a(a);
    require_meixner_c(c);
    require_n(n);
    const std::size_t size = static_cast<std::size_t>(P.k()) + 1;
    PolyMatrix m(size, size);
    fill_shift_row(m, 0, meixner(n - static_cast<int>(P.u()), a, c), size);
    std::size_t row = 1;
    for (int f : P.f1().elems()) {
        fill_shift_row(m, row++, meixner(f, a, c), size);
    }
    const Rational inv_a = 1 / a;
    for (int f : P.f2().elems()) {
        fill_shift_row(m, row++, meixner(f, inv_a, c), size, a);
    }
    return det_poly(m);
}

Poly exc_laguerre(const FPair& P, const Rational& alpha, int n) {
    require_n(n);
    const std::size_t size = static_cast<std::size_t>(P.k()) + 1;
    PolyMatrix m(size, size);
    fill_derivative_row(m, 0, laguerre(n - static_cast<int>(P.u()), alpha), size);
    std::size_t row = 1;
    for (int f : P.f1().elems()) {
        fill_derivative_row(m, row++, laguerre(f, alpha), size);
    }
    for (int f : P.f2().elems()) {
        for (std::size_t j = 0; j < size; ++j) {
            m(row, j) = laguerre(f, alpha + static_cast<long>(j)).reflected();
        }
        ++row;
    }
    return det_poly(m);
}

Poly exceptional_poly(const ExcFamily& fam, int n) {
    return std::visit(overloaded{
                          [n](const ExcCharlier& f) { return exc_charlier(f.F, f.a, n); },
                          [n](const ExcHermite& f) { return exc_hermite(f.F, n); },
                          [n](const ExcMeixner& f) { return exc_meixner(f.P, f.a, f.c, n); },
                          [n](const ExcLaguerre& f) { return exc_laguerre(f.P, f.alpha, n); },
                      },
                      fam);
}

FamilySequence::FamilySequence(ExcFamily fam) : fam_(std::move(fam)) {
    validate(fam_);
}

const Poly& FamilySequence::operator()(int n) {
    static const Poly kZero;
    if (n < 0) {
        return kZero;
    }
    auto it = cache_.find(n);
    if (it == cache_.end()) {
        it = cache_.emplace(n, exceptional_poly(fam_, n)).first;
    }
    return it->second;
}

Poly casoratian_charlier(const FSet& F, const Rational& a) {
    require_charlier_a(a);
    const std::size_t k = static_cast<std::size_t>(F.k());
    PolyMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        fill_shift_row(m, i, charlier(F.elems()[i], a), k);
    }
    return det_poly(m);
}

Poly wronskian_hermite(const FSet& F) {
    const std::size_t k = static_cast<std::size_t>(F.k());
    PolyMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        fill_derivative_row(m, i, hermite(F.elems()[i]), k);
    }
    return det_poly(m);
}

Poly casoratian_meixner(const FPair& P, const Rational& a, const Rational& c) {
    require_meixner_a(a);
    const std::size_t k = static_cast<std::size_t>(P.k());
    PolyMatrix m(k, k);
    std::size_t row = 0;
    for (int f : P.f1().elems()) {
        fill_shift_row(m, row++, meixner(f, a, c), k);
    }
    const Rational inv_a = 1 / a;
    for (int f : P.f2().elems()) {
        fill_shift_row(m, row++, meixner(f, inv_a, c), k, a);
    }
    return det_poly(m);
}

Poly wronskian_laguerre(const FPair& P, const Rational& alpha) {
    const std::size_t k = static_cast<std::size_t>(P.k());
    PolyMatrix m(k, k);
    std::size_t row = 0;
    for (int f : P.f1().elems()) {
        fill_derivative_row(m, row++, laguerre(f, alpha), k);
    }
    for (int f : P.f2().elems()) {
        for (std::size_t j = 0; j < k; ++j) {
            m(row, j) = laguerre(f, alpha + static_cast<long>(j)).reflected();
        }
        ++row;
    }
    return det_poly(m);
}

Rational nu(const FSet& F) {
    const long k = F.k();
    Rational r = pow(Rational(2), k * (k + 1) / 2);
    for (int f : F.elems()) {
        r *= factorial(f);
    }
    return r;
}

namespace {

FPair reflected_pair(const FPair& P) {
    return FPair(involution(P.f1()), involution(P.f2()));
}

long reflected_offset(const FPair& P, int empty_max) {
    return static_cast<long>(P.f1().max_or(empty_max)) + P.f2().max_or(empty_max);
}

Poly meixner_lambda_rhs(const FPair& P, const Rational& a, const Rational& c) {
    const Rational shifted_c = -c - reflected_offset(P, kEmptySetMax);
    return casoratian_meixner(reflected_pair(P), a, shifted_c).reflected();
}

Poly laguerre_lambda_rhs(const FPair& P, const Rational& alpha) {
    const Rational shifted_alpha = -alpha - reflected_offset(P, kEmptySetMax) - 2;
    return wronskian_laguerre(reflected_pair(P), shifted_alpha).reflected();
}

Poly hermite_lambda_rhs(const FSet& F) {
    return wronskian_hermite(F) * (pow(Rational(2), F.k() + 1) / nu(F));
}

} // namespace

Poly lambda_charlier(const FSet& F, const Rational& a, const Rational& c0) {
    return antidifference(casoratian_charlier(F, a), c0);
}

Poly lambda_hermite(const FSet& F, const Rational& c0) {
    return antiderivative(hermite_lambda_rhs(F), c0);
}

Poly lambda_meixner(const FPair& P, const Rational& a, const Rational& c, const Rational& c0) {
    require_meixner_a(a);
    return antidifference(meixner_lambda_rhs(P, a, c), c0);
}

Poly lambda_laguerre(const FPair& P, const Rational& alpha, const Rational& c0) {
    return antiderivative(laguerre_lambda_rhs(P, alpha), c0);
}

Poly lambda_custom_charlier(const FSet& F, const Rational& a, const Poly& q, const Rational& c0) {
    return antidifference(q * casoratian_charlier(F, a), c0);
}

Poly default_lambda(const ExcFamily& fam, const Rational& c0) {
    return std::visit(overloaded{
                          [&](const ExcCharlier& f) { return lambda_charlier(f.F, f.a, c0); },
                          [&](const ExcHermite& f) { return lambda_hermite(f.F, c0); },
                          [&](const ExcMeixner& f) { return lambda_meixner(f.P, f.a, f.c, c0); },
                          [&](const ExcLaguerre& f) { return lambda_laguerre(f.P, f.alpha, c0); },
                      },
                      fam);
}

Poly lambda_generator(const ExcFamily& fam) {
    return std::visit(overloaded{
                          [](const ExcCharlier& f) { return casoratian_charlier(f.F, f.a); },
                          [](const ExcHermite& f) { return hermite_lambda_rhs(f.F); },
                          [](const ExcMeixner& f) { return meixner_lambda_rhs(f.P, f.a, f.c); },
                          [](const ExcLaguerre& f) { return laguerre_lambda_rhs(f.P, f.alpha); },
                      },
                      fam);
}

Rational limit_probe_charlier_hermite(const FSet& F, int n, int m, const Rational& x) {
    if (!sigma_contains(F, n)) {
        throw DomainError("limit probe: n = " + std::to_string(n) + " is not in sigma_F");
    }
    if (m <= 0) {
        throw std::invalid_argument("limit probe: m must be positive");
    }
    const Rational mm = m;
    const Rational a = 2 * mm * mm;
    const Rational scaled = pow(mm, -n) * exc_charlier(F, a, n)(2 * mm * x + a);
    const Rational target = exc_hermite(F, n)(x) / (factorial(n - F.u()) * nu(F));
    return scaled - target;
}

Rational limit_probe_meixner_laguerre(const FPair& P, const Rational& alpha, int n, const Rational& a,
                                      const Rational& x) {
    if (!sigma_contains(P, n)) {
        throw DomainError("limit probe: n = " + std::to_string(n) + " is not in sigma");
    }
    require_meixner_a(a);
    const Rational c = alpha + 1;
    const long k = P.k();
    const long exponent = n - (static_cast<long>(P.k1()) + 1) * P.k2();
    const Rational one_minus_a = 1 - a;
    const Rational scaled = pow(a - 1, exponent) * exc_meixner(P, a, c, n)(x / one_minus_a);
    const long sign_exp = k * (k + 1) / 2 + P.f2().sum();
    const Rational target = exc_laguerre(P, alpha, n)(x) * (sign_exp % 2 == 0 ? 1 : -1);
    return scaled - target;
}

SymmetryCheck check_meixner_symmetry(const FPair& P, const Rational& a, const Rational& c, int empty_max) {
    require_meixner_a(a);
    const FPair G = reflected_pair(P);
    auto ua = [&a](const FPair& p) -> Rational {
        const long k2 = p.k2();
        const long k = p.k();
        return pow(a, k2 * (k2 - 1) / 2 - k2 * (k - 1)) * pow(1 - a, static_cast<long>(p.k1()) * k2);
    };
    const long sign_exp = P.u() + P.k1();
    Rational factor = ua(P) / ua(G);
    if (sign_exp % 2 != 0) {
        factor = -factor;
    }
    SymmetryCheck out;
    out.lhs = casoratian_meixner(P, a, c);
    out.rhs = casoratian_meixner(G, a, -c - reflected_offset(P, empty_max)).reflected() * factor;
    out.holds = out.lhs == out.rhs;
    return out;
}

} // namespace xop
