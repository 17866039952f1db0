#include "xop/poly.hpp"

#include "xop/error.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace xop {

namespace {
const Rational kZero = 0;
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Poly Poly::constant(const Rational& c) {
    return Poly(std::vector<Rational>{c});
}

Poly Poly::x() {
    return Poly(std::vector<Rational>{Rational(0), Rational(1)});
}

Poly Poly::monomial(const Rational& c, int degree) {
    if (degree < 0) {
        throw std::invalid_argument("monomial: negative degree");
    }
    std::vector<Rational> cs(static_cast<std::size_t>(degree) + 1);
    cs.back() = c;
    return Poly(std::move(cs));
}

Poly Poly::linear(const Rational& c0, const Rational& c1) {
    return Poly(std::vector<Rational>{c0, c1});
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

std::optional<int> Poly::degree() const noexcept {
    if (coeffs_.empty()) {
        return std::nullopt;
    }
    return static_cast<int>(coeffs_.size()) - 1;
}

const Rational& Poly::coeff(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) {
        return kZero;
    }
    return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Poly::leading() const {
    if (coeffs_.empty()) {
        throw std::domain_error("leading coefficient of the zero polynomial");
    }
    return coeffs_.back();
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Poly Poly::compose_affine(const Rational& scale, const Rational& shift) const {
    // Horner in the affine argument.
    const Poly arg = Poly::linear(shift, scale);
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * arg;
        acc += Poly::constant(*it);
    }
    return acc;
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * inner;
        acc += Poly::constant(*it);
    }
    return acc;
}

Poly Poly::derivative(int order) const {
    if (order < 0) {
        throw std::invalid_argument("derivative: negative order");
    }
    if (static_cast<std::size_t>(order) >= coeffs_.size()) {
        return {};
    }
    std::vector<Rational> out(coeffs_.size() - static_cast<std::size_t>(order));
    for (std::size_t i = 0; i < out.size(); ++i) {
        Rational f = 1;
        for (int t = 1; t <= order; ++t) {
            f *= static_cast<long>(i) + t;
        }
        out[i] = coeffs_[i + static_cast<std::size_t>(order)] * f;
    }
    return Poly(std::move(out));
}

Poly Poly::monic() const {
    if (is_zero()) {
        return {};
    }
    return *this / leading();
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
        return {};
    }
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) {
    *this = *this * rhs;
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& q : coeffs_) {
        q *= c;
    }
    return *this;
}

Poly& Poly::operator/=(const Rational& c) {
    if (c == 0) {
        throw std::domain_error("polynomial division by zero scalar");
    }
    for (auto& q : coeffs_) {
        q /= c;
    }
    return *this;
}

Poly operator-(Poly p) {
    for (auto& q : p.coeffs_) {
        q = -q;
    }
    return p;
}

std::string Poly::to_string(char var) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) {
            continue;
        }
        Rational mag = abs(c);
        if (first) {
            if (c < 0) {
                os << "-";
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << xop::to_string(mag);
            continue;
        }
        if (mag != 1) {
            os << xop::to_string(mag) << "*";
        }
        os << var;
        if (i > 1) {
            os << "^" << i;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    const int dd = *den.degree();
    std::vector<Rational> rem = num.coeffs();
    if (static_cast<int>(rem.size()) - 1 < dd) {
        return {Poly{}, num};
    }
    std::vector<Rational> quo(rem.size() - static_cast<std::size_t>(dd));
    const Rational& lead = den.leading();
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        const Rational q = rem[static_cast<std::size_t>(i)] / lead;
        quo[static_cast<std::size_t>(i - dd)] = q;
        if (q == 0) {
            continue;
        }
        for (int t = 0; t <= dd; ++t) {
            rem[static_cast<std::size_t>(i - dd + t)] -= q * den.coeff(t);
        }
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& num, const Poly& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) {
        throw ConsistencyError("non-exact polynomial division");
    }
    return q;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

Poly binomial_poly(const Poly& arg, int j) {
    if (j < 0) {
        return {};
    }
    Poly acc = Poly::constant(1);
    for (int i = 0; i < j; ++i) {
        acc *= arg - Poly::constant(i);
    }
    return acc / factorial(j);
}

} // namespace xop
