#include "xop/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace xop {

Rational make_rational(long num, long den) {
    if (den == 0) {
        throw std::invalid_argument("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            return false;
        }
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(negative ? Integer(-n) : n, d);
    q.canonicalize();
    return q;
}

Rational pow(const Rational& q, long e) {
    if (e < 0) {
        if (q == 0) {
            throw std::domain_error("0 raised to a negative power");
        }
        const Rational inv = 1 / q;
        return pow(inv, -e);
    }
    Integer num;
    Integer den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(num, den);
}

Rational factorial(long n) {
    if (n < 0) {
        throw std::domain_error("factorial of a negative integer");
    }
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r);
}

Rational binomial(long n, long k) {
    if (k < 0) {
        return 0;
    }
    Integer r;
    if (n >= 0) {
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    } else {
        // C(n, k) = (-1)^k C(k - n - 1, k)
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
        if (k % 2 != 0) {
            r = -r;
        }
    }
    return Rational(r);
}

Rational pochhammer(const Rational& z, long m) {
    if (m < 0) {
        throw std::domain_error("pochhammer: negative length");
    }
    Rational r = 1;
    for (long i = 0; i < m; ++i) {
        r *= z + i;
    }
    return r;
}

Rational pochhammer_signed(const Rational& z, long m) {
    if (m >= 0) {
        return pochhammer(z, m);
    }
    Rational d = 1;
    for (long i = m; i < 0; ++i) {
        d *= z + i;
    }
    if (d == 0) {
        throw std::domain_error("pochhammer_signed: pole");
    }
    return 1 / d;
}

int sign(const Rational& q) {
    return sgn(q);
}

bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

} // namespace xop
