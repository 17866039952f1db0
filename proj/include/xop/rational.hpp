#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace xop {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// "p/q", or "p" when q == 1. The sign sits on the numerator.
std::string to_string(const Rational& q);

// Inverse of to_string. Also accepts a leading '+' and surrounding blanks.
// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// q^e for any integer e; throws std::domain_error for 0^e with e < 0.
Rational pow(const Rational& q, long e);

Rational factorial(long n);
Rational binomial(long n, long k);

// Rising factorial z(z+1)...(z+m-1); (z)_0 = 1. Requires m >= 0.
Rational pochhammer(const Rational& z, long m);

// Gamma(z+m)/Gamma(z) for any integer m. For m < 0 this is
// 1/((z+m)(z+m+1)...(z-1)); throws std::domain_error on a pole.
Rational pochhammer_signed(const Rational& z, long m);

int sign(const Rational& q);
bool is_integer(const Rational& q);

} // namespace xop
