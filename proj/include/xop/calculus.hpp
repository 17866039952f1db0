#pragma once

#include "xop/poly.hpp"

namespace xop {

// lambda with lambda(x) - lambda(x-1) = p(x) and constant coefficient c0.
Poly antidifference(const Poly& p, const Rational& c0);

// lambda with lambda' = p and constant coefficient c0.
Poly antiderivative(const Poly& p, const Rational& c0);

// p(x) - p(x-1)
Poly backward_difference(const Poly& p);

} // namespace xop
