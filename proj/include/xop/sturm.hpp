#pragma once

#include "xop/poly.hpp"

#include <vector>

namespace xop {

// Canonical Sturm chain p, p', -rem(p, p'), ...
std::vector<Poly> sturm_chain(const Poly& p);

// Number of distinct real roots, by sign variations at -inf and +inf.
int count_real_roots(const Poly& p);

// Number of distinct roots in the half-open interval (lo, hi].
int count_roots_in(const Poly& p, const Rational& lo, const Rational& hi);

} // namespace xop
