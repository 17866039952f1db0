#pragma once

#include "xop/poly.hpp"

#include <variant>

namespace xop {

struct CharlierParams {
    Rational a;
};
struct MeixnerParams {
    Rational a;
    Rational c;
};
struct HermiteParams {};
struct LaguerreParams {
    Rational alpha;
};

using FamilyParams = std::variant<CharlierParams, MeixnerParams, HermiteParams, LaguerreParams>;

// Throws ParameterError when the parameters violate the family's constraints:
// Charlier a != 0; Meixner a not in {0, 1} and c not a nonpositive integer.
void validate(const FamilyParams& params);

void require_charlier_a(const Rational& a);
void require_meixner_a(const Rational& a);
void require_meixner_c(const Rational& c);

// All four families return the zero polynomial for n < 0.

// c_n^a(x) = (1/n!) sum_j (-a)^(n-j) C(n,j) C(x,j) j!
Poly charlier(int n, const Rational& a);
// m_n^{a,c}(x) = a^n/(1-a)^n sum_j a^(-j) C(x,j) C(-x-c, n-j)
Poly meixner(int n, const Rational& a, const Rational& c);
// Physicists' Hermite polynomial, leading coefficient 2^n.
Poly hermite(int n);
// L_n^alpha(x) = sum_j (-x)^j/j! C(n+alpha, n-j)
Poly laguerre(int n, const Rational& alpha);

// -x p(x-1) + (x+a) p(x) - a p(x+1); c_n^a is an eigenfunction with eigenvalue n.
Poly charlier_op_apply(const Rational& a, const Poly& p);
// [x p(x-1) - ((1+a)x + ac) p(x) + a(x+c) p(x+1)] / (a-1)
Poly meixner_op_apply(const Rational& a, const Rational& c, const Poly& p);

} // namespace xop
