#pragma once

#include "xop/exceptional.hpp"

namespace xop {

// Christoffel-Szego determinants for the Krall-side families, divided
// exactly by their denominator products. A nonzero remainder throws
// ConsistencyError.
Poly dual_charlier(const FSet& F, const Rational& a, int n);
Poly dual_meixner(const FPair& P, const Rational& a, const Rational& c, int n);
// Dispatches on a discrete family; throws UnsupportedFamilyError otherwise.
Poly dual_poly(const ExcFamily& fam, int n);

/// Constants of the duality q_m(v) = kappa xi_m zeta_v p_v(m).
struct DualityConstants {
    Rational kappa = 1;
    Rational xi;
    Rational zeta;
};

// m >= 0 is the dual degree, v the point; v must lie in sigma (the zeta
// denominator vanishes exactly off sigma) or DomainError is thrown.
DualityConstants duality_constants_charlier(const FSet& F, const Rational& a, int m, int v);
DualityConstants duality_constants_meixner(const FPair& P, const Rational& a, const Rational& c, int m, int v);
DualityConstants duality_constants(const ExcFamily& fam, int m, int v);

// zeta_v alone; throws DomainError off sigma.
Rational zeta_charlier(const FSet& F, const Rational& a, int v);
Rational zeta_meixner(const FPair& P, const Rational& a, const Rational& c, int v);

// Checks q_m(v) = kappa xi_m zeta_v p_v(m) exactly for m in [0, m_max] and
// v in sigma with u <= v <= v_max. Continuous families throw
// UnsupportedFamilyError.
bool verify_duality(const ExcFamily& fam, int m_max, int v_max);

// prod_{f in F}(x - f - u) a^{x-u} / (x-u)!; DomainError for x < u.
Rational weight_mass_charlier(const FSet& F, const Rational& a, int x);
// Meixner mass at x divided by Gamma(c):
// prod_{F1}(x-f-u) prod_{F2}(x+c+f-u) a^{x-u} (c)_{x-u} / (x-u)!.
Rational weight_mass_meixner_rel(const FPair& P, const Rational& a, const Rational& c, int x);

} // namespace xop
