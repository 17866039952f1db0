#pragma once

#include "xop/indexsets.hpp"
#include "xop/poly.hpp"

#include <map>
#include <string>
#include <variant>

namespace xop {

struct ExcCharlier {
    Rational a;
    FSet F;
};
struct ExcHermite {
    FSet F;
};
struct ExcMeixner {
    Rational a;
    Rational c;
    FPair P;
};
struct ExcLaguerre {
    Rational alpha;
    FPair P;
};

// Family, parameters and index set(s). Admissibility is not required.
using ExcFamily = std::variant<ExcCharlier, ExcHermite, ExcMeixner, ExcLaguerre>;

void validate(const ExcFamily& fam);
bool is_discrete(const ExcFamily& fam);
std::string family_name(const ExcFamily& fam);
// One-line description with parameters, e.g. "charlier a=2 F={1,2}".
std::string describe(const ExcFamily& fam);
long family_u(const ExcFamily& fam);
long family_w(const ExcFamily& fam);
int family_k(const ExcFamily& fam);
bool in_sigma(const ExcFamily& fam, long n);

// The value used for max(S) of an empty S in the reflected-parameter
// Casoratians/Wronskians that define the Meixner and Laguerre lambdas.
inline constexpr int kEmptySetMax = -1;

// Determinant definitions. Each has degree n for n in sigma and vanishes
// identically otherwise. Rows: the n-row first, then one row per element of
// F (resp. F1, then F2) in increasing order.
Poly exc_charlier(const FSet& F, const Rational& a, int n);
Poly exc_hermite(const FSet& F, int n);
Poly exc_meixner(const FPair& P, const Rational& a, const Rational& c, int n);
Poly exc_laguerre(const FPair& P, const Rational& alpha, int n);
Poly exceptional_poly(const ExcFamily& fam, int n);

/// Memoized p_n for one family. Not thread-safe; keep one per computation.
class FamilySequence {
public:
    explicit FamilySequence(ExcFamily fam);
    const ExcFamily& family() const noexcept { return fam_; }
    // Zero polynomial for n < 0.
    const Poly& operator()(int n);

private:
    ExcFamily fam_;
    std::map<int, Poly> cache_;
};

// Casoratian / Wronskian determinants; each has degree w - 1.
Poly casoratian_charlier(const FSet& F, const Rational& a);
Poly wronskian_hermite(const FSet& F);
Poly casoratian_meixner(const FPair& P, const Rational& a, const Rational& c);
Poly wronskian_laguerre(const FPair& P, const Rational& alpha);

// 2^{C(k+1,2)} prod_{f in F} f!
Rational nu(const FSet& F);

// Eigenvalue polynomials of degree w, fixed by their constant coefficient.
Poly lambda_charlier(const FSet& F, const Rational& a, const Rational& c0 = 0);
Poly lambda_hermite(const FSet& F, const Rational& c0 = 0);
Poly lambda_meixner(const FPair& P, const Rational& a, const Rational& c, const Rational& c0 = 0);
Poly lambda_laguerre(const FPair& P, const Rational& alpha, const Rational& c0 = 0);
// Antidifference of q * Omega_F^a; yields the longer, non-minimal recurrences.
Poly lambda_custom_charlier(const FSet& F, const Rational& a, const Poly& q, const Rational& c0 = 0);
// lambda_* dispatched on the family.
Poly default_lambda(const ExcFamily& fam, const Rational& c0 = 0);

// Right-hand side each lambda is built from: its backward difference
// (discrete families) or derivative (continuous families).
Poly lambda_generator(const ExcFamily& fam);

/// Exact gap between the scaled exceptional Charlier polynomial at
/// a = 2 m^2 and its exceptional Hermite limit:
///   m^{-n} c_n^{a;F}(2 m x + a) - H_n^F(x) / ((n - u_F)! nu_F).
/// With a = 2 m^2 both sqrt(2a) = 2m and sqrt(2/a) = 1/m are rational.
/// Throws DomainError when n is not in sigma_F.
Rational limit_probe_charlier_hermite(const FSet& F, int n, int m, const Rational& x);

/// Exact gap (a-1)^{n-(k1+1)k2} m_n^{a,c;P}(x/(1-a)) - s L_n^{alpha;P}(x)
/// with c = alpha + 1 and s = (-1)^{C(k+1,2) + sum F2}.
Rational limit_probe_meixner_laguerre(const FPair& P, const Rational& alpha, int n, const Rational& a,
                                      const Rational& x);

struct SymmetryCheck {
    bool holds = false;
    Poly lhs;
    Poly rhs;
};

// Omega_P^{a,c}(x) against
// (-1)^{u+k1} u_a(P)/u_a(G) Omega_G^{a, -c - M(F1) - M(F2)}(-x),
// G = (I(F1), I(F2)), u_a(P) = a^{C(k2,2) - k2(k-1)} (1-a)^{k1 k2},
// with M(S) = max S and M(empty) = empty_max. Monitored, not asserted.
SymmetryCheck check_meixner_symmetry(const FPair& P, const Rational& a, const Rational& c,
                                     int empty_max = kEmptySetMax);

} // namespace xop
