#pragma once

#include "xop/exceptional.hpp"
#include "xop/rational_fn.hpp"

#include <map>
#include <vector>

namespace xop {

/// Difference operator sum_{j=-w}^{w} h_j(x) Sh_j acting on the dual
/// polynomials, with eigenvalue lambda(m) on q_m.
struct DiffOp {
    int w = 0;
    std::map<int, Poly> h;
    Poly lambda;

    const Poly& at(int j) const;
    int max_degree() const;
};

/// sum_{j=-w}^{w} A_j(n) p_{n+j}(x) = lambda(x) p_n(x), p_m = 0 off sigma.
struct Recurrence {
    int w = 0;
    Poly lambda;
    std::map<int, RationalFn> A;
    ExcFamily family;

    const RationalFn& at(int j) const;
};

// Solves sum_j h_j(n) q_m(n+j) = lambda(m) q_m(n) for m < m_count with
// deg h_j <= deg_bound, then checks three further m. Throws
// DegreeBoundError when infeasible and AmbiguityError when the solution is
// not unique after the held-out equations are added.
DiffOp recover_operator(const ExcFamily& fam, const Poly& lambda, int deg_bound, int m_count);
// deg_bound = deg lambda, escalated once to twice that; m_count sized to
// the unknown count.
DiffOp recover_operator(const ExcFamily& fam, const Poly& lambda);

// A_j(n) = h_j(n) zeta_{n+j} / zeta_n as reduced rational functions.
Recurrence recurrence_from_operator(const DiffOp& op, const ExcFamily& fam);

// Coefficients A_{n,j} fixed by matching powers of x at a single n, keyed
// by j. Only j with p_{n+j} != 0 appear; empty when p_n = 0. Throws
// NoRecurrenceError when lambda p_n is outside the span.
std::map<int, Rational> solve_at(FamilySequence& p, const Poly& lambda, int n);

struct FitOptions {
    int n_lo = 0;
    // Negative selects n_lo + 2 (w + k + 3) + 5.
    int n_hi = -1;
    // Negative selects w + k + 2 for both bounds.
    int dnum = -1;
    int dden = -1;
};

// Per-n solves over [n_lo, n_hi], then rational interpolation of each
// j-slice using the samples with n and n + j both in sigma. The assembled
// relation is checked on three n past the window.
Recurrence fit_recurrence(const ExcFamily& fam, const Poly& lambda, const FitOptions& opts = {});

// sum_j A_j(n) p_{n+j} - lambda p_n. Throws DomainError where a
// denominator vanishes.
Poly residual(const Recurrence& rec, FamilySequence& p, int n);
Poly residual(const Recurrence& rec, int n);

struct MinimalOrderResult {
    int r_min = 0;
    Poly lambda;
    Recurrence rec;
    // Nullity of the lambda constraint system for each r tried, from r = 1.
    std::vector<int> nullity;
};

// Smallest r <= r_max admitting lambda of exact degree r, zero constant
// term, with lambda p_n in span{p_{n+j} : |j| <= r} for all n in the
// window. lambda is scaled to match default_lambda's leading coefficient
// when the degrees agree, else made monic. Throws NotFoundError.
MinimalOrderResult minimal_order_search(const ExcFamily& fam, int r_max, int n_lo, int n_hi);

} // namespace xop
