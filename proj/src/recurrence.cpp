#include "xop/recurrence.hpp"

#include "xop/duality.hpp"
#include "xop/error.hpp"
#include "xop/interpolate.hpp"
#include "xop/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace xop {

namespace {

const Poly kZeroPoly;
const RationalFn kZeroFn{Poly()};

int lambda_degree(const Poly& lambda) {
    const auto d = lambda.degree();
    if (!d || *d < 1) {
        throw ParameterError("lambda must have degree at least 1");
    }
    return *d;
}

using Row = std::vector<Rational>;

// Equations in the h_j coefficients from sum_j h_j(n) q(n+j) = lambda(m) q(n).
void append_operator_equations(const ExcFamily& fam, const Poly& lambda, int r, int d, int m, std::vector<Row>& rows,
                               std::vector<Rational>& rhs) {
    const Poly q = dual_poly(fam, m);
    if (q.is_zero()) {
        return;
    }
    std::vector<Poly> shifted;
    for (int j = -r; j <= r; ++j) {
        shifted.push_back(q.shifted(j));
    }
    const Rational ev = lambda(m);
    const std::size_t cols = static_cast<std::size_t>((2 * r + 1) * (d + 1));
    const int top = d + *q.degree();
    for (int e = 0; e <= top; ++e) {
        Row row(cols);
        bool any = false;
        for (int j = -r; j <= r; ++j) {
            for (int i = 0; i <= d && i <= e; ++i) {
                const Rational& v = shifted[static_cast<std::size_t>(j + r)].coeff(e - i);
                if (v != 0) {
                    row[static_cast<std::size_t>((j + r) * (d + 1) + i)] = v;
                    any = true;
                }
            }
        }
        Rational b = ev * q.coeff(e);
        if (any || b != 0) {
            rows.push_back(std::move(row));
            rhs.push_back(std::move(b));
        }
    }
}

LinearSolution solve_rows(const std::vector<Row>& rows, const std::vector<Rational>& rhs, std::size_t cols) {
    RationalMatrix a(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t c = 0; c < cols; ++c) {
            a(i, c) = rows[i][c];
        }
    }
    return solve_linear_exact(a, rhs);
}

bool satisfies(const std::vector<Row>& rows, const std::vector<Rational>& rhs, const std::vector<Rational>& x) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Rational acc = 0;
        for (std::size_t c = 0; c < x.size(); ++c) {
            if (rows[i][c] != 0) {
                acc += rows[i][c] * x[c];
            }
        }
        if (acc != rhs[i]) {
            return false;
        }
    }
    return true;
}

DiffOp assemble_operator(const std::vector<Rational>& x, const Poly& lambda, int r, int d) {
    DiffOp op;
    op.w = r;
    op.lambda = lambda;
    for (int j = -r; j <= r; ++j) {
        const auto first = x.begin() + (j + r) * (d + 1);
        op.h[j] = Poly(std::vector<Rational>(first, first + d + 1));
    }
    return op;
}

// Gamma(base + j) / Gamma(base) for a linear base in n.
RationalFn gamma_ratio(const Poly& base, int j) {
    Poly acc = Poly::constant(1);
    if (j >= 0) {
        for (int i = 0; i < j; ++i) {
            acc *= base + Poly::constant(i);
        }
        return RationalFn(acc);
    }
    for (int i = 1; i <= -j; ++i) {
        acc *= base - Poly::constant(i);
    }
    return RationalFn(Poly::constant(1), acc);
}

RationalFn zeta_ratio(const ExcFamily& fam, int j) {
    const Poly n = Poly::x();
    if (const auto* ch = std::get_if<ExcCharlier>(&fam)) {
        const long u = ch->F.u();
        RationalFn r(Poly::constant(pow(-ch->a, -j)));
        r = r * gamma_ratio(n + Poly::constant(1 - u), j);
        for (int f : ch->F.elems()) {
            r = r * RationalFn(n - Poly::constant(f + u), n + Poly::constant(j - f - u));
        }
        return r;
    }
    if (const auto* me = std::get_if<ExcMeixner>(&fam)) {
        const long u = me->P.u();
        const Rational base = (me->a - 1) / me->a;
        RationalFn r(Poly::constant(pow(base, j)));
        r = r * gamma_ratio(n + Poly::constant(1 - u), j);
        r = r / gamma_ratio(n + Poly::constant(me->c - u), j);
        for (int f : me->P.f1().elems()) {
            r = r * RationalFn(n - Poly::constant(f + u), n + Poly::constant(j - f - u));
        }
        for (int f : me->P.f2().elems()) {
            const Rational s = me->c + f - u;
            r = r * RationalFn(n + Poly::constant(s), n + Poly::constant(s + j));
        }
        return r;
    }
    throw UnsupportedFamilyError("zeta ratios exist only for the discrete families");
}

// Removes the components of poly along the available p_{n+j}, top degree
// first; what is left is the obstruction to span membership.
Poly reduce_against(Poly poly, FamilySequence& p, int n, int r, std::map<int, Rational>* coeffs) {
    for (int j = r; j >= -r; --j) {
        if (n + j < 0) {
            continue;
        }
        const Poly& basis = p(n + j);
        if (basis.is_zero()) {
            continue;
        }
        const Rational c = poly.coeff(n + j) / basis.leading();
        if (coeffs) {
            (*coeffs)[j] = c;
        }
        if (c != 0) {
            poly -= basis * c;
        }
    }
    return poly;
}

std::string describe_samples(const std::vector<Sample>& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i) {
        os << (i ? ", " : "") << s[i].n << ":" << to_string(s[i].value);
    }
    return os.str();
}

} // namespace

const Poly& DiffOp::at(int j) const {
    const auto it = h.find(j);
    return it == h.end() ? kZeroPoly : it->second;
}

int DiffOp::max_degree() const {
    int d = -1;
    for (const auto& [j, p] : h) {
        if (auto pd = p.degree()) {
            d = std::max(d, *pd);
        }
    }
    return d;
}

const RationalFn& Recurrence::at(int j) const {
    const auto it = A.find(j);
    return it == A.end() ? kZeroFn : it->second;
}

DiffOp recover_operator(const ExcFamily& fam, const Poly& lambda, int deg_bound, int m_count) {
    if (!is_discrete(fam)) {
        throw UnsupportedFamilyError("operator recovery needs dual polynomials (discrete families only)");
    }
    validate(fam);
    const int r = lambda_degree(lambda);
    if (deg_bound < 0 || m_count < 1) {
        throw ParameterError("recover_operator: need deg_bound >= 0 and m_count >= 1");
    }
    const std::size_t cols = static_cast<std::size_t>((2 * r + 1) * (deg_bound + 1));
    std::vector<Row> rows;
    std::vector<Rational> rhs;
    for (int m = 0; m < m_count; ++m) {
        append_operator_equations(fam, lambda, r, deg_bound, m, rows, rhs);
    }
    std::vector<Row> held_rows;
    std::vector<Rational> held_rhs;
    for (int m = m_count; m < m_count + 3; ++m) {
        append_operator_equations(fam, lambda, r, deg_bound, m, held_rows, held_rhs);
    }
    const std::string where = " (deg h_j <= " + std::to_string(deg_bound) + ")";
    LinearSolution sol = solve_rows(rows, rhs, cols);
    if (sol.kind == LinearSolution::Kind::infeasible) {
        throw DegreeBoundError("no difference operator with this eigenvalue" + where);
    }
    if (sol.kind == LinearSolution::Kind::unique) {
        if (!satisfies(held_rows, held_rhs, sol.particular)) {
            throw DegreeBoundError("recovered operator fails the held-out dual polynomials" + where);
        }
        return assemble_operator(sol.particular, lambda, r, deg_bound);
    }
    rows.insert(rows.end(), held_rows.begin(), held_rows.end());
    rhs.insert(rhs.end(), held_rhs.begin(), held_rhs.end());
    sol = solve_rows(rows, rhs, cols);
    if (sol.kind == LinearSolution::Kind::infeasible) {
        throw DegreeBoundError("no difference operator with this eigenvalue" + where);
    }
    if (sol.kind == LinearSolution::Kind::family) {
        throw AmbiguityError("operator not determined by the dual polynomials used" + where, sol.nullspace.size());
    }
    return assemble_operator(sol.particular, lambda, r, deg_bound);
}

DiffOp recover_operator(const ExcFamily& fam, const Poly& lambda) {
    const int r = lambda_degree(lambda);
    for (int d : {r, 2 * r}) {
        const int unknowns = (2 * r + 1) * (d + 1);
        int m = 1;
        while (m * (d + 1) + m * (m - 1) / 2 < unknowns) {
            ++m;
        }
        m += 2;
        for (int attempt = 0; attempt < 2; ++attempt, m *= 2) {
            try {
                return recover_operator(fam, lambda, d, m);
            } catch (const AmbiguityError&) {
                if (attempt == 1) {
                    throw;
                }
            } catch (const DegreeBoundError&) {
                if (d == 2 * r) {
                    throw;
                }
                break;
            }
        }
    }
    throw DegreeBoundError("no difference operator found");
}

Recurrence recurrence_from_operator(const DiffOp& op, const ExcFamily& fam) {
    Recurrence rec;
    rec.w = op.w;
    rec.lambda = op.lambda;
    rec.family = fam;
    for (int j = -op.w; j <= op.w; ++j) {
        rec.A[j] = RationalFn(op.at(j)) * zeta_ratio(fam, j);
    }
    return rec;
}

std::map<int, Rational> solve_at(FamilySequence& p, const Poly& lambda, int n) {
    std::map<int, Rational> coeffs;
    if (n < 0 || p(n).is_zero()) {
        return coeffs;
    }
    const int r = lambda_degree(lambda);
    const Poly rest = reduce_against(lambda * p(n), p, n, r, &coeffs);
    if (!rest.is_zero()) {
        throw NoRecurrenceError("lambda * p_" + std::to_string(n) + " is not in span{p_{n+j} : |j| <= " +
                                std::to_string(r) + "}");
    }
    return coeffs;
}

Recurrence fit_recurrence(const ExcFamily& fam, const Poly& lambda, const FitOptions& opts) {
    validate(fam);
    const int r = lambda_degree(lambda);
    const int k = family_k(fam);
    const int n_lo = std::max(opts.n_lo, 0);
    const int n_hi = opts.n_hi < 0 ? n_lo + 2 * (r + k + 3) + 5 : opts.n_hi;
    if (n_hi < n_lo) {
        throw ParameterError("fit_recurrence: empty n window");
    }
    const int dnum = opts.dnum < 0 ? r + k + 2 : opts.dnum;
    const int dden = opts.dden < 0 ? r + k + 2 : opts.dden;

    FamilySequence p(fam);
    std::map<int, std::vector<Sample>> slices;
    for (int n = n_lo; n <= n_hi; ++n) {
        for (const auto& [j, v] : solve_at(p, lambda, n)) {
            slices[j].push_back({n, v});
        }
    }

    Recurrence rec;
    rec.w = r;
    rec.lambda = lambda;
    rec.family = fam;
    for (int j = -r; j <= r; ++j) {
        const auto& s = slices[j];
        if (s.empty()) {
            rec.A[j] = RationalFn(Poly());
            continue;
        }
        const int room = std::max(0, static_cast<int>(s.size()) - 2);
        std::optional<RationalFn> fn;
        for (int scale : {1, 2}) {
            int dn = dnum * scale;
            int dd = dden * scale;
            if (dn + dd > room) {
                dd = std::min(dd, room / 2);
                dn = std::min(dn, room - dd);
            }
            try {
                fn = rational_interpolate(s, dn, dd);
                break;
            } catch (const DegreeBoundError&) {
            }
        }
        if (!fn) {
            throw DegreeBoundError("A_" + std::to_string(j) + " could not be interpolated; samples " +
                                   describe_samples(s));
        }
        rec.A[j] = *fn;
    }

    for (int n = n_hi + 1; n <= n_hi + 3; ++n) {
        for (const auto& [j, v] : solve_at(p, lambda, n)) {
            if (rec.at(j)(n) != v) {
                throw ConsistencyError("fitted A_" + std::to_string(j) + " disagrees with the direct solve at n = " +
                                       std::to_string(n));
            }
        }
    }
    return rec;
}

Poly residual(const Recurrence& rec, FamilySequence& p, int n) {
    Poly acc = -(rec.lambda * p(n));
    for (int j = -rec.w; j <= rec.w; ++j) {
        if (n + j < 0) {
            continue;
        }
        const Poly& pj = p(n + j);
        if (pj.is_zero()) {
            continue;
        }
        acc += pj * rec.at(j)(n);
    }
    return acc;
}

Poly residual(const Recurrence& rec, int n) {
    FamilySequence p(rec.family);
    return residual(rec, p, n);
}

MinimalOrderResult minimal_order_search(const ExcFamily& fam, int r_max, int n_lo, int n_hi) {
    validate(fam);
    if (r_max < 1) {
        throw ParameterError("minimal_order_search: r_max must be at least 1");
    }
    n_lo = std::max(n_lo, 0);
    if (n_hi < n_lo) {
        throw ParameterError("minimal_order_search: empty n window");
    }
    FamilySequence p(fam);
    MinimalOrderResult out;
    for (int r = 1; r <= r_max; ++r) {
        std::vector<Row> rows;
        for (int n = n_lo; n <= n_hi; ++n) {
            if (p(n).is_zero()) {
                continue;
            }
            std::vector<Poly> rests;
            int top = -1;
            for (int i = 1; i <= r; ++i) {
                rests.push_back(reduce_against(Poly::monomial(1, i) * p(n), p, n, r, nullptr));
                if (auto d = rests.back().degree()) {
                    top = std::max(top, *d);
                }
            }
            for (int e = 0; e <= top; ++e) {
                Row row(static_cast<std::size_t>(r));
                bool any = false;
                for (int i = 0; i < r; ++i) {
                    row[static_cast<std::size_t>(i)] = rests[static_cast<std::size_t>(i)].coeff(e);
                    any = any || row[static_cast<std::size_t>(i)] != 0;
                }
                if (any) {
                    rows.push_back(std::move(row));
                }
            }
        }
        RationalMatrix a(rows.size(), static_cast<std::size_t>(r));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t c = 0; c < static_cast<std::size_t>(r); ++c) {
                a(i, c) = rows[i][c];
            }
        }
        const auto basis = rows.empty() ? std::vector<std::vector<Rational>>{} : nullspace(a);
        std::optional<std::vector<Rational>> pick;
        if (rows.empty()) {
            std::vector<Rational> e(static_cast<std::size_t>(r));
            e.back() = 1;
            pick = e;
            out.nullity.push_back(r);
        } else {
            out.nullity.push_back(static_cast<int>(basis.size()));
            for (const auto& v : basis) {
                if (v.back() != 0) {
                    pick = v;
                    break;
                }
            }
        }
        if (!pick) {
            continue;
        }
        std::vector<Rational> coeffs{Rational(0)};
        coeffs.insert(coeffs.end(), pick->begin(), pick->end());
        Poly lambda(std::move(coeffs));
        const Poly reference = default_lambda(fam);
        if (reference.degree() == lambda.degree()) {
            lambda *= Rational(reference.leading() / lambda.leading());
        } else {
            lambda = lambda.monic();
        }
        out.r_min = r;
        out.lambda = lambda;
        FitOptions opts;
        opts.n_lo = n_lo;
        out.rec = fit_recurrence(fam, lambda, opts);
        return out;
    }
    std::ostringstream os;
    os << "no recurrence of order <= " << 2 * r_max + 1 << " on n in [" << n_lo << ", " << n_hi
       << "]; nullity per r:";
    for (int v : out.nullity) {
        os << ' ' << v;
    }
    throw NotFoundError(os.str());
}

} // namespace xop
