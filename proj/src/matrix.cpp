#include "xop/matrix.hpp"

#include "xop/error.hpp"

#include <string>

namespace xop {

Poly det_poly(const PolyMatrix& m) {
    if (!m.square()) {
        throw DimensionError("det_poly: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return Poly::constant(1);
    }
    PolyMatrix a = m;
    Poly prev = Poly::constant(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && a(piv, k).is_zero()) {
                ++piv;
            }
            if (piv == n) {
                return {};
            }
            a.swap_rows(k, piv);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = exact_div(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
            }
        }
        prev = a(k, k);
    }
    Poly d = a(n - 1, n - 1);
    return negate ? -d : d;
}

Rational det(const RationalMatrix& m) {
    if (!m.square()) {
        throw DimensionError("det: matrix is not square");
    }
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    Rational result = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k) == 0) {
            ++piv;
        }
        if (piv == n) {
            return 0;
        }
        if (piv != k) {
            a.swap_rows(k, piv);
            result = -result;
        }
        result *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) {
                continue;
            }
            const Rational f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) {
                a(i, j) -= f * a(k, j);
            }
        }
    }
    return result;
}

namespace {

// Reduces [A | b] in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& a, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a(piv, col) == 0) {
            ++piv;
        }
        if (piv == a.rows()) {
            continue;
        }
        a.swap_rows(row, piv);
        const Rational inv = 1 / a(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) {
            a(row, j) *= inv;
        }
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col) == 0) {
                continue;
            }
            const Rational f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) {
                a(i, j) -= f * a(row, j);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Rational>> nullspace_from_rref(const RationalMatrix& r, const std::vector<std::size_t>& pivots,
                                                      std::size_t ncols) {
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<Rational> v(ncols);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v[pivots[i]] = -r(i, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

LinearSolution solve_linear_exact(const RationalMatrix& a, std::span<const Rational> b) {
    if (b.size() != a.rows()) {
        throw DimensionError("solve_linear_exact: right-hand side has wrong length");
    }
    const std::size_t n = a.cols();
    RationalMatrix aug(a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            aug(i, j) = a(i, j);
        }
        aug(i, n) = b[i];
    }
    const auto pivots = rref(aug, n);
    LinearSolution sol;
    for (std::size_t i = pivots.size(); i < aug.rows(); ++i) {
        if (aug(i, n) != 0) {
            sol.kind = LinearSolution::Kind::infeasible;
            return sol;
        }
    }
    sol.particular.assign(n, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        sol.particular[pivots[i]] = aug(i, n);
    }
    sol.nullspace = nullspace_from_rref(aug, pivots, n);
    sol.kind = sol.nullspace.empty() ? LinearSolution::Kind::unique : LinearSolution::Kind::family;
    return sol;
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a) {
    RationalMatrix r = a;
    const auto pivots = rref(r, a.cols());
    return nullspace_from_rref(r, pivots, a.cols());
}

} // namespace xop
