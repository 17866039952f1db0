#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's determinant, classical-family or calculus code.

#include "xop/matrix.hpp"
#include "xop/poly.hpp"
#include "xop/rational.hpp"

#include <functional>
#include <vector>

namespace oracle {

using xop::Poly;
using xop::Rational;

// Laplace expansion along the first row.
template <class T>
T cofactor_det(const std::vector<std::vector<T>>& m, const T& one) {
    const std::size_t k = m.size();
    if (k == 0) {
        return one;
    }
    if (k == 1) {
        return m[0][0];
    }
    T acc = m[0][0] * Rational(0);
    for (std::size_t col = 0; col < k; ++col) {
        std::vector<std::vector<T>> minor;
        for (std::size_t r = 1; r < k; ++r) {
            std::vector<T> row;
            for (std::size_t c = 0; c < k; ++c) {
                if (c != col) {
                    row.push_back(m[r][c]);
                }
            }
            minor.push_back(std::move(row));
        }
        T term = m[0][col] * cofactor_det(minor, one);
        if (col % 2 == 0) {
            acc = acc + term;
        } else {
            acc = acc - term;
        }
    }
    return acc;
}

inline Rational det_rational(const std::vector<std::vector<Rational>>& m) { return cofactor_det(m, Rational(1)); }

inline Poly det_poly(const std::vector<std::vector<Poly>>& m) { return cofactor_det(m, Poly::constant(1)); }

// Generalized binomial C(top, j) for rational top.
inline Rational binom(const Rational& top, int j) {
    Rational r = 1;
    for (int i = 0; i < j; ++i) {
        r *= (top - i);
        r /= (i + 1);
    }
    return r;
}

inline Rational fact(int n) {
    Rational r = 1;
    for (int i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

inline Rational ipow(const Rational& b, int e) {
    Rational r = 1;
    const Rational base = e >= 0 ? b : Rational(1 / b);
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) {
        r *= base;
    }
    return r;
}

// Defining finite sums, evaluated pointwise.
inline Rational charlier_at(int n, const Rational& a, const Rational& x) {
    if (n < 0) {
        return 0;
    }
    Rational s = 0;
    for (int j = 0; j <= n; ++j) {
        s += ipow(-a, n - j) * binom(n, j) * binom(x, j) * fact(j);
    }
    return s / fact(n);
}

inline Rational meixner_at(int n, const Rational& a, const Rational& c, const Rational& x) {
    if (n < 0) {
        return 0;
    }
    Rational s = 0;
    for (int j = 0; j <= n; ++j) {
        s += ipow(a, -j) * binom(x, j) * binom(-x - c, n - j);
    }
    return s * ipow(a / (1 - a), n);
}

// Three-term recurrences, a route distinct from the defining sums.
inline Poly hermite_rec(int n) {
    Poly prev;
    Poly cur = Poly::constant(1);
    for (int m = 0; m < n; ++m) {
        Poly next = Poly::x() * cur * Rational(2) - prev * Rational(2 * m);
        prev = cur;
        cur = next;
    }
    return n < 0 ? Poly() : cur;
}

inline Poly laguerre_rec(int n, const Rational& alpha) {
    if (n < 0) {
        return Poly();
    }
    Poly prev;
    Poly cur = Poly::constant(1);
    for (int m = 0; m < n; ++m) {
        Poly next = (Poly::linear(Rational(2 * m + 1) + alpha, -1) * cur - prev * Rational(m + alpha)) / Rational(m + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

// sum_{t=1}^{x} f(t) for integer x >= 0.
inline Rational running_sum(const std::function<Rational(long)>& f, long x) {
    Rational s = 0;
    for (long t = 1; t <= x; ++t) {
        s += f(t);
    }
    return s;
}

} // namespace oracle
