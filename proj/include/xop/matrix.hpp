#pragma once

#include "xop/poly.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace xop {

/// Row-major rectangular grid.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t c = 0; c < cols_; ++c) {
            std::swap((*this)(a, c), (*this)(b, c));
        }
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> init)
    : rows_(init.size()), cols_(init.size() == 0 ? 0 : init.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
        if (row.size() != cols_) {
            throw std::invalid_argument("ragged matrix initializer");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

using PolyMatrix = Matrix<Poly>;
using RationalMatrix = Matrix<Rational>;

// Fraction-free (Bareiss) determinant over Q[x]. Every division is exact.
// The empty matrix has determinant 1. Throws DimensionError if not square.
Poly det_poly(const PolyMatrix& m);

// Bareiss determinant of a rational matrix.
Rational det(const RationalMatrix& m);

struct LinearSolution {
    enum class Kind { unique, family, infeasible };

    Kind kind = Kind::infeasible;
    // Meaningful unless infeasible; free variables set to zero.
    std::vector<Rational> particular;
    // Basis of the null space of A (empty when unique or infeasible).
    std::vector<std::vector<Rational>> nullspace;
};

// Exact Gauss-Jordan solve of A x = b.
LinearSolution solve_linear_exact(const RationalMatrix& a, std::span<const Rational> b);

// Basis of {x : A x = 0}, one vector per free column of the reduced echelon form.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a);

} // namespace xop
