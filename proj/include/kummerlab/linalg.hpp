#pragma once

// Exact dense linear algebra over a field K: Gauss-Jordan with a particular
// solution and a kernel basis. Residuals are exactly zero by construction;
// callers re-check anyway where the contract demands it.

#include <optional>
#include <stdexcept>
#include <vector>

#include "kummerlab/errors.hpp"

namespace kummerlab {

template <class K>
struct Matrix {
    size_t rows = 0, cols = 0;
    std::vector<K> a; // row-major

    Matrix() = default;
    Matrix(size_t r, size_t c, const K& fill) : rows(r), cols(c), a(r * c, fill) {}

    K& at(size_t i, size_t j) { return a[i * cols + j]; }
    const K& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

template <class K>
struct LinearSolve {
    size_t rank = 0;
    std::optional<std::vector<K>> particular; // nullopt: inconsistent system
    std::vector<std::vector<K>> kernel;       // basis of {y : M y = 0}
};

// Solves M x = v exactly. Always returns the kernel basis; particular is
// nullopt when the system is inconsistent (callers decide severity).
template <class K>
LinearSolve<K> solve_exact(const Matrix<K>& M, const std::vector<K>& v) {
    if (v.size() != M.rows) throw std::invalid_argument("solve_exact: rhs length mismatch");
    if (M.rows == 0 || M.cols == 0) throw std::invalid_argument("solve_exact: empty matrix");
    const K zero = field_zero(M.a[0]);
    const K one = field_one(zero);

    // augmented row-reduction
    Matrix<K> W = M;
    std::vector<K> rhs = v;
    std::vector<int> pivot_of_col(M.cols, -1);
    size_t row = 0;
    for (size_t col = 0; col < M.cols && row < M.rows; ++col) {
        size_t sel = row;
        while (sel < M.rows && is_zero(W.at(sel, col))) ++sel;
        if (sel == M.rows) continue;
        if (sel != row) {
            for (size_t j = 0; j < M.cols; ++j) std::swap(W.at(sel, j), W.at(row, j));
            std::swap(rhs[sel], rhs[row]);
        }
        K inv = inverse(W.at(row, col));
        for (size_t j = col; j < M.cols; ++j) W.at(row, j) = inv * W.at(row, j);
        rhs[row] = inv * rhs[row];
        for (size_t i = 0; i < M.rows; ++i) {
            if (i == row || is_zero(W.at(i, col))) continue;
            K f = W.at(i, col);
            for (size_t j = col; j < M.cols; ++j) W.at(i, j) = W.at(i, j) - f * W.at(row, j);
            rhs[i] = rhs[i] - f * rhs[row];
        }
        pivot_of_col[col] = static_cast<int>(row);
        ++row;
    }

    LinearSolve<K> out;
    out.rank = row;

    bool consistent = true;
    for (size_t i = row; i < M.rows; ++i)
        if (!is_zero(rhs[i])) { consistent = false; break; }

    if (consistent) {
        std::vector<K> x(M.cols, zero);
        for (size_t col = 0; col < M.cols; ++col)
            if (pivot_of_col[col] >= 0) x[col] = rhs[static_cast<size_t>(pivot_of_col[col])];
        out.particular = std::move(x);
    }

    for (size_t free_col = 0; free_col < M.cols; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        std::vector<K> y(M.cols, zero);
        y[free_col] = one;
        for (size_t col = 0; col < M.cols; ++col)
            if (pivot_of_col[col] >= 0)
                y[col] = -W.at(static_cast<size_t>(pivot_of_col[col]), free_col);
        out.kernel.push_back(std::move(y));
    }
    require_invariant(out.rank + out.kernel.size() == M.cols, "rank-nullity");
    return out;
}

template <class K>
std::vector<K> mat_vec(const Matrix<K>& M, const std::vector<K>& x) {
    if (x.size() != M.cols) throw std::invalid_argument("mat_vec: dimension mismatch");
    K zero = field_zero(x.at(0));
    std::vector<K> out(M.rows, zero);
    for (size_t i = 0; i < M.rows; ++i)
        for (size_t j = 0; j < M.cols; ++j)
            out[i] = out[i] + M.at(i, j) * x[j];
    return out;
}

} // namespace kummerlab
