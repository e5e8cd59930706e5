#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "realdecide/multipoly.hpp"
#include "realdecide/rational.hpp"

namespace realdecide {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

inline QMatrix make_matrix(std::size_t rows, std::size_t cols) {
    return QMatrix(rows, QVector(cols, Rational(0)));
}

// Block matrix with (i,j) block a_ij * B.
inline QMatrix tensor_product(const QMatrix& a, const QMatrix& b) {
    std::size_t am = a.size(), an = am ? a[0].size() : 0;
    std::size_t bm = b.size(), bn = bm ? b[0].size() : 0;
    QMatrix r = make_matrix(am * bm, an * bn);
    for (std::size_t i = 0; i < am; ++i)
        for (std::size_t j = 0; j < an; ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t p = 0; p < bm; ++p)
                for (std::size_t q = 0; q < bn; ++q)
                    r[i * bm + p][j * bn + q] = a[i][j] * b[p][q];
        }
    return r;
}

struct Elimination {
    QMatrix reduced;                  // row echelon form
    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> pivot_rows;  // original row index per pivot
};

// Plain rational Gaussian elimination with partial pivoting by first
// nonzero entry; deterministic (leftmost pivot column, topmost row).
inline Elimination row_reduce(QMatrix m) {
    Elimination out;
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::size_t> row_origin(rows);
    for (std::size_t i = 0; i < rows; ++i) row_origin[i] = i;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        std::swap(row_origin[p], row_origin[r]);
        Rational inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        out.pivot_cols.push_back(c);
        out.pivot_rows.push_back(row_origin[r]);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

inline std::size_t rank(const QMatrix& m) { return row_reduce(m).pivot_cols.size(); }

// Kernel basis in reduced form: one vector per free column, with entry 1
// at its free column and zeros at the other free columns.
inline std::vector<QVector> kernel_basis(const QMatrix& m) {
    std::size_t cols = m.empty() ? 0 : m[0].size();
    Elimination e = row_reduce(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<QVector> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        QVector v(cols, Rational(0));
        v[fc] = 1;
        for (std::size_t k = 0; k < e.pivot_cols.size(); ++k)
            v[e.pivot_cols[k]] = -e.reduced[k][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves a square nonsingular system exactly; nullopt when singular.
inline std::optional<QVector> solve_square(QMatrix a, QVector b) {
    std::size_t n = a.size();
    if (n == 0) return QVector{};
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    Elimination e = row_reduce(std::move(a));
    if (e.pivot_cols.size() != n) return std::nullopt;
    for (std::size_t k = 0; k < n; ++k)
        if (e.pivot_cols[k] != k) return std::nullopt;
    QVector x(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = e.reduced[k][n];
    return x;
}

inline Rational determinant(QMatrix m) {
    std::size_t n = m.size();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Rational inv = 1 / m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

// Fraction-free (Bareiss) determinant over the polynomial ring; every
// division is exact by construction. Pivots on the first structurally
// nonzero entry in each column.
inline MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m, std::size_t arity) {
    std::size_t n = m.size();
    if (n == 0) return MultiPoly::constant(arity, Rational(1));
    MultiPoly prev = MultiPoly::constant(arity, Rational(1));
    int swaps = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k].is_zero()) ++p;
        if (p == n) return MultiPoly::zero(arity);
        if (p != k) {
            std::swap(m[p], m[k]);
            ++swaps;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num.is_zero() ? num : divide_exact(num, prev);
            }
            m[i][k] = MultiPoly::zero(arity);
        }
        prev = m[k][k];
    }
    MultiPoly det = m[n - 1][n - 1];
    return (swaps % 2 == 0) ? det : -det;
}

}  // namespace realdecide
