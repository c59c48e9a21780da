#pragma once

#include <optional>
#include <vector>

#include "holomellin/rational.hpp"

namespace holomellin::detail {

using Matrix = std::vector<std::vector<Rational>>;

// In-place reduced row echelon form; returns pivot column per pivot row.
inline std::vector<size_t> rref(Matrix& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        const Rational inv = Rational(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Basis of the nullspace of A (rows x cols), in the canonical RREF order.
inline std::vector<std::vector<Rational>> nullspace(Matrix a, size_t cols) {
    std::vector<size_t> pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

struct AffineSolutions {
    std::vector<Rational> particular;
    std::vector<std::vector<Rational>> homogeneous;
};

// All solutions of A y = b, or nullopt when inconsistent.
inline std::optional<AffineSolutions> solve_affine(Matrix a, const std::vector<Rational>& b,
                                                   size_t cols) {
    Matrix aug = a;
    for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    std::vector<size_t> pivots = rref(aug);
    // Inconsistent when a pivot lands in the augmented column.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;

    AffineSolutions out;
    out.particular.assign(cols, Rational(0));
    for (size_t i = 0; i < pivots.size(); ++i) out.particular[pivots[i]] = aug[i][cols];
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -aug[i][free];
        out.homogeneous.push_back(std::move(v));
    }
    return out;
}

}  // namespace holomellin::detail
