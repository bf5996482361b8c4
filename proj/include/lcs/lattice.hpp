#pragma once

#include "lcs/rational.hpp"

#include <utility>

namespace lcs {

using ZVec = std::vector<Integer>;
using ZMatrix = std::vector<ZVec>;  // row-major

namespace detail {

// Column operations on m (rows x cols) tracked in u (cols x cols) until m is in
// column echelon form. Returns the number of nonzero columns; they come first.
inline std::size_t column_echelon(ZMatrix& m, ZMatrix& u, std::size_t cols) {
    u.assign(cols, ZVec(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;
    auto col_swap = [&](std::size_t a, std::size_t b) {
        for (auto& row : m) std::swap(row[a], row[b]);
        for (auto& row : u) std::swap(row[a], row[b]);
    };
    // col a -= q * col b
    auto col_sub = [&](std::size_t a, std::size_t b, const Integer& q) {
        for (auto& row : m) row[a] -= q * row[b];
        for (auto& row : u) row[a] -= q * row[b];
    };
    std::size_t piv = 0;
    for (std::size_t r = 0; r < m.size() && piv < cols; ++r) {
        for (;;) {
            std::size_t best = cols;
            for (std::size_t j = piv; j < cols; ++j)
                if (m[r][j] != 0 && (best == cols || abs(m[r][j]) < abs(m[r][best]))) best = j;
            if (best == cols) break;
            if (best != piv) col_swap(best, piv);
            bool done = true;
            for (std::size_t j = piv + 1; j < cols; ++j) {
                if (m[r][j] == 0) continue;
                Integer q = floor_div(m[r][j], m[r][piv]);
                col_sub(j, piv, q);
                if (m[r][j] != 0) done = false;
            }
            if (done) break;
        }
        if (m[r][piv] != 0) {
            if (m[r][piv] < 0) {
                for (auto& row : m) row[piv] = -row[piv];
                for (auto& row : u) row[piv] = -row[piv];
            }
            ++piv;
        }
    }
    return piv;
}

}  // namespace detail

// Z-basis of {x in Z^cols : m x = 0}; saturated.
inline ZMatrix integer_kernel(ZMatrix m, std::size_t cols) {
    ZMatrix u;
    std::size_t rank = detail::column_echelon(m, u, cols);
    ZMatrix out;
    for (std::size_t j = rank; j < cols; ++j) {
        ZVec v(cols);
        for (std::size_t i = 0; i < cols; ++i) v[i] = u[i][j];
        out.push_back(std::move(v));
    }
    return out;
}

// Canonical (Hermite) basis of the lattice spanned by the given vectors of length dim.
inline ZMatrix lattice_basis(const ZMatrix& gens, std::size_t dim) {
    // rows of h = basis vectors; row-reduce with unimodular row ops
    ZMatrix h = gens;
    std::size_t r = 0;
    for (std::size_t c = 0; c < dim && r < h.size(); ++c) {
        for (;;) {
            std::size_t best = h.size();
            for (std::size_t i = r; i < h.size(); ++i)
                if (h[i][c] != 0 && (best == h.size() || abs(h[i][c]) < abs(h[best][c]))) best = i;
            if (best == h.size()) break;
            std::swap(h[r], h[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < h.size(); ++i) {
                if (h[i][c] == 0) continue;
                Integer q = floor_div(h[i][c], h[r][c]);
                for (std::size_t j = 0; j < dim; ++j) h[i][j] -= q * h[r][j];
                if (h[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (h[r][c] == 0) continue;
        if (h[r][c] < 0)
            for (auto& x : h[r]) x = -x;
        for (std::size_t i = 0; i < r; ++i) {
            Integer q = floor_div(h[i][c], h[r][c]);
            if (q != 0)
                for (std::size_t j = 0; j < dim; ++j) h[i][j] -= q * h[r][j];
        }
        ++r;
    }
    h.resize(r);
    return h;
}

}  // namespace lcs
