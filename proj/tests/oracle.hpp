#pragma once

// Brute-force reference computations used to cross-check the library. They
// work straight from structure constants with their own elimination routine
// and share no linear algebra with fdalg.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "fdalg/algebra.hpp"

namespace oracle {

using Q = mpq_class;
using Row = std::vector<Q>;
using Rows = std::vector<Row>;

/// Plain Gauss-Jordan; returns the nonzero reduced rows.
inline Rows reduce(Rows m) {
    if (m.empty()) return m;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        Q inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Q f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    m.resize(r);
    return m;
}

inline std::size_t rank(const Rows& m) { return reduce(m).size(); }

/// Basis of {x : Σ_j m[i][j] x_j = 0 for all i}.
inline Rows nullspace(const Rows& m, std::size_t cols) {
    Rows red = reduce(m);
    std::vector<long> pivot_of_col(cols, -1);
    for (std::size_t r = 0; r < red.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (red[r][c] != 0) {
                pivot_of_col[c] = static_cast<long>(r);
                break;
            }
    Rows out;
    for (std::size_t free = 0; free < cols; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        Row v(cols, 0);
        v[free] = 1;
        for (std::size_t c = 0; c < cols; ++c)
            if (pivot_of_col[c] >= 0) v[c] = -red[pivot_of_col[c]][free];
        out.push_back(v);
    }
    return out;
}

inline Row mul(const fdalg::AlgebraDef& d, const Row& a, const Row& b) {
    Row out(d.dim, 0);
    for (std::size_t i = 0; i < d.dim; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < d.dim; ++j) {
            if (b[j] == 0) continue;
            for (std::size_t k = 0; k < d.dim; ++k) out[k] += a[i] * b[j] * d.c(i, j, k);
        }
    }
    return out;
}

inline Row unit(std::size_t n, std::size_t k) {
    Row v(n, 0);
    v[k] = 1;
    return v;
}

/// Trace of x ↦ x·a on the basis.
inline Q right_trace(const fdalg::AlgebraDef& d, const Row& a) {
    Q t = 0;
    for (std::size_t i = 0; i < d.dim; ++i) t += mul(d, unit(d.dim, i), a)[i];
    return t;
}

/// In characteristic zero the radical is the kernel of (a, b) ↦ tr(R_{ab}).
inline Rows radical(const fdalg::AlgebraDef& d) {
    Rows gram(d.dim, Row(d.dim));
    for (std::size_t i = 0; i < d.dim; ++i)
        for (std::size_t j = 0; j < d.dim; ++j) gram[i][j] = right_trace(d, mul(d, unit(d.dim, i), unit(d.dim, j)));
    return nullspace(gram, d.dim);
}

/// True when every product of `power` elements of the span is zero.
inline bool span_is_nilpotent(const fdalg::AlgebraDef& d, const Rows& span, std::size_t power) {
    Rows current = span;
    for (std::size_t p = 1; p < power; ++p) {
        Rows next;
        for (const auto& x : current)
            for (const auto& y : span) next.push_back(mul(d, x, y));
        current = reduce(next);
        if (current.empty()) return true;
    }
    return current.empty();
}

/// Right socle {a : aJ = 0} (right = true) or left socle {a : Ja = 0}.
inline Rows socle(const fdalg::AlgebraDef& d, bool right) {
    Rows j = radical(d);
    Rows eqs;
    for (const auto& r : j)
        for (std::size_t out = 0; out < d.dim; ++out) {
            Row eq(d.dim);
            for (std::size_t k = 0; k < d.dim; ++k) {
                Row prod = right ? mul(d, unit(d.dim, k), r) : mul(d, r, unit(d.dim, k));
                eq[k] = prod[out];
            }
            eqs.push_back(eq);
        }
    if (eqs.empty()) eqs.push_back(Row(d.dim, 0));
    return nullspace(eqs, d.dim);
}

/// Solutions of φ(a_i a_j) = φ(a_j a_i) for all i, j.
inline Rows slf(const fdalg::AlgebraDef& d) {
    Rows eqs;
    for (std::size_t i = 0; i < d.dim; ++i)
        for (std::size_t j = 0; j < d.dim; ++j) {
            Row a = mul(d, unit(d.dim, i), unit(d.dim, j));
            Row b = mul(d, unit(d.dim, j), unit(d.dim, i));
            Row eq(d.dim);
            for (std::size_t k = 0; k < d.dim; ++k) eq[k] = a[k] - b[k];
            eqs.push_back(eq);
        }
    return nullspace(eqs, d.dim);
}

inline Q evaluate(const Row& phi, const Row& a) {
    Q t = 0;
    for (std::size_t k = 0; k < a.size(); ++k) t += phi[k] * a[k];
    return t;
}

/// Definition of the trace on A^r: with u_i the standard generators and α_i
/// the coordinate projections, T(α) = Σ_i α_i(α(u_i)). For α given by left
/// multiplication by an r×r matrix over A, α(u_i) is column i of the matrix,
/// so α_i(α(u_i)) is the diagonal entry.
inline Q free_module_trace(const Row& phi, const std::vector<std::vector<Row>>& entries) {
    Q t = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) t += evaluate(phi, entries[i][i]);
    return t;
}

}  // namespace oracle
