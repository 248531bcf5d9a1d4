#pragma once

#include <vector>

#include "fdalg/algebra.hpp"

namespace fdalg {

/// Linear functional on an algebra, stored by its values on the basis.
struct LinFunc {
    Vec values;

    Rational operator()(const Vec& a) const { return dot(values, a); }
    bool is_zero() const { return fdalg::is_zero(values); }

    friend bool operator==(const LinFunc&, const LinFunc&) = default;
};

inline LinFunc dual_basis_functional(std::size_t n, std::size_t k) { return LinFunc{unit_vec(n, k)}; }

/// φ(ab) = φ(ba) on all basis pairs, i.e. φ vanishes on [A,A].
inline bool is_symmetric(const Algebra& alg, const LinFunc& phi) {
    if (phi.values.size() != alg.dim()) throw InvalidInput("functional length does not match algebra");
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = i + 1; j < alg.dim(); ++j)
            if (sgn(phi(alg.commutator(alg.basis(i), alg.basis(j)))) != 0) return false;
    return true;
}

/// Basis of SLF(A): the annihilator of [A,A].
inline std::vector<LinFunc> slf_basis(const Algebra& alg) {
    Subspace ann = annihilator(commutator_subspace(alg));
    std::vector<LinFunc> out;
    for (std::size_t r = 0; r < ann.dim(); ++r) out.push_back(LinFunc{ann.basis_vector(r)});
    return out;
}

/// G_ij = φ(a_i a_j).
inline Matrix gram_matrix(const Algebra& alg, const LinFunc& phi) {
    if (phi.values.size() != alg.dim()) throw InvalidInput("functional length does not match algebra");
    Matrix g(alg.dim(), alg.dim());
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j) g(i, j) = phi(alg.mul(alg.basis(i), alg.basis(j)));
    return g;
}

inline bool is_nondegenerate(const Algebra& alg, const LinFunc& phi) {
    return is_invertible(gram_matrix(alg, phi));
}

/// Pairing ⟨x, y⟩ = φ(xy).
inline Rational pairing(const Algebra& alg, const LinFunc& phi, const Vec& x, const Vec& y) {
    return phi(alg.mul(x, y));
}

/// Orthogonal complement {a : ⟨u, a⟩ = 0 for all u ∈ U}.
inline Subspace perp(const Algebra& alg, const LinFunc& phi, const Subspace& u) {
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < u.dim(); ++r) {
        Vec row(alg.dim());
        for (std::size_t j = 0; j < alg.dim(); ++j) row[j] = pairing(alg, phi, u.basis_vector(r), alg.basis(j));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) return Subspace::full(alg.dim());
    return kernel_basis(Matrix::from_rows(rows, alg.dim()));
}

}  // namespace fdalg
