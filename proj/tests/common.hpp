#pragma once

#include <random>
#include <vector>

#include "fdalg/fdalg.hpp"

namespace fdalg::testing {

/// Small rationals p/q with |p| ≤ 3 and 1 ≤ q ≤ 2, so exact arithmetic stays cheap.
inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline Vec random_vec(std::mt19937& rng, std::size_t n) {
    Vec v(n);
    for (auto& x : v) x = random_rational(rng);
    return v;
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double zero_bias = 0.0) {
    std::bernoulli_distribution zero(zero_bias);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = zero(rng) ? Rational(0) : random_rational(rng);
    return m;
}

inline Matrix random_combination(std::mt19937& rng, const std::vector<Matrix>& basis, std::size_t dim) {
    return combine(basis, random_vec(rng, basis.size()), dim, dim);
}

/// Endomorphism w ↦ M·w of A^r, w read as a column over A, so the generator
/// u_i goes to column i of M. entries[j][i] = M_ji.
inline Matrix matrix_endo(const Algebra& a, const std::vector<std::vector<Vec>>& entries) {
    const std::size_t r = entries.size(), n = a.dim();
    Matrix h(r * n, r * n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < r; ++j) {
                Vec img = a.mul(entries[j][i], a.basis(k));
                for (std::size_t l = 0; l < n; ++l) h(i * n + k, j * n + l) = img[l];
            }
    return h;
}

/// Right ideal e·A as a module.
inline RightModule corner_module(const AlgebraPtr& alg, const Vec& e) { return right_ideal_module(alg, e).module; }

/// A projective module built as a direct sum of right ideals e·A, with the
/// coordinate system {e in each slot, projection to the slot}.
struct Built {
    RightModule module;
    CoordinateSystem summand;
};

inline Built build(const AlgebraPtr& a, const std::vector<Vec>& idems) {
    std::vector<RightModule> parts;
    std::vector<Submodule> subs;
    for (const auto& e : idems) {
        subs.push_back(right_ideal_module(a, e));
        parts.push_back(subs.back().module);
    }
    DirectSum ds = direct_sum(a, parts);
    CoordinateSystem cs;
    for (std::size_t t = 0; t < idems.size(); ++t) {
        const Submodule& s = subs[t];
        // u = e in slot t; α = projection to slot t followed by the inclusion eA ⊆ A.
        cs.elements.push_back(row_times(s.space.coordinates(idems[t]), ds.injections[t]));
        cs.functionals.push_back(ds.projections[t] * s.inclusion);
    }
    return {ds.module, cs};
}

/// regular, each e_bA and e_1A ⊕ A.
inline std::vector<Built> projective_family(const AlgebraPtr& a) {
    auto dec = primitive_idempotents(*a);
    std::vector<Built> out{build(a, {a->one()})};
    for (std::size_t b = 0; b < dec.block_count(); ++b) out.push_back(build(a, {dec.representative(b)}));
    out.push_back(build(a, {dec.representative(0), a->one()}));
    return out;
}

}  // namespace fdalg::testing
