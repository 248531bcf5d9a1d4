#pragma once

// Finite-dimensional right modules over an Algebra.
//
// A module of dimension m carries one m×m matrix per algebra basis
// element; w·a_k is the row vector w times action[k]. Homomorphisms are
// row-convention matrices too: H : M → N sends w to w·H and intertwines
// when action_M[k]·H = H·action_N[k]. Composition α∘β has matrix H_β·H_α.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fdalg/algebra.hpp"
#include "fdalg/config.hpp"
#include "fdalg/structure.hpp"

namespace fdalg {

class RightModule {
public:
    static RightModule create(AlgebraPtr alg, std::size_t dim, std::vector<Matrix> action) {
        RightModule m(std::move(alg), dim, std::move(action));
        if (auto err = m.check()) throw InvalidInput("invalid module: " + *err);
        return m;
    }

    const AlgebraPtr& algebra() const { return alg_; }
    std::size_t dim() const { return dim_; }
    const std::vector<Matrix>& action() const { return action_; }
    const Matrix& action(std::size_t k) const { return action_.at(k); }

    /// Matrix of w ↦ w·a.
    Matrix act_matrix(const Vec& a) const {
        alg_->require_element(a);
        Matrix m(dim_, dim_);
        for (std::size_t k = 0; k < a.size(); ++k) m.add_scaled(a[k], action_[k]);
        return m;
    }

    Vec act(const Vec& w, const Vec& a) const { return row_times(w, act_matrix(a)); }

    Vec basis(std::size_t g) const { return unit_vec(dim_, g); }

    bool same_algebra(const RightModule& other) const { return alg_ == other.alg_ || *alg_ == *other.alg_; }

    friend bool operator==(const RightModule& a, const RightModule& b) {
        return a.same_algebra(b) && a.dim_ == b.dim_ && a.action_ == b.action_;
    }

private:
    RightModule(AlgebraPtr alg, std::size_t dim, std::vector<Matrix> action)
        : alg_(std::move(alg)), dim_(dim), action_(std::move(action)) {}

    std::optional<std::string> check() const {
        const Algebra& a = *alg_;
        if (action_.size() != a.dim()) return "need one action matrix per algebra basis element";
        for (const auto& m : action_)
            if (m.rows() != dim_ || m.cols() != dim_) return "action matrix has the wrong shape";
        if (act_matrix(a.one()) != Matrix::identity(dim_)) return "unity does not act as the identity";
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) {
                Matrix rhs(dim_, dim_);
                for (std::size_t k = 0; k < a.dim(); ++k) rhs.add_scaled(a.c(i, j, k), action_[k]);
                if (action_[i] * action_[j] != rhs)
                    return "action is not compatible with a_" + std::to_string(i) + "·a_" + std::to_string(j);
            }
        return std::nullopt;
    }

    AlgebraPtr alg_;
    std::size_t dim_ = 0;
    std::vector<Matrix> action_;
};

/// Intertwining check for a candidate hom matrix.
inline bool is_hom(const RightModule& src, const RightModule& tgt, const Matrix& h) {
    if (!src.same_algebra(tgt)) return false;
    if (h.rows() != src.dim() || h.cols() != tgt.dim()) return false;
    for (std::size_t k = 0; k < src.action().size(); ++k)
        if (src.action(k) * h != h * tgt.action(k)) return false;
    return true;
}

inline void require_hom(const RightModule& src, const RightModule& tgt, const Matrix& h, const char* what) {
    if (!is_hom(src, tgt, h)) throw InvalidInput(std::string(what) + " is not a module homomorphism");
}

/// Basis of Hom_A(M, N).
inline std::vector<Matrix> hom_space(const RightModule& m, const RightModule& n) {
    if (!m.same_algebra(n)) throw InvalidInput("hom_space: modules over different algebras");
    if (m.dim() == 0 || n.dim() == 0) return {};
    return intertwiners(m.action(), n.action());
}

/// A acting on itself from the right.
inline RightModule regular_module(const AlgebraPtr& alg) {
    std::vector<Matrix> act;
    for (std::size_t k = 0; k < alg->dim(); ++k) act.push_back(alg->right_mult(alg->basis(k)));
    return RightModule::create(alg, alg->dim(), std::move(act));
}

struct DirectSum {
    RightModule module;
    /// injections[t]: M_t → ⊕, projections[t]: ⊕ → M_t.
    std::vector<Matrix> injections;
    std::vector<Matrix> projections;
};

inline DirectSum direct_sum(const AlgebraPtr& alg, const std::vector<RightModule>& parts) {
    std::size_t total = 0;
    for (const auto& p : parts) {
        if (!(*p.algebra() == *alg)) throw InvalidInput("direct_sum: summand over a different algebra");
        total += p.dim();
    }
    std::vector<Matrix> act(alg->dim(), Matrix(total, total));
    std::size_t base = 0;
    for (const auto& p : parts) {
        for (std::size_t k = 0; k < alg->dim(); ++k)
            for (std::size_t r = 0; r < p.dim(); ++r)
                for (std::size_t c = 0; c < p.dim(); ++c) act[k](base + r, base + c) = p.action(k)(r, c);
        base += p.dim();
    }
    DirectSum out{RightModule::create(alg, total, std::move(act)), {}, {}};
    std::size_t off = 0;
    for (const auto& p : parts) {
        Matrix inj(p.dim(), total), proj(total, p.dim());
        for (std::size_t r = 0; r < p.dim(); ++r) {
            inj(r, off + r) = 1;
            proj(off + r, r) = 1;
        }
        out.injections.push_back(std::move(inj));
        out.projections.push_back(std::move(proj));
        off += p.dim();
    }
    return out;
}

inline RightModule free_module(const AlgebraPtr& alg, std::size_t rank) {
    return direct_sum(alg, std::vector<RightModule>(rank, regular_module(alg))).module;
}

inline bool is_invariant(const RightModule& w, const Subspace& u) {
    if (u.ambient_dim() != w.dim()) return false;
    for (std::size_t r = 0; r < u.dim(); ++r)
        for (const auto& a : w.action())
            if (!u.contains(row_times(u.basis_vector(r), a))) return false;
    return true;
}

struct Submodule {
    RightModule module;
    Subspace space;
    /// Row convention, dim(U) × dim(W): the inclusion.
    Matrix inclusion;
};

/// The invariant subspace U of W as a module in its RREF basis.
inline Submodule submodule(const RightModule& w, const Subspace& u) {
    if (!is_invariant(w, u)) throw InvalidInput("subspace is not a submodule");
    std::vector<Matrix> act;
    for (const auto& a : w.action()) {
        Matrix m(u.dim(), u.dim());
        for (std::size_t r = 0; r < u.dim(); ++r) m.set_row(r, u.coordinates(row_times(u.basis_vector(r), a)));
        act.push_back(std::move(m));
    }
    return Submodule{RightModule::create(w.algebra(), u.dim(), std::move(act)), u, u.basis()};
}

/// Right ideal x·A as a submodule of A_A.
inline Submodule right_ideal_module(const AlgebraPtr& alg, const Vec& x) {
    std::vector<Vec> rows;
    for (std::size_t k = 0; k < alg->dim(); ++k) rows.push_back(alg->mul(x, alg->basis(k)));
    return submodule(regular_module(alg), Subspace::span(rows, alg->dim()));
}

/// W·I = span{w·x : w ∈ W basis, x ∈ I}.
inline Subspace submodule_times_ideal(const RightModule& w, const Subspace& ideal) {
    std::vector<Vec> rows;
    for (std::size_t g = 0; g < w.dim(); ++g)
        for (std::size_t r = 0; r < ideal.dim(); ++r) rows.push_back(w.act(w.basis(g), ideal.basis_vector(r)));
    return Subspace::span(rows, w.dim());
}

struct QuotientModule {
    RightModule module;
    /// Row convention, dim(W) × dim(W/U).
    Matrix projection;
    /// Row convention, dim(W/U) × dim(W).
    Matrix section;

    Vec project(const Vec& w) const { return row_times(w, projection); }
};

/// W/U on the non-pivot standard coordinates of U.
inline QuotientModule quotient_module(const RightModule& w, const Subspace& u) {
    if (!is_invariant(w, u)) throw InvalidInput("quotient_module: subspace is not invariant");
    auto kept = u.non_pivots();
    const std::size_t q = kept.size();
    Matrix proj(w.dim(), q), sec(q, w.dim());
    for (std::size_t g = 0; g < w.dim(); ++g) {
        Vec r = u.reduce(w.basis(g));
        for (std::size_t t = 0; t < q; ++t) proj(g, t) = r[kept[t]];
    }
    for (std::size_t t = 0; t < q; ++t) sec(t, kept[t]) = 1;
    std::vector<Matrix> act;
    for (const auto& a : w.action()) act.push_back(sec * a * proj);
    return QuotientModule{RightModule::create(w.algebra(), q, std::move(act)), proj, sec};
}

/// A module annihilated by the ideal I viewed as a module over A/I.
inline RightModule induced_module_over_quotient(const RightModule& w, const QuotientAlgebra& quot,
                                                const Ideal& ideal) {
    for (std::size_t r = 0; r < ideal.dim(); ++r)
        if (!w.act_matrix(ideal.space().basis_vector(r)).is_zero())
            throw InvalidInput("module is not annihilated by the ideal");
    std::vector<Matrix> act;
    for (std::size_t t = 0; t < quot.algebra->dim(); ++t) act.push_back(w.act_matrix(quot.lift(quot.algebra->basis(t))));
    return RightModule::create(quot.algebra, w.dim(), std::move(act));
}

/// α̂ on W/U for α ∈ End_A(W) with α(U) ⊆ U.
inline Matrix induced_endo_hat(const RightModule& w, const QuotientModule& q, const Subspace& u, const Matrix& alpha) {
    require_hom(w, w, alpha, "induced_endo_hat: alpha");
    for (std::size_t r = 0; r < u.dim(); ++r)
        if (!u.contains(row_times(u.basis_vector(r), alpha)))
            throw InvalidInput("induced_endo_hat: alpha does not preserve the submodule");
    return q.section * alpha * q.projection;
}

/// Dual-basis data: w = Σ u_i·α_i(w) for all w.
struct CoordinateSystem {
    std::vector<Vec> elements;
    /// α_i ∈ Hom_A(W, A_A), each dim(W) × dim(A).
    std::vector<Matrix> functionals;

    std::size_t size() const { return elements.size(); }
};

inline bool is_coordinate_system(const RightModule& w, const CoordinateSystem& cs) {
    if (cs.elements.size() != cs.functionals.size()) return false;
    RightModule reg = regular_module(w.algebra());
    for (const auto& f : cs.functionals)
        if (!is_hom(w, reg, f)) return false;
    for (std::size_t g = 0; g < w.dim(); ++g) {
        Vec total = zero_vec(w.dim());
        for (std::size_t i = 0; i < cs.size(); ++i) total = total + w.act(cs.elements[i], cs.functionals[i].row(g));
        if (total != w.basis(g)) return false;
    }
    return true;
}

/// Proof that W is not projective: the splitting equations for the free
/// cover are inconsistent.
struct NotProjective {
    std::size_t equations = 0;
    std::size_t unknowns = 0;
    /// y with y·(system) = 0 and y·(rhs) ≠ 0.
    Vec certificate;
};

using ProjectivityResult = std::variant<CoordinateSystem, NotProjective>;

/// Free cover p: A^m → W, ε_g ↦ w_g, on the coordinate basis of W, and a
/// search for s with p∘s = id. A splitting gives u_g = w_g, α_g = π_g∘s.
inline ProjectivityResult is_projective_with_coords(const RightModule& w) {
    const AlgebraPtr& alg = w.algebra();
    const std::size_t m = w.dim(), n = alg->dim();
    if (m == 0) return CoordinateSystem{};
    RightModule reg = regular_module(alg);
    std::vector<Matrix> homs = hom_space(w, reg);
    const std::size_t h = homs.size();
    // Unknowns c[g][t]: s_g = Σ_t c[g][t] homs[t]. Constraint for each basis
    // vector x of W: Σ_g w_g · s_g(x) = x.
    Matrix sys(m * m, m * h);
    Vec rhs(m * m);
    std::vector<Matrix> act_of_basis(n);
    for (std::size_t k = 0; k < n; ++k) act_of_basis[k] = w.action(k);
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t g = 0; g < m; ++g)
            for (std::size_t t = 0; t < h; ++t) {
                Vec image = homs[t].row(x);  // s_g(x) contribution, an element of A
                Vec contrib = zero_vec(m);
                for (std::size_t k = 0; k < n; ++k)
                    if (sgn(image[k]) != 0) axpy(contrib, image[k], act_of_basis[k].row(g));
                for (std::size_t y = 0; y < m; ++y) sys(x * m + y, g * h + t) = contrib[y];
            }
        for (std::size_t y = 0; y < m; ++y) rhs[x * m + y] = x == y ? 1 : 0;
    }
    auto res = solve(sys, rhs);
    if (auto* bad = std::get_if<NoSolution>(&res)) return NotProjective{m * m, m * h, bad->certificate};
    const Vec& c = std::get<Vec>(res);
    CoordinateSystem cs;
    for (std::size_t g = 0; g < m; ++g) {
        cs.elements.push_back(w.basis(g));
        Matrix s(m, n);
        for (std::size_t t = 0; t < h; ++t) s.add_scaled(c[g * h + t], homs[t]);
        cs.functionals.push_back(std::move(s));
    }
    if (!is_coordinate_system(w, cs)) throw InternalError("free-cover splitting does not give a coordinate system");
    return cs;
}

inline bool is_projective(const RightModule& w) {
    return std::holds_alternative<CoordinateSystem>(is_projective_with_coords(w));
}

/// End_A(W) as an algebra under composition (product α·β = α∘β).
struct EndoAlgebra {
    AlgebraPtr algebra;
    /// Basis endomorphisms, row-convention matrices on W.
    std::vector<Matrix> basis;

    /// Endomorphism with the given coordinates.
    Matrix to_matrix(const Vec& coords, std::size_t dim) const { return combine(basis, coords, dim, dim); }
};

inline EndoAlgebra endo_algebra(const RightModule& w) {
    EndoAlgebra out;
    out.basis = hom_space(w, w);
    const std::size_t d = out.basis.size(), m = w.dim();
    std::vector<Vec> flat;
    for (const auto& b : out.basis) flat.push_back(b.entries());
    Subspace span = Subspace::span(flat, m * m);
    // Change of basis from RREF coordinates to the hom_space basis (they
    // coincide: hom_space already returns the RREF basis).
    AlgebraDef def = AlgebraDef::empty(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Matrix comp = out.basis[j] * out.basis[i];  // α_i ∘ α_j
            Vec c = span.coordinates(comp.entries());
            for (std::size_t k = 0; k < d; ++k) def.c(i, j, k) = c[k];
        }
    def.one = span.coordinates(Matrix::identity(m).entries());
    for (std::size_t i = 0; i < d; ++i) def.basis_names[i] = "end" + std::to_string(i);
    out.algebra = Algebra::create(std::move(def));
    return out;
}

/// Looks for an invertible intertwiner among hom-space basis elements and
/// two-term integer combinations.
inline std::optional<Matrix> find_isomorphism(const RightModule& m, const RightModule& n,
                                              std::size_t budget = search_budget()) {
    if (m.dim() != n.dim()) return std::nullopt;
    if (m.dim() == 0) return Matrix(0, 0);
    auto homs = hom_space(m, n);
    if (homs.empty()) return std::nullopt;
    std::vector<Vec> flat;
    for (const auto& h : homs) flat.push_back(h.entries());
    detail::CombinationStream stream(Subspace::span(flat, m.dim() * n.dim()));
    std::size_t tried = 0;
    while (auto v = stream.next()) {
        if (++tried > budget) break;
        Matrix h = Matrix::from_entries(m.dim(), n.dim(), *v);
        if (is_invertible(h)) return h;
    }
    return std::nullopt;
}

/// The simple module e_bA / e_bJ for each block representative.
inline std::vector<RightModule> simple_modules(const AlgebraPtr& alg, const IdempotentDecomposition& dec) {
    Ideal rad = radical(*alg);
    RightModule reg = regular_module(alg);
    std::vector<RightModule> out;
    for (std::size_t b = 0; b < dec.block_count(); ++b) {
        Submodule ea = right_ideal_module(alg, dec.representative(b));
        Subspace ej = submodule_times_ideal(ea.module, rad.space());
        out.push_back(quotient_module(ea.module, ej).module);
    }
    return out;
}

}  // namespace fdalg
