#pragma once

// Symmetric linear functions: radicals and Gram forms, the trace map of a
// projective module and the induced functional on its endomorphisms, the
// transfers between A and its basic algebra, the deformation by a central
// element, and the blockwise decomposition into pseudotraces.

#include <optional>
#include <vector>

#include "fdalg/amodule.hpp"
#include "fdalg/linfunc.hpp"
#include "fdalg/structure.hpp"

namespace fdalg {

struct GramForm {
    LinFunc phi;
    Matrix matrix;
};

inline GramForm gram_form(const Algebra& alg, const LinFunc& phi) { return GramForm{phi, gram_matrix(alg, phi)}; }

inline void require_symmetric(const Algebra& alg, const LinFunc& phi, const char* what) {
    if (!is_symmetric(alg, phi)) throw InvalidInput(std::string(what) + ": functional is not symmetric");
}

/// Rad(φ) = {a : φ(Aa) = 0}, the kernel of the Gram matrix.
inline Ideal rad_phi(const Algebra& alg, const LinFunc& phi) {
    require_symmetric(alg, phi, "rad_phi");
    Subspace k = kernel_basis(gram_matrix(alg, phi));
    if (!is_two_sided_ideal(alg, k)) throw InternalError("radical of a symmetric form is not an ideal");
    return Ideal::verified(alg, k);
}

/// The symmetric algebra A/Rad(φ) with its induced form.
struct SymmetricQuotient {
    Ideal rad;
    QuotientAlgebra quotient;
    LinFunc induced;
};

inline SymmetricQuotient symmetric_quotient(const Algebra& alg, const LinFunc& phi) {
    Ideal rad = rad_phi(alg, phi);
    QuotientAlgebra q = quotient_algebra(alg, rad);
    LinFunc induced{Vec(q.algebra->dim())};
    for (std::size_t t = 0; t < q.algebra->dim(); ++t) induced.values[t] = phi(q.lift(q.algebra->basis(t)));
    if (!q.degenerate && !is_nondegenerate(*q.algebra, induced))
        throw InternalError("induced form on A/Rad(phi) is degenerate");
    return SymmetricQuotient{std::move(rad), std::move(q), std::move(induced)};
}

/// Σ_i α_i(α(u_i)) ∈ A. Its class in A/[A,A] does not depend on the
/// coordinate system.
inline Vec trace_element(const RightModule& w, const CoordinateSystem& cs, const Matrix& alpha) {
    require_hom(w, w, alpha, "trace_element: alpha");
    Vec total = w.algebra()->zero();
    for (std::size_t i = 0; i < cs.size(); ++i) total = total + row_times(row_times(cs.elements[i], alpha), cs.functionals[i]);
    return total;
}

inline Rational phi_W(const LinFunc& phi, const RightModule& w, const CoordinateSystem& cs, const Matrix& alpha) {
    if (phi.values.size() != w.algebra()->dim()) throw InvalidInput("phi_W: functional length does not match algebra");
    return phi(trace_element(w, cs, alpha));
}

/// Coordinates from the free-cover splitting; throws if W is not projective.
inline CoordinateSystem coordinates_of(const RightModule& w) {
    auto res = is_projective_with_coords(w);
    if (auto* bad = std::get_if<NotProjective>(&res))
        throw NotProjectiveError("module is not projective (" + std::to_string(bad->equations) + " splitting equations inconsistent)");
    return std::get<CoordinateSystem>(res);
}

/// φ_W as a functional on the endomorphism algebra basis.
inline LinFunc phi_W_functional(const LinFunc& phi, const RightModule& w, const CoordinateSystem& cs,
                                const EndoAlgebra& end) {
    LinFunc out{Vec(end.basis.size())};
    for (std::size_t t = 0; t < end.basis.size(); ++t) out.values[t] = phi_W(phi, w, cs, end.basis[t]);
    return out;
}

// ---------------------------------------------------------------------------
// Transfers between A and eAe.

/// ψ(y) = φ(y) for y ∈ eAe.
inline LinFunc transfer_down(const Algebra& alg, const LinFunc& phi, const BasicAlgebraData& basic) {
    if (phi.values.size() != alg.dim()) throw InvalidInput("transfer_down: functional length does not match algebra");
    const Algebra& eae = *basic.algebra();
    LinFunc out{Vec(eae.dim())};
    for (std::size_t t = 0; t < eae.dim(); ++t) out.values[t] = phi(basic.embed(eae.basis(t)));
    return out;
}

/// a ↦ ψ(Σ q_ij a p_ij).
inline LinFunc transfer_up(const Algebra& alg, const LinFunc& psi, const BasicAlgebraData& basic) {
    const Algebra& eae = *basic.algebra();
    if (psi.values.size() != eae.dim()) throw InvalidInput("transfer_up: functional length does not match basic algebra");
    LinFunc out{Vec(alg.dim())};
    for (std::size_t k = 0; k < alg.dim(); ++k) {
        Vec sum = alg.zero();
        for (std::size_t b = 0; b < basic.p.size(); ++b)
            for (std::size_t j = 0; j < basic.p[b].size(); ++j)
                sum = sum + alg.mul(basic.q[b][j], alg.basis(k), basic.p[b][j]);
        out.values[k] = psi(basic.coordinates(sum));
    }
    return out;
}

/// Ae with its two module structures: a right eAe-module, and a right
/// A^op-module standing in for the left A-module.
struct CornerBimodule {
    Subspace space;
    RightModule over_basic;
    AlgebraPtr opposite_algebra;
    RightModule over_opposite;
    std::vector<Matrix> left_by_basis;

    /// v ↦ a·v on Ae coordinates.
    Matrix left_mult(const Vec& a) const { return combine(left_by_basis, a, space.dim(), space.dim()); }
};

inline CornerBimodule corner_bimodule(const AlgebraPtr& alg, const BasicAlgebraData& basic) {
    Subspace space = corner_space(*alg, alg->one(), basic.e);
    const std::size_t m = space.dim();
    auto on_space = [&](auto&& f) {
        Matrix mat(m, m);
        for (std::size_t t = 0; t < m; ++t) mat.set_row(t, space.coordinates(f(space.basis_vector(t))));
        return mat;
    };
    std::vector<Matrix> left;
    for (std::size_t k = 0; k < alg->dim(); ++k)
        left.push_back(on_space([&](const Vec& v) { return alg->mul(alg->basis(k), v); }));
    std::vector<Matrix> right;
    const Algebra& eae = *basic.algebra();
    for (std::size_t k = 0; k < eae.dim(); ++k) {
        Vec y = basic.embed(eae.basis(k));
        right.push_back(on_space([&](const Vec& v) { return alg->mul(v, y); }));
    }
    AlgebraPtr op = opposite(*alg);
    RightModule over_basic = RightModule::create(basic.algebra(), m, std::move(right));
    RightModule over_opposite = RightModule::create(op, m, left);
    return CornerBimodule{std::move(space), std::move(over_basic), std::move(op), std::move(over_opposite), std::move(left)};
}

/// transfer_down computed as φ_W on Ae viewed as a left A-module, with α
/// right multiplication by eae.
inline LinFunc transfer_down_via_trace(const AlgebraPtr& alg, const LinFunc& phi, const BasicAlgebraData& basic) {
    CornerBimodule bi = corner_bimodule(alg, basic);
    CoordinateSystem cs = coordinates_of(bi.over_opposite);
    const Algebra& eae = *basic.algebra();
    LinFunc out{Vec(eae.dim())};
    for (std::size_t t = 0; t < eae.dim(); ++t) out.values[t] = phi_W(phi, bi.over_opposite, cs, bi.over_basic.action(t));
    return out;
}

/// transfer_up computed as φ_W on Ae viewed as a right eAe-module, with α
/// left multiplication by a.
inline LinFunc transfer_up_via_trace(const AlgebraPtr& alg, const LinFunc& psi, const BasicAlgebraData& basic) {
    CornerBimodule bi = corner_bimodule(alg, basic);
    CoordinateSystem cs = coordinates_of(bi.over_basic);
    LinFunc out{Vec(alg->dim())};
    for (std::size_t k = 0; k < alg->dim(); ++k) out.values[k] = phi_W(psi, bi.over_basic, cs, bi.left_by_basis[k]);
    return out;
}

// ---------------------------------------------------------------------------
// Deformation by a central element.

/// Smallest s ≥ 1 with x^s = 0, if any s ≤ dim A works.
inline std::optional<std::size_t> nilpotency_exponent(const Algebra& alg, const Vec& x) {
    Vec p = x;
    for (std::size_t s = 1; s <= std::max<std::size_t>(alg.dim(), 1); ++s) {
        if (is_zero(p)) return s;
        p = alg.mul(p, x);
    }
    return std::nullopt;
}

struct NuDeformation {
    /// ν − r·1.
    Vec shifted;
    std::size_t s = 0;
    Ideal kernel;
    QuotientAlgebra quotient;
    /// φ′(ā) = φ((ν − r)a) on A/𝒦.
    LinFunc phi_prime;
};

inline NuDeformation nu_deformation(const Algebra& alg, const LinFunc& phi, const Vec& nu, const Rational& r) {
    alg.require_element(nu);
    if (phi.values.size() != alg.dim()) throw InvalidInput("nu_deformation: functional length does not match algebra");
    if (!alg.is_central(nu)) throw InvalidInput("nu_deformation: nu is not central");
    Vec shifted = nu;
    axpy(shifted, -r, alg.one());
    auto s = nilpotency_exponent(alg, shifted);
    if (!s) throw InvalidInput("nu_deformation: nu - r is not nilpotent");
    Ideal kernel = Ideal::verified(alg, annihilator_of(alg, shifted, Side::Left));
    for (std::size_t t = 0; t < kernel.dim(); ++t)
        if (sgn(phi(alg.mul(shifted, kernel.space().basis_vector(t)))) != 0)
            throw InternalError("deformed functional is not well defined");
    QuotientAlgebra q = quotient_algebra(alg, kernel);
    LinFunc prime{Vec(q.algebra->dim())};
    for (std::size_t t = 0; t < q.algebra->dim(); ++t) prime.values[t] = phi(alg.mul(shifted, q.lift(q.algebra->basis(t))));
    if (is_symmetric(alg, phi) && !is_symmetric(*q.algebra, prime))
        throw InternalError("deformed functional is not symmetric");
    return NuDeformation{std::move(shifted), *s, std::move(kernel), std::move(q), std::move(prime)};
}

struct NuCompatibility {
    Rational lhs;
    /// Via the coordinate system induced from W.
    Rational rhs;
    /// Via an independent free-cover coordinate system of W/W𝒦.
    Rational rhs_free_cover;

    bool agree() const { return lhs == rhs && rhs == rhs_free_cover; }
};

inline NuCompatibility check_nu_compatibility(const LinFunc& phi, const RightModule& w, const Matrix& alpha,
                                              const Vec& nu, const Rational& r) {
    const Algebra& alg = *w.algebra();
    require_hom(w, w, alpha, "check_nu_compatibility: alpha");
    NuDeformation def = nu_deformation(alg, phi, nu, r);
    CoordinateSystem cs = coordinates_of(w);

    NuCompatibility out;
    out.lhs = phi_W(phi, w, cs, w.act_matrix(def.shifted) * alpha);

    Subspace wk = submodule_times_ideal(w, def.kernel.space());
    QuotientModule qm = quotient_module(w, wk);
    RightModule bar = induced_module_over_quotient(qm.module, def.quotient, def.kernel);
    CoordinateSystem induced;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        induced.elements.push_back(qm.project(cs.elements[i]));
        induced.functionals.push_back(qm.section * cs.functionals[i] * def.quotient.projection);
    }
    if (!is_coordinate_system(bar, induced)) throw InternalError("induced coordinate system is not a coordinate system");
    Matrix hat = induced_endo_hat(w, qm, wk, alpha);
    out.rhs = phi_W(def.phi_prime, bar, induced, hat);
    out.rhs_free_cover = phi_W(def.phi_prime, bar, coordinates_of(bar), hat);
    return out;
}

// ---------------------------------------------------------------------------
// Decomposition of a symmetric functional into pseudotraces.

struct PseudotraceSummand {
    Vec central_idempotent;
    /// a ↦ φ(c·a).
    LinFunc phi_block;
    SymmetricQuotient quotient;
    IdempotentDecomposition decomposition;
    BasicAlgebraData basic;
    /// B·ē as a right module over the basic algebra P of B.
    CornerBimodule bimodule;
    /// Functional on P obtained from φ on B.
    LinFunc psi;
    bool annihilated = false;
    /// Values on the basis of A, by the closed-form transfers.
    Vec contribution;
    /// Values on the basis of A, by φ_W on the bimodule.
    Vec contribution_trace;
};

struct PseudotraceDecomposition {
    std::size_t s = 0;
    std::vector<PseudotraceSummand> summands;
    Vec reconstructed;
    Vec reconstructed_trace;
    bool exact = false;
};

/// Blocks whose functional vanishes contribute nothing and are omitted.
inline PseudotraceDecomposition decompose_as_pseudotraces(const AlgebraPtr& alg, const LinFunc& phi, const Vec& nu,
                                                          const Rational& r, std::optional<std::size_t> s,
                                                          std::vector<Vec> central_idempotents = {},
                                                          std::size_t budget = search_budget()) {
    const Algebra& a = *alg;
    a.require_element(nu);
    require_symmetric(a, phi, "decompose_as_pseudotraces");
    if (!a.is_central(nu)) throw InvalidInput("decompose_as_pseudotraces: nu is not central");
    Vec shifted = nu;
    axpy(shifted, -r, a.one());

    PseudotraceDecomposition out;
    if (s) {
        out.s = *s;
    } else {
        auto found = nilpotency_exponent(a, shifted);
        if (!found) throw InvalidInput("decompose_as_pseudotraces: nu - r is not nilpotent");
        out.s = *found;
    }
    Vec power = a.pow(shifted, out.s);
    for (std::size_t k = 0; k < a.dim(); ++k)
        if (sgn(phi(a.mul(power, a.basis(k)))) != 0)
            throw HypothesisViolation("NilpotentShift", "phi((nu - r)^s a) is nonzero for basis element " + a.name(k));

    if (central_idempotents.empty()) central_idempotents = central_blocks(a, primitive_idempotents(a, budget));
    out.reconstructed = a.zero();
    out.reconstructed_trace = a.zero();
    for (const auto& c : central_idempotents) {
        if (!a.is_idempotent(c) || !a.is_central(c)) throw InvalidInput("block element is not a central idempotent");
        LinFunc phi_block{Vec(a.dim())};
        for (std::size_t k = 0; k < a.dim(); ++k) phi_block.values[k] = phi(a.mul(c, a.basis(k)));
        if (phi_block.is_zero()) continue;

        SymmetricQuotient sq = symmetric_quotient(a, phi_block);
        const AlgebraPtr& b = sq.quotient.algebra;
        IdempotentDecomposition dec = primitive_idempotents(*b, budget);
        BasicAlgebraData basic = basic_algebra(*b, dec, budget);
        CornerBimodule bi = corner_bimodule(b, basic);

        PseudotraceSummand sum{c, phi_block, sq, dec, basic, bi, transfer_down(*b, sq.induced, basic)};
        sum.annihilated = bi.left_mult(sq.quotient.project(power)).is_zero();

        LinFunc up = transfer_up(*b, sum.psi, basic);
        LinFunc psi_trace = transfer_down_via_trace(b, sq.induced, basic);
        LinFunc up_trace = transfer_up_via_trace(b, psi_trace, basic);
        sum.contribution = Vec(a.dim());
        sum.contribution_trace = Vec(a.dim());
        for (std::size_t k = 0; k < a.dim(); ++k) {
            Vec image = sq.quotient.project(a.basis(k));
            sum.contribution[k] = up(image);
            sum.contribution_trace[k] = up_trace(image);
        }
        out.reconstructed = out.reconstructed + sum.contribution;
        out.reconstructed_trace = out.reconstructed_trace + sum.contribution_trace;
        out.summands.push_back(std::move(sum));
    }
    bool all_annihilated = true;
    for (const auto& sum : out.summands) all_annihilated = all_annihilated && sum.annihilated;
    out.exact = all_annihilated && out.reconstructed == phi.values && out.reconstructed_trace == phi.values;
    return out;
}

}  // namespace fdalg
