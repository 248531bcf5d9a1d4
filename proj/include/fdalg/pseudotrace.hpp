#pragma once

// Pseudotraces on a basic indecomposable symmetric algebra (P, φ): the
// socle dual basis f_i, an adapted basis Ω of P, the interlocked test,
// splitting a projective module into copies of e_iP, and the pseudotrace
// of an endomorphism compared against φ_W.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fdalg/slf.hpp"

namespace fdalg {

struct SymmetricContext {
    AlgebraPtr algebra;
    LinFunc phi;
    std::vector<Vec> idempotents;
    /// f_i ∈ Soc(P) with φ(f_i e_j) = δ_ij.
    std::vector<Vec> socle_duals;
    GramForm gram;
    Ideal radical;
    Subspace socle;
    /// d_ij = dim e_iJe_j − dim e_iSoc e_j.
    std::vector<std::vector<std::size_t>> d;

    std::size_t k() const { return idempotents.size(); }
};

namespace detail {

/// span{x j y : j ∈ U}.
inline Subspace sandwich(const Algebra& p, const Vec& x, const Subspace& u, const Vec& y) {
    std::vector<Vec> rows;
    for (std::size_t t = 0; t < u.dim(); ++t) rows.push_back(p.mul(x, u.basis_vector(t), y));
    return span_of(rows, p.dim());
}

}  // namespace detail

/// Validates the standing hypotheses and computes f_i and d_ij.
/// `idempotents` overrides the computed primitive idempotents when given.
inline SymmetricContext build_context(const AlgebraPtr& alg, const LinFunc& phi,
                                      std::optional<std::vector<Vec>> idempotents = std::nullopt,
                                      std::size_t budget = search_budget()) {
    const Algebra& p = *alg;
    p.require_nonzero("build_context");
    if (phi.values.size() != p.dim()) throw InvalidInput("build_context: functional length does not match algebra");
    if (!is_symmetric(p, phi)) throw HypothesisViolation("NotSymmetric", "phi does not vanish on [P,P]");

    IdempotentDecomposition dec = primitive_idempotents(p, budget);
    for (const auto& block : dec.blocks)
        if (block.size() != 1)
            throw HypothesisViolation("NotBasic", "a simple module of P occurs " + std::to_string(block.size()) +
                                                      " times in P/J(P)");
    if (idempotents) {
        IdempotentDecomposition given;
        given.idempotents = *idempotents;
        for (std::size_t t = 0; t < given.idempotents.size(); ++t) {
            p.require_element(given.idempotents[t]);
            given.block_of.push_back(t);
            given.blocks.push_back({t});
        }
        if (!is_valid_decomposition(p, given))
            throw InvalidInput("build_context: supplied idempotents are not a complete primitive orthogonal set");
        if (given.size() != dec.size()) throw InvalidInput("build_context: wrong number of idempotents");
        dec = std::move(given);
    }
    if (central_blocks(p, dec).size() != 1)
        throw HypothesisViolation("NotIndecomposable", "P has a nontrivial central idempotent");

    GramForm gram = gram_form(p, phi);
    if (!is_invertible(gram.matrix)) throw HypothesisViolation("DegenerateForm", "Rad(phi) is nonzero");
    for (std::size_t i = 0; i < dec.size(); ++i)
        if (sgn(phi(dec.idempotents[i])) != 0)
            throw HypothesisViolation("PhiNonzeroOnIdempotent",
                                      "phi(e_" + std::to_string(i + 1) + ") = " + to_string(phi(dec.idempotents[i])));

    SymmetricContext ctx{alg, phi, dec.idempotents, {}, gram, radical(p), socle(p, Side::Right), {}};
    const std::size_t k = ctx.k();
    const Subspace left_soc = socle(p, Side::Left, ctx.radical);
    if (!(left_soc == ctx.socle)) throw InternalError("left and right socles differ for a symmetric algebra");
    if (!ctx.radical.space().contains(ctx.socle)) throw InternalError("socle is not contained in the radical");

    // φ(f e_j) for f ranging over the socle basis.
    Matrix sys(k, ctx.socle.dim());
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t t = 0; t < ctx.socle.dim(); ++t)
            sys(j, t) = phi(p.mul(ctx.socle.basis_vector(t), ctx.idempotents[j]));
    for (std::size_t i = 0; i < k; ++i) {
        auto c = try_solve(sys, unit_vec(k, i));
        if (!c) throw InternalError("no socle element dual to e_" + std::to_string(i + 1));
        ctx.socle_duals.push_back(ctx.socle.from_coordinates(*c));
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const Vec& e = ctx.idempotents[i];
            const Vec& f = ctx.socle_duals[j];
            Vec expect = i == j ? f : p.zero();
            if (p.mul(e, f) != expect || p.mul(f, e) != expect) throw InternalError("socle duals are not adapted to the idempotents");
        }

    ctx.d.assign(k, std::vector<std::size_t>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const Vec& ei = ctx.idempotents[i];
            const Vec& ej = ctx.idempotents[j];
            std::size_t dj = detail::sandwich(p, ei, ctx.radical.space(), ej).dim();
            std::size_t ds = detail::sandwich(p, ei, ctx.socle, ej).dim();
            ctx.d[i][j] = dj - ds;
            std::size_t corner = corner_space(p, ei, ej).dim();
            if (corner != (i == j ? ctx.d[i][j] + 2 : ctx.d[i][j]))
                throw InternalError("corner dimension does not match d_ij");
        }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (ctx.d[i][j] != ctx.d[j][i]) throw InternalError("d_ij is not symmetric");
    return ctx;
}

// ---------------------------------------------------------------------------
// Adapted basis Ω.

struct OmegaReport {
    bool a = false;
    bool b = false;
    bool phi_vanishes = false;
    bool basis_of_p = false;
    bool basis_of_radical = false;
    bool c = false;
    bool d = false;
    bool e_left = false;
    bool e_right = false;
    std::string note;

    bool weak_pass() const { return a && b && phi_vanishes && basis_of_p && basis_of_radical; }
};

enum class OmegaMode { Weak, Full };

struct OmegaBasis {
    /// blocks[i][j] = Ω_ij in index order; Ω_ii starts with e_i and ends
    /// with f_i.
    std::vector<std::vector<std::vector<Vec>>> blocks;
    /// True when the pairing normalization succeeded for every block.
    bool full = false;
    OmegaReport report;

    std::size_t k() const { return blocks.size(); }

    /// Ω_i = ∪_j Ω_ij, a basis of e_iP.
    std::vector<Vec> row(std::size_t i) const {
        std::vector<Vec> out;
        for (const auto& blk : blocks.at(i)) out.insert(out.end(), blk.begin(), blk.end());
        return out;
    }

    /// Position of f_i inside row(i).
    std::size_t f_position(std::size_t i) const {
        std::size_t pos = 0;
        for (std::size_t j = 0; j < i; ++j) pos += blocks[i][j].size();
        return pos + blocks[i][i].size() - 1;
    }

    std::vector<Vec> all() const {
        std::vector<Vec> out;
        for (std::size_t i = 0; i < k(); ++i) {
            auto r = row(i);
            out.insert(out.end(), r.begin(), r.end());
        }
        return out;
    }

    /// Index s of the element at position `pos` of Ω_ij.
    static std::size_t index_of(std::size_t i, std::size_t j, std::size_t pos) { return i == j ? pos : pos + 1; }
};

namespace detail {

inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational out{rn, rd};
    out.canonicalize();
    return out;
}

/// Rebases a space carrying a nondegenerate symmetric pairing so that its
/// Gram matrix is the anti-identity: ⟨ρ_s, ρ_{d+1−t}⟩ = δ_st. Recursively
/// peels off hyperbolic pairs from isotropic vectors found by bounded
/// search; a single leftover vector needs its square to be a rational
/// square.
inline std::optional<std::vector<Vec>> antidiagonal_basis(const Algebra& p, const LinFunc& phi, std::vector<Vec> basis,
                                                          std::size_t& budget) {
    auto pair = [&](const Vec& x, const Vec& y) { return phi(p.mul(x, y)); };
    const std::size_t d = basis.size();
    if (d == 0) return std::vector<Vec>{};
    if (d == 1) {
        Rational g = pair(basis[0], basis[0]);
        if (sgn(g) == 0) return std::nullopt;
        auto root = rational_sqrt(g);
        if (!root) return std::nullopt;
        return std::vector<Vec>{Rational(1 / *root) * basis[0]};
    }
    static const int digits[] = {0, 1, -1, 2, -2};
    std::vector<int> code(d, 0);
    std::optional<Vec> iso;
    while (budget > 0) {
        std::size_t pos = d;
        while (pos-- > 0) {
            if (++code[pos] < 5) break;
            code[pos] = 0;
        }
        if (pos == static_cast<std::size_t>(-1)) break;
        --budget;
        Vec x = zero_vec(p.dim());
        for (std::size_t t = 0; t < d; ++t)
            if (code[t] != 0) axpy(x, Rational(digits[code[t]]), basis[t]);
        if (sgn(pair(x, x)) == 0) {
            iso = std::move(x);
            break;
        }
    }
    if (!iso) return std::nullopt;
    const Vec& x = *iso;
    std::optional<Vec> y0;
    for (const auto& b : basis) {
        Rational v = pair(x, b);
        if (sgn(v) != 0) {
            y0 = Rational(1 / v) * b;
            break;
        }
    }
    if (!y0) return std::nullopt;
    Vec y = *y0;
    axpy(y, -pair(*y0, *y0) / 2, x);
    // Orthogonal complement of {x, y} inside the span of `basis`.
    Matrix eqs(d, 2);
    for (std::size_t t = 0; t < d; ++t) {
        eqs(t, 0) = pair(x, basis[t]);
        eqs(t, 1) = pair(y, basis[t]);
    }
    Subspace rest_coords = left_kernel(eqs);
    std::vector<Vec> rest;
    for (std::size_t r = 0; r < rest_coords.dim(); ++r) {
        Vec v = zero_vec(p.dim());
        Vec c = rest_coords.basis_vector(r);
        for (std::size_t t = 0; t < d; ++t)
            if (sgn(c[t]) != 0) axpy(v, c[t], basis[t]);
        rest.push_back(std::move(v));
    }
    auto inner = antidiagonal_basis(p, phi, std::move(rest), budget);
    if (!inner) return std::nullopt;
    std::vector<Vec> out{x};
    out.insert(out.end(), inner->begin(), inner->end());
    out.push_back(std::move(y));
    return out;
}

inline OmegaReport evaluate_omega(const SymmetricContext& ctx, const OmegaBasis& omega) {
    const Algebra& p = *ctx.algebra;
    const std::size_t k = ctx.k();
    auto pair = [&](const Vec& x, const Vec& y) { return ctx.phi(p.mul(x, y)); };
    OmegaReport rep;

    rep.a = true;
    rep.phi_vanishes = true;
    for (std::size_t i = 0; i < k; ++i) {
        const auto& blk = omega.blocks[i][i];
        rep.a = rep.a && blk.size() == ctx.d[i][i] + 2 && blk.front() == ctx.idempotents[i] && blk.back() == ctx.socle_duals[i];
        for (std::size_t s = 1; s + 1 < blk.size(); ++s) rep.phi_vanishes = rep.phi_vanishes && sgn(ctx.phi(blk[s])) == 0;
    }
    rep.b = true;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (const auto& rho : omega.blocks[i][j])
                rep.b = rep.b && p.mul(ctx.idempotents[i], rho, ctx.idempotents[j]) == rho;

    auto all = omega.all();
    rep.basis_of_p = all.size() == p.dim() && span_of(all, p.dim()).dim() == p.dim();
    std::vector<Vec> tail;
    for (const auto& v : all) {
        bool is_e = false;
        for (const auto& e : ctx.idempotents) is_e = is_e || v == e;
        if (!is_e) tail.push_back(v);
    }
    Subspace tail_span = span_of(tail, p.dim());
    rep.basis_of_radical = tail.size() == ctx.radical.dim() && tail_span == ctx.radical.space();

    // ⟨ρ_s^{ij}, ρ_{d_ab+1−t}^{ab}⟩ = δ_{i,b} δ_{j,a} δ_{s,t}.
    rep.c = true;
    rep.d = true;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const auto& left = omega.blocks[i][j];
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b) {
                    const auto& right = omega.blocks[a][b];
                    const std::size_t top = ctx.d[a][b] + 1;
                    for (std::size_t ps = 0; ps < left.size(); ++ps)
                        for (std::size_t pt = 0; pt < right.size(); ++pt) {
                            std::size_t s = OmegaBasis::index_of(i, j, ps);
                            std::size_t idx = OmegaBasis::index_of(a, b, pt);
                            std::size_t t = top - idx;
                            Rational expect = (i == b && j == a && s == t) ? 1 : 0;
                            if (pair(left[ps], right[pt]) != expect) rep.c = false;
                        }
                }
            // ρ_s^{ij} ρ_{d_ji+1−s}^{ji} = f_i.
            const auto& back = omega.blocks[j][i];
            for (std::size_t ps = 0; ps < left.size(); ++ps) {
                std::size_t s = OmegaBasis::index_of(i, j, ps);
                std::size_t t = ctx.d[j][i] + 1 - s;
                std::size_t pt = i == j ? t : t - 1;
                if (pt >= back.size() || p.mul(left[ps], back[pt]) != ctx.socle_duals[i]) rep.d = false;
            }
        }

    // span{ρ_t^{ij} : t ≥ s} under e_iPe_i on the left and e_jPe_j on the right.
    rep.e_left = true;
    rep.e_right = true;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const auto& blk = omega.blocks[i][j];
            Subspace left_corner = corner_space(p, ctx.idempotents[i], ctx.idempotents[i]);
            Subspace right_corner = corner_space(p, ctx.idempotents[j], ctx.idempotents[j]);
            for (std::size_t start = 0; start < blk.size(); ++start) {
                std::vector<Vec> part(blk.begin() + static_cast<std::ptrdiff_t>(start), blk.end());
                Subspace span = span_of(part, p.dim());
                for (std::size_t u = 0; u < left_corner.dim(); ++u)
                    for (const auto& v : part) {
                        if (!span.contains(p.mul(left_corner.basis_vector(u), v))) rep.e_left = false;
                    }
                for (std::size_t u = 0; u < right_corner.dim(); ++u)
                    for (const auto& v : part) {
                        if (!span.contains(p.mul(v, right_corner.basis_vector(u)))) rep.e_right = false;
                    }
            }
        }
    return rep;
}

}  // namespace detail

inline OmegaBasis build_omega(const SymmetricContext& ctx, OmegaMode mode = OmegaMode::Full,
                              std::size_t budget = search_budget()) {
    const Algebra& p = *ctx.algebra;
    const std::size_t k = ctx.k();
    OmegaBasis omega;
    omega.blocks.assign(k, std::vector<std::vector<Vec>>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const Vec& ei = ctx.idempotents[i];
            const Vec& ej = ctx.idempotents[j];
            Subspace jij = detail::sandwich(p, ei, ctx.radical.space(), ej);
            auto& blk = omega.blocks[i][j];
            if (i != j) {
                blk = jij.basis_vectors();
                continue;
            }
            const Vec& f = ctx.socle_duals[i];
            Subspace mid = complement_within(Subspace::span({f}, p.dim()), jij);
            blk.push_back(ei);
            for (std::size_t t = 0; t < mid.dim(); ++t) {
                Vec rho = mid.basis_vector(t);
                axpy(rho, -ctx.phi(rho), f);
                blk.push_back(std::move(rho));
            }
            blk.push_back(f);
        }

    if (mode == OmegaMode::Full) {
        OmegaBasis trial = omega;
        bool ok = true;
        std::string note;
        for (std::size_t i = 0; i < k && ok; ++i)
            for (std::size_t j = i + 1; j < k && ok; ++j) {
                const auto& src = trial.blocks[i][j];
                const auto& other = omega.blocks[j][i];
                const std::size_t d = src.size();
                Matrix g(d, d);
                for (std::size_t s = 0; s < d; ++s)
                    for (std::size_t u = 0; u < d; ++u) g(s, u) = ctx.phi(p.mul(src[s], other[u]));
                auto ginv = inverse(g);
                if (!ginv) {
                    ok = false;
                    note = "corner pairing is degenerate";
                    break;
                }
                // σ_t with ⟨ρ_s, σ_t⟩ = δ_st, stored at position d−1−t.
                std::vector<Vec> dual(d);
                for (std::size_t t = 0; t < d; ++t) {
                    Vec sigma = zero_vec(p.dim());
                    for (std::size_t u = 0; u < d; ++u) axpy(sigma, (*ginv)(u, t), other[u]);
                    dual[d - 1 - t] = std::move(sigma);
                }
                trial.blocks[j][i] = std::move(dual);
            }
        for (std::size_t i = 0; i < k && ok; ++i) {
            auto& blk = trial.blocks[i][i];
            std::vector<Vec> mid(blk.begin() + 1, blk.end() - 1);
            std::size_t left = budget;
            auto normalized = detail::antidiagonal_basis(p, ctx.phi, std::move(mid), left);
            if (!normalized) {
                ok = false;
                note = "no anti-diagonal basis found over Q for the middle of block " + std::to_string(i + 1);
                break;
            }
            std::vector<Vec> rebuilt{blk.front()};
            rebuilt.insert(rebuilt.end(), normalized->begin(), normalized->end());
            rebuilt.push_back(blk.back());
            blk = std::move(rebuilt);
        }
        if (ok) {
            omega = std::move(trial);
            omega.full = true;
        }
        omega.report = detail::evaluate_omega(ctx, omega);
        omega.report.note = ok ? "" : note;
    } else {
        omega.report = detail::evaluate_omega(ctx, omega);
    }
    if (!omega.report.weak_pass()) throw InternalError("adapted basis fails its guaranteed properties");
    return omega;
}

// ---------------------------------------------------------------------------
// Interlocked modules.

struct InterlockReport {
    /// Per idempotent: ker(·f_i) equals WJ + Σ_{j≠i} We_j.
    std::vector<bool> per_idempotent;
    std::vector<std::size_t> kernel_dims;
    std::vector<std::size_t> span_dims;
    bool interlocked = false;
};

inline InterlockReport is_interlocked(const SymmetricContext& ctx, const RightModule& w) {
    if (!(*w.algebra() == *ctx.algebra)) throw InvalidInput("is_interlocked: module is over a different algebra");
    InterlockReport rep;
    rep.interlocked = true;
    Subspace wj = submodule_times_ideal(w, ctx.radical.space());
    for (std::size_t i = 0; i < ctx.k(); ++i) {
        Subspace ker = left_kernel(w.act_matrix(ctx.socle_duals[i]));
        Subspace rhs = wj;
        for (std::size_t j = 0; j < ctx.k(); ++j) {
            if (j == i) continue;
            rhs = sum(rhs, Subspace::from_matrix(w.act_matrix(ctx.idempotents[j])));
        }
        if (!ker.contains(rhs)) throw InternalError("WJ + sum of We_j is not inside ker(f_i)");
        bool eq = ker == rhs;
        rep.per_idempotent.push_back(eq);
        rep.kernel_dims.push_back(ker.dim());
        rep.span_dims.push_back(rhs.dim());
        rep.interlocked = rep.interlocked && eq;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Decomposition of projective modules.

struct ProjectiveGenerator {
    std::size_t idempotent = 0;
    /// v·e_i, in W coordinates.
    Vec element;
};

struct ProjectiveDecomposition {
    std::vector<std::size_t> multiplicities;
    std::vector<ProjectiveGenerator> generators;
    /// θ_g : e_iP → W on the RREF basis of e_iP.
    std::vector<Matrix> injections;
    /// W → P, the coordinate of w in the g-th summand, as an element of e_iP.
    std::vector<Matrix> projections;
};

/// Left-over invariant subspace with W·f_i = 0 for every i.
struct ResidualNotProjective {
    Subspace residual;
    std::vector<std::size_t> partial_multiplicities;
};

using DecompositionResult = std::variant<ProjectiveDecomposition, ResidualNotProjective>;

enum class GeneratorChoice { First, Last };

inline DecompositionResult decompose_projective(const SymmetricContext& ctx, const RightModule& w,
                                                GeneratorChoice choice = GeneratorChoice::First) {
    if (!(*w.algebra() == *ctx.algebra)) throw InvalidInput("decompose_projective: module is over a different algebra");
    const Algebra& p = *ctx.algebra;
    const std::size_t k = ctx.k();
    std::vector<Submodule> ideals;
    for (const auto& e : ctx.idempotents) ideals.push_back(right_ideal_module(ctx.algebra, e));

    ProjectiveDecomposition dec;
    dec.multiplicities.assign(k, 0);
    Subspace rest = Subspace::full(w.dim());
    while (!rest.is_zero()) {
        std::optional<std::pair<std::size_t, Vec>> pick;
        for (std::size_t i = 0; i < k && !pick; ++i) {
            const std::size_t n = rest.dim();
            for (std::size_t step = 0; step < n; ++step) {
                std::size_t t = choice == GeneratorChoice::First ? step : n - 1 - step;
                Vec v = rest.basis_vector(t);
                if (!is_zero(w.act(v, ctx.socle_duals[i]))) {
                    pick.emplace(i, std::move(v));
                    break;
                }
            }
        }
        if (!pick) return ResidualNotProjective{rest, dec.multiplicities};

        const std::size_t i = pick->first;
        Vec g = w.act(pick->second, ctx.idempotents[i]);
        const Subspace& eip = ideals[i].space;
        Matrix theta(eip.dim(), w.dim());
        for (std::size_t t = 0; t < eip.dim(); ++t) theta.set_row(t, w.act(g, eip.basis_vector(t)));
        if (rank(theta) != eip.dim()) throw InternalError("map from e_iP is not injective");

        Submodule sub = submodule(w, rest);
        Matrix theta_local(eip.dim(), rest.dim());
        for (std::size_t t = 0; t < eip.dim(); ++t) theta_local.set_row(t, rest.coordinates(theta.row(t)));
        auto homs = hom_space(sub.module, ideals[i].module);
        const std::size_t m = eip.dim(), h = homs.size();
        Matrix sys(m * m, h);
        Vec rhs(m * m);
        for (std::size_t u = 0; u < h; ++u) {
            Matrix comp = theta_local * homs[u];
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < m; ++c) sys(r * m + c, u) = comp(r, c);
        }
        for (std::size_t r = 0; r < m; ++r) rhs[r * m + r] = 1;
        auto coeffs = try_solve(sys, rhs);
        if (!coeffs) throw InternalError("embedding of e_iP does not split");
        Matrix retraction = combine(homs, *coeffs, rest.dim(), m);
        Subspace ker_local = left_kernel(retraction);
        std::vector<Vec> next;
        for (std::size_t r = 0; r < ker_local.dim(); ++r) next.push_back(rest.from_coordinates(ker_local.basis_vector(r)));
        rest = span_of(next, w.dim());

        dec.generators.push_back(ProjectiveGenerator{i, g});
        dec.injections.push_back(std::move(theta));
        ++dec.multiplicities[i];
    }

    std::vector<Vec> rows;
    for (const auto& inj : dec.injections)
        for (std::size_t r = 0; r < inj.rows(); ++r) rows.push_back(inj.row(r));
    Matrix basis = Matrix::from_rows(rows, w.dim());
    auto inv = inverse(basis);
    if (!inv) throw InternalError("summands do not give a basis of W");
    std::size_t offset = 0;
    for (std::size_t gi = 0; gi < dec.generators.size(); ++gi) {
        const Subspace& eip = ideals[dec.generators[gi].idempotent].space;
        Matrix proj(w.dim(), p.dim());
        for (std::size_t x = 0; x < w.dim(); ++x) {
            Vec coords(eip.dim());
            for (std::size_t t = 0; t < eip.dim(); ++t) coords[t] = (*inv)(x, offset + t);
            proj.set_row(x, eip.from_coordinates(coords));
        }
        offset += eip.dim();
        dec.projections.push_back(std::move(proj));
    }
    for (std::size_t i = 0; i < k; ++i)
        if (dec.multiplicities[i] != rank(w.act_matrix(ctx.socle_duals[i])))
            throw InternalError("multiplicity differs from dim W f_i");
    return dec;
}

/// Σ over generators of the f_i-coefficient of α(v) in the basis {v ρ}.
inline Rational miyamoto_trace(const SymmetricContext& ctx, const OmegaBasis& omega, const ProjectiveDecomposition& dec,
                               const RightModule& w, const Matrix& alpha) {
    if (!(*w.algebra() == *ctx.algebra)) throw InvalidInput("miyamoto_trace: module is over a different algebra");
    require_hom(w, w, alpha, "miyamoto_trace: alpha");
    std::vector<Vec> rows;
    std::vector<std::size_t> f_index;
    for (const auto& gen : dec.generators) {
        auto row = omega.row(gen.idempotent);
        f_index.push_back(rows.size() + omega.f_position(gen.idempotent));
        for (const auto& rho : row) rows.push_back(w.act(gen.element, rho));
    }
    auto inv = inverse(Matrix::from_rows(rows, w.dim()));
    if (!inv) throw InternalError("{v rho} is not a basis of W");
    Rational total = 0;
    for (std::size_t g = 0; g < dec.generators.size(); ++g) {
        Vec coords = row_times(row_times(dec.generators[g].element, alpha), *inv);
        total += coords[f_index[g]];
    }
    return total;
}

/// The coordinate system {v_j^{e_i}, α_j^i} attached to a decomposition.
inline CoordinateSystem decomposition_coordinates(const ProjectiveDecomposition& dec) {
    CoordinateSystem cs;
    for (std::size_t g = 0; g < dec.generators.size(); ++g) {
        cs.elements.push_back(dec.generators[g].element);
        cs.functionals.push_back(dec.projections[g]);
    }
    return cs;
}

struct EqualityCheck {
    Rational pseudo;
    Rational phi_w;
    Rational phi_w_free_cover;

    bool agree() const { return pseudo == phi_w && phi_w == phi_w_free_cover; }
};

inline EqualityCheck check_equality_theorem(const SymmetricContext& ctx, const OmegaBasis& omega, const RightModule& w,
                                            const Matrix& alpha) {
    auto res = decompose_projective(ctx, w);
    if (std::holds_alternative<ResidualNotProjective>(res))
        throw NotProjectiveError("module is not projective: a nonzero residual is killed by every f_i");
    const auto& dec = std::get<ProjectiveDecomposition>(res);
    CoordinateSystem cs = decomposition_coordinates(dec);
    if (!is_coordinate_system(w, cs)) throw InternalError("decomposition does not give a coordinate system");
    EqualityCheck out;
    out.pseudo = miyamoto_trace(ctx, omega, dec, w, alpha);
    out.phi_w = phi_W(ctx.phi, w, cs, alpha);
    out.phi_w_free_cover = phi_W(ctx.phi, w, coordinates_of(w), alpha);
    return out;
}

inline EqualityCheck check_equality_theorem(const SymmetricContext& ctx, const RightModule& w, const Matrix& alpha) {
    return check_equality_theorem(ctx, build_omega(ctx), w, alpha);
}

}  // namespace fdalg
