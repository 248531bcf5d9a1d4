#pragma once

// A fixed catalogue of small algebras with known structure, used as test
// inputs and as CLI samples, plus the standard modules built over them.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fdalg/amodule.hpp"
#include "fdalg/linfunc.hpp"
#include "fdalg/structure.hpp"

namespace fdalg {

struct ZooNotes {
    bool symmetric = false;
    bool basic = false;
    bool indecomposable = false;
    bool split = true;
    /// Composition convention for path algebras; empty otherwise.
    std::string convention;
};

struct ZooEntry {
    std::string name;
    AlgebraDef def;
    std::optional<LinFunc> canonical_phi;
    ZooNotes notes;

    AlgebraPtr algebra() const { return Algebra::create(def); }
};

/// ℚ[x]/(x^n) on 1, x, ..., x^{n−1}; φ is the dual of x^{n−1}.
inline ZooEntry truncated_polynomial(std::size_t n) {
    if (n < 1) throw InvalidInput("truncated_polynomial: n must be at least 1");
    AlgebraDef d = AlgebraDef::empty(n);
    for (std::size_t i = 0; i < n; ++i) {
        d.basis_names[i] = i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i);
        for (std::size_t j = 0; i + j < n; ++j) d.c(i, j, i + j) = 1;
    }
    d.one = unit_vec(n, 0);
    return ZooEntry{"trunc-" + std::to_string(n), std::move(d), dual_basis_functional(n, n - 1),
                    ZooNotes{true, true, true, true, ""}};
}

/// ℚ[C_m] on g^0, ..., g^{m−1}; φ is the coefficient of the identity.
inline ZooEntry group_algebra_cyclic(std::size_t m) {
    if (m < 1) throw InvalidInput("group_algebra_cyclic: m must be at least 1");
    AlgebraDef d = AlgebraDef::empty(m);
    for (std::size_t i = 0; i < m; ++i) {
        d.basis_names[i] = i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i);
        for (std::size_t j = 0; j < m; ++j) d.c(i, j, (i + j) % m) = 1;
    }
    d.one = unit_vec(m, 0);
    return ZooEntry{"cyclic-" + std::to_string(m), std::move(d), dual_basis_functional(m, 0),
                    ZooNotes{true, true, m == 1, m <= 2, ""}};
}

/// ℚS₃ on e, (12), (13), (23), (123), (132), with (στ)(x) = σ(τ(x)).
inline ZooEntry group_algebra_S3() {
    using Perm = std::array<int, 3>;
    const std::vector<Perm> perms{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    const std::vector<std::string> names{"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
    auto index = [&](const Perm& p) {
        for (std::size_t t = 0; t < perms.size(); ++t)
            if (perms[t] == p) return t;
        throw InternalError("not a permutation of three points");
    };
    AlgebraDef d = AlgebraDef::empty(6);
    d.basis_names = names;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            Perm comp{};
            for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
            d.c(i, j, index(comp)) = 1;
        }
    d.one = unit_vec(6, 0);
    return ZooEntry{"qs3", std::move(d), dual_basis_functional(6, 0), ZooNotes{true, false, false, true, ""}};
}

/// M_n(ℚ) on matrix units E_ij in row-major order; φ is the trace.
inline ZooEntry matrix_algebra(std::size_t n) {
    if (n < 1) throw InvalidInput("matrix_algebra: n must be at least 1");
    const std::size_t dim = n * n;
    AlgebraDef d = AlgebraDef::empty(dim);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            d.basis_names[i * n + j] = "E" + std::to_string(i + 1) + std::to_string(j + 1);
            for (std::size_t l = 0; l < n; ++l) d.c(i * n + j, j * n + l, i * n + l) = 1;
        }
    d.one = zero_vec(dim);
    LinFunc trace{zero_vec(dim)};
    for (std::size_t i = 0; i < n; ++i) {
        d.one[i * n + i] = 1;
        trace.values[i * n + i] = 1;
    }
    return ZooEntry{"matrix-" + std::to_string(n), std::move(d), trace, ZooNotes{true, n == 1, true, true, ""}};
}

/// Upper triangular n×n matrices on E_ij (i ≤ j), row-major.
inline ZooEntry upper_triangular(std::size_t n) {
    if (n < 1) throw InvalidInput("upper_triangular: n must be at least 1");
    std::vector<std::pair<std::size_t, std::size_t>> units;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) units.emplace_back(i, j);
    const std::size_t dim = units.size();
    auto index = [&](std::size_t i, std::size_t j) {
        for (std::size_t t = 0; t < dim; ++t)
            if (units[t] == std::make_pair(i, j)) return t;
        throw InternalError("matrix unit outside the triangle");
    };
    AlgebraDef d = AlgebraDef::empty(dim);
    d.one = zero_vec(dim);
    for (std::size_t a = 0; a < dim; ++a) {
        auto [i, j] = units[a];
        d.basis_names[a] = "E" + std::to_string(i + 1) + std::to_string(j + 1);
        if (i == j) d.one[a] = 1;
        for (std::size_t b = 0; b < dim; ++b)
            if (units[b].first == j) d.c(a, b, index(i, units[b].second)) = 1;
    }
    return ZooEntry{"upper-" + std::to_string(n), std::move(d), std::nullopt, ZooNotes{n == 1, true, true, true, ""}};
}

/// Path algebra of the two-vertex cycle α: 1 → 2, β: 2 → 1 modulo
/// αβα = βαβ = 0, on e₁, e₂, α, β, αβ, βα. Paths compose left to right:
/// αβ is "α then β" and e₁α = α = αe₂.
inline ZooEntry zigzag_2() {
    enum { E1, E2, A, B, AB, BA };
    AlgebraDef d = AlgebraDef::empty(6);
    d.basis_names = {"e1", "e2", "alpha", "beta", "alpha*beta", "beta*alpha"};
    // Source and target vertex of each basis path.
    const int src[] = {0, 1, 0, 1, 0, 1};
    const int tgt[] = {0, 1, 1, 0, 0, 1};
    for (int p = 0; p < 6; ++p) {
        d.c(src[p] == 0 ? E1 : E2, p, p) = 1;
        d.c(p, tgt[p] == 0 ? E1 : E2, p) = 1;
    }
    d.c(A, B, AB) = 1;
    d.c(B, A, BA) = 1;
    d.one = {1, 1, 0, 0, 0, 0};
    LinFunc phi{{0, 0, 0, 0, 1, 1}};
    return ZooEntry{"n2", std::move(d), phi, ZooNotes{true, true, true, true, "left-to-right path composition"}};
}

/// Direct product; bases are concatenated and names prefixed by the part
/// number. φ is the sum of the parts' φ when every part has one.
inline ZooEntry product(const std::vector<ZooEntry>& parts) {
    if (parts.empty()) throw InvalidInput("product: need at least one factor");
    std::size_t dim = 0;
    for (const auto& p : parts) dim += p.def.dim;
    AlgebraDef d = AlgebraDef::empty(dim);
    d.one = zero_vec(dim);
    std::optional<LinFunc> phi = LinFunc{zero_vec(dim)};
    ZooNotes notes{true, true, parts.size() == 1, true, ""};
    std::string name;
    std::size_t off = 0;
    for (std::size_t t = 0; t < parts.size(); ++t) {
        const auto& p = parts[t];
        const std::size_t n = p.def.dim;
        for (std::size_t i = 0; i < n; ++i) {
            d.basis_names[off + i] = std::to_string(t + 1) + "." + p.def.basis_names[i];
            d.one[off + i] = p.def.one[i];
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) d.c(off + i, off + j, off + k) = p.def.c(i, j, k);
        }
        if (phi && p.canonical_phi) {
            for (std::size_t i = 0; i < n; ++i) phi->values[off + i] = p.canonical_phi->values[i];
        } else {
            phi.reset();
        }
        notes.symmetric = notes.symmetric && p.notes.symmetric;
        notes.basic = notes.basic && p.notes.basic;
        notes.indecomposable = notes.indecomposable && p.notes.indecomposable;
        notes.split = notes.split && p.notes.split;
        name += (t ? "x" : "") + p.name;
        off += n;
    }
    return ZooEntry{name, std::move(d), phi, notes};
}

/// Short names: t3, u2, m2, qs3, n2, c3, m2xt3, and the families trunc-N,
/// cyclic-M, matrix-N, upper-N.
inline std::vector<std::string> zoo_names() { return {"t3", "u2", "m2", "qs3", "n2", "c3", "m2xt3"}; }

inline ZooEntry zoo_entry(const std::string& name) {
    auto with_name = [&](ZooEntry e) {
        e.name = name;
        return e;
    };
    if (name == "t3") return with_name(truncated_polynomial(3));
    if (name == "u2") return with_name(upper_triangular(2));
    if (name == "m2") return with_name(matrix_algebra(2));
    if (name == "qs3") return group_algebra_S3();
    if (name == "n2") return zigzag_2();
    if (name == "c3") return with_name(group_algebra_cyclic(3));
    if (name == "m2xt3") return with_name(product({matrix_algebra(2), truncated_polynomial(3)}));
    auto family = [&](const std::string& prefix) -> std::optional<std::size_t> {
        if (name.rfind(prefix, 0) != 0) return std::nullopt;
        std::string rest = name.substr(prefix.size());
        if (rest.empty() || rest.size() > 3 || rest.find_first_not_of("0123456789") != std::string::npos)
            throw InvalidInput("bad zoo parameter in '" + name + "'");
        return static_cast<std::size_t>(std::stoul(rest));
    };
    if (auto n = family("trunc-")) return truncated_polynomial(*n);
    if (auto n = family("cyclic-")) return group_algebra_cyclic(*n);
    if (auto n = family("matrix-")) return matrix_algebra(*n);
    if (auto n = family("upper-")) return upper_triangular(*n);
    throw InvalidInput("unknown zoo entry '" + name + "'");
}

// ---------------------------------------------------------------------------
// Modules.

inline RightModule regular(const ZooEntry& entry) { return regular_module(entry.algebra()); }

inline std::vector<RightModule> simple_quotients(const AlgebraPtr& alg, const IdempotentDecomposition& dec) {
    return simple_modules(alg, dec);
}

/// e_bA for one idempotent per block.
inline std::vector<RightModule> indecomposable_projectives(const AlgebraPtr& alg, const IdempotentDecomposition& dec) {
    std::vector<RightModule> out;
    for (std::size_t b = 0; b < dec.block_count(); ++b) out.push_back(right_ideal_module(alg, dec.representative(b)).module);
    return out;
}

/// One of the non-projective candidates (non-projective simples, then J),
/// picked by `seed` modulo their number. Throws for semisimple algebras.
inline RightModule random_nonprojective(const AlgebraPtr& alg, const IdempotentDecomposition& dec, std::size_t seed = 0) {
    std::vector<RightModule> candidates;
    for (auto& s : simple_modules(alg, dec))
        if (!is_projective(s)) candidates.push_back(std::move(s));
    Ideal rad = radical(*alg);
    if (!rad.space().is_zero()) {
        RightModule j = submodule(regular_module(alg), rad.space()).module;
        if (!is_projective(j)) candidates.push_back(std::move(j));
    }
    if (candidates.empty()) throw InvalidInput("every module over this algebra is projective");
    return candidates[seed % candidates.size()];
}

struct NamedModule {
    std::string name;
    RightModule module;
};

/// regular, each e_bA (when e_b ≠ 1), e_1A ⊕ A, J (when nonzero), and each
/// simple.
inline std::vector<NamedModule> standard_modules(const AlgebraPtr& alg, const IdempotentDecomposition& dec) {
    std::vector<NamedModule> out;
    RightModule reg = regular_module(alg);
    out.push_back({"regular", reg});
    auto proj = indecomposable_projectives(alg, dec);
    for (std::size_t b = 0; b < proj.size(); ++b)
        if (dec.representative(b) != alg->one()) out.push_back({"e" + std::to_string(b + 1) + "A", proj[b]});
    out.push_back({"e1A+A", direct_sum(alg, {proj.front(), reg}).module});
    Ideal rad = radical(*alg);
    if (!rad.space().is_zero()) out.push_back({"J", submodule(reg, rad.space()).module});
    auto simples = simple_modules(alg, dec);
    for (std::size_t b = 0; b < simples.size(); ++b) out.push_back({"simple" + std::to_string(b + 1), simples[b]});
    return out;
}

}  // namespace fdalg
