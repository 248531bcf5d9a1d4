#pragma once

// Finite-dimensional associative unital algebras over Q given by structure
// constants, with ideals, quotients, commutators and the center.
//
// Conventions. Algebra elements are coordinate vectors in the basis
// a_0..a_{n-1}. Linear maps between coordinate spaces are stored in row
// convention (v ↦ v·M) unless a function says otherwise; regular_reps()
// returns the textbook column-convention matrices.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fdalg/errors.hpp"
#include "fdalg/linalg.hpp"
#include "fdalg/rational.hpp"

namespace fdalg {

/// Raw structure constants, as read from JSON or built by a constructor.
struct AlgebraDef {
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
    /// mult[(i*dim + j)*dim + k] = coefficient of a_k in a_i·a_j.
    Vec mult;
    Vec one;

    Rational& c(std::size_t i, std::size_t j, std::size_t k) { return mult[(i * dim + j) * dim + k]; }
    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return mult[(i * dim + j) * dim + k]; }

    static AlgebraDef empty(std::size_t n) {
        AlgebraDef d;
        d.dim = n;
        d.mult = zero_vec(n * n * n);
        d.one = zero_vec(n);
        for (std::size_t i = 0; i < n; ++i) d.basis_names.push_back("a" + std::to_string(i));
        return d;
    }
};

struct Violation {
    enum class Kind { Shape, Associativity, Unity };
    Kind kind;
    std::size_t i = 0, j = 0, k = 0;
    std::string message;
};

inline std::string kind_name(Violation::Kind k) {
    switch (k) {
        case Violation::Kind::Shape: return "ShapeViolation";
        case Violation::Kind::Associativity: return "AssociativityViolation";
        case Violation::Kind::Unity: return "UnityViolation";
    }
    return "Violation";
}

class ValidationError : public Error {
public:
    explicit ValidationError(Violation v) : Error(v.message), violation(std::move(v)) {}
    Violation violation;
};

namespace detail {

inline Vec mul_raw(const AlgebraDef& d, const Vec& a, const Vec& b) {
    const std::size_t n = d.dim;
    Vec r = zero_vec(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(b[j]) == 0) continue;
            Rational ab = a[i] * b[j];
            const Rational* row = &d.mult[(i * n + j) * n];
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(row[k]) != 0) r[k] += ab * row[k];
        }
    }
    return r;
}

}  // namespace detail

/// First violation of associativity (a_i a_j)a_k = a_i(a_j a_k), then of
/// two-sided unity, if any.
inline std::optional<Violation> validate(const AlgebraDef& d) {
    const std::size_t n = d.dim;
    if (d.mult.size() != n * n * n || d.one.size() != n || d.basis_names.size() != n)
        return Violation{Violation::Kind::Shape, 0, 0, 0, "structure constant tensor, unity or names have the wrong size"};
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vec(n, i));
    std::vector<Vec> prod(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = Vec(d.mult.begin() + static_cast<std::ptrdiff_t>((i * n + j) * n),
                                                            d.mult.begin() + static_cast<std::ptrdiff_t>((i * n + j + 1) * n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (detail::mul_raw(d, prod[i * n + j], basis[k]) != detail::mul_raw(d, basis[i], prod[j * n + k]))
                    return Violation{Violation::Kind::Associativity, i, j, k,
                                     "(a_" + std::to_string(i) + " a_" + std::to_string(j) + ") a_" + std::to_string(k) +
                                         " != a_" + std::to_string(i) + " (a_" + std::to_string(j) + " a_" +
                                         std::to_string(k) + ")"};
            }
    for (std::size_t i = 0; i < n; ++i) {
        if (detail::mul_raw(d, d.one, basis[i]) != basis[i] || detail::mul_raw(d, basis[i], d.one) != basis[i])
            return Violation{Violation::Kind::Unity, i, 0, 0,
                             "unity does not act as identity on basis element " + std::to_string(i)};
    }
    return std::nullopt;
}

/// A validated algebra. Immutable; shared between modules and quotients
/// through AlgebraPtr.
class Algebra {
public:
    static std::shared_ptr<const Algebra> create(AlgebraDef def) {
        if (auto v = validate(def)) throw ValidationError(*v);
        return std::shared_ptr<const Algebra>(new Algebra(std::move(def)));
    }

    std::size_t dim() const { return def_.dim; }
    const AlgebraDef& def() const { return def_; }
    const std::string& name(std::size_t k) const { return def_.basis_names.at(k); }
    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return def_.c(i, j, k); }
    const Vec& one() const { return def_.one; }
    Vec basis(std::size_t k) const { return unit_vec(dim(), k); }
    Vec zero() const { return zero_vec(dim()); }

    /// The zero algebra is representable but most operations refuse it.
    bool is_zero() const { return dim() == 0; }

    void require_nonzero(const char* op) const {
        if (is_zero()) throw InvalidInput(std::string(op) + ": zero algebra");
    }

    Vec mul(const Vec& a, const Vec& b) const {
        require_element(a);
        require_element(b);
        return detail::mul_raw(def_, a, b);
    }

    Vec mul(const Vec& a, const Vec& b, const Vec& c) const { return mul(mul(a, b), c); }

    Vec commutator(const Vec& a, const Vec& b) const { return mul(a, b) - mul(b, a); }

    Vec pow(const Vec& a, std::size_t s) const {
        Vec r = one();
        for (std::size_t t = 0; t < s; ++t) r = mul(r, a);
        return r;
    }

    /// Row-convention matrix of x ↦ a·x.
    Matrix left_mult(const Vec& a) const {
        require_element(a);
        Matrix m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) m.set_row(j, mul(a, basis(j)));
        return m;
    }

    /// Row-convention matrix of x ↦ x·a.
    Matrix right_mult(const Vec& a) const {
        require_element(a);
        Matrix m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) m.set_row(j, mul(basis(j), a));
        return m;
    }

    bool is_idempotent(const Vec& e) const { return mul(e, e) == e; }

    bool is_central(const Vec& z) const {
        for (std::size_t i = 0; i < dim(); ++i)
            if (mul(z, basis(i)) != mul(basis(i), z)) return false;
        return true;
    }

    void require_element(const Vec& a) const {
        if (a.size() != dim()) throw InvalidInput("element does not belong to this algebra (coordinate length mismatch)");
    }

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.def_.dim == b.def_.dim && a.def_.mult == b.def_.mult && a.def_.one == b.def_.one;
    }

private:
    explicit Algebra(AlgebraDef d) : def_(std::move(d)) {}
    AlgebraDef def_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

struct RegularReps {
    std::vector<Matrix> left;
    std::vector<Matrix> right;
};

/// Column-convention matrices: left[i] has column j equal to a_i·a_j and
/// right[i] has column j equal to a_j·a_i. left is a homomorphism and right
/// an anti-homomorphism of algebras.
inline RegularReps regular_reps(const Algebra& alg) {
    RegularReps reps;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        reps.left.push_back(alg.left_mult(alg.basis(i)).transpose());
        reps.right.push_back(alg.right_mult(alg.basis(i)).transpose());
    }
    return reps;
}

/// Span of all a_i a_j − a_j a_i.
inline Subspace commutator_subspace(const Algebra& alg) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = i + 1; j < alg.dim(); ++j) rows.push_back(alg.commutator(alg.basis(i), alg.basis(j)));
    return Subspace::span(rows, alg.dim());
}

/// A/[A,A] together with its canonical section (standard basis vectors at
/// the non-pivot coordinates of [A,A]).
struct CommutatorQuotient {
    Subspace commutators;
    Subspace section;
    /// Row convention, n × dim(A/[A,A]).
    Matrix projection;
};

inline CommutatorQuotient commutator_quotient(const Algebra& alg) {
    CommutatorQuotient q;
    q.commutators = commutator_subspace(alg);
    q.section = complement_within(q.commutators, Subspace::full(alg.dim()));
    auto kept = q.commutators.non_pivots();
    q.projection = Matrix(alg.dim(), kept.size());
    for (std::size_t k = 0; k < alg.dim(); ++k) {
        Vec r = q.commutators.reduce(alg.basis(k));
        for (std::size_t t = 0; t < kept.size(); ++t) q.projection(k, t) = r[kept[t]];
    }
    return q;
}

/// {z : z·x = x·z for all x}.
inline Subspace center(const Algebra& alg) {
    const std::size_t n = alg.dim();
    // z ↦ z a_i − a_i z, stacked over i, as column-convention equations on z.
    Matrix eqs(n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix d = (alg.right_mult(alg.basis(i)) - alg.left_mult(alg.basis(i))).transpose();
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) eqs(i * n + r, c) = d(r, c);
    }
    return kernel_basis(eqs);
}

enum class Side { Left, Right };

/// Left: {x : a·x = 0}. Right: {x : x·a = 0}.
inline Subspace annihilator_of(const Algebra& alg, const Vec& a, Side side) {
    Matrix m = side == Side::Left ? alg.left_mult(a) : alg.right_mult(a);
    return left_kernel(m);
}

inline bool is_two_sided_ideal(const Algebra& alg, const Subspace& s) {
    if (s.ambient_dim() != alg.dim()) return false;
    for (std::size_t r = 0; r < s.dim(); ++r) {
        Vec x = s.basis_vector(r);
        for (std::size_t i = 0; i < alg.dim(); ++i)
            if (!s.contains(alg.mul(alg.basis(i), x)) || !s.contains(alg.mul(x, alg.basis(i)))) return false;
    }
    return true;
}

/// A subspace verified to be closed under multiplication by A on both sides.
class Ideal {
public:
    static Ideal verified(const Algebra& alg, Subspace s) {
        if (!is_two_sided_ideal(alg, s)) throw NotAnIdeal("subspace is not a two-sided ideal");
        return Ideal(std::move(s));
    }
    static Ideal zero(const Algebra& alg) { return Ideal(Subspace::zero(alg.dim())); }
    static Ideal whole(const Algebra& alg) { return Ideal(Subspace::full(alg.dim())); }

    const Subspace& space() const { return space_; }
    std::size_t dim() const { return space_.dim(); }
    bool contains(const Vec& v) const { return space_.contains(v); }

    friend bool operator==(const Ideal& a, const Ideal& b) { return a.space_ == b.space_; }

private:
    explicit Ideal(Subspace s) : space_(std::move(s)) {}
    Subspace space_;
};

/// Smallest two-sided ideal containing `elements`.
inline Ideal ideal_generated_by(const Algebra& alg, const std::vector<Vec>& elements) {
    Subspace cur = Subspace::span(elements, alg.dim());
    while (true) {
        std::vector<Vec> rows = cur.basis_vectors();
        const std::size_t before = cur.dim();
        for (std::size_t r = 0; r < before; ++r)
            for (std::size_t i = 0; i < alg.dim(); ++i) {
                rows.push_back(alg.mul(alg.basis(i), cur.basis_vector(r)));
                rows.push_back(alg.mul(cur.basis_vector(r), alg.basis(i)));
            }
        cur = Subspace::span(rows, alg.dim());
        if (cur.dim() == before) break;
    }
    return Ideal::verified(alg, cur);
}

/// Two-sided annihilator ideal of a. For central a the left and right
/// annihilators coincide and are ideals; otherwise NotAnIdeal is thrown.
inline Ideal annihilator_ideal(const Algebra& alg, const Vec& a, Side side) {
    return Ideal::verified(alg, annihilator_of(alg, a, side));
}

/// Span of products x·y with x ∈ u, y ∈ v.
inline Subspace product_space(const Algebra& alg, const Subspace& u, const Subspace& v) {
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < u.dim(); ++r)
        for (std::size_t s = 0; s < v.dim(); ++s) rows.push_back(alg.mul(u.basis_vector(r), v.basis_vector(s)));
    return Subspace::span(rows, alg.dim());
}

/// Span of {x·a_k·y : k}.
inline Subspace corner_space(const Algebra& alg, const Vec& x, const Vec& y) {
    std::vector<Vec> rows;
    for (std::size_t k = 0; k < alg.dim(); ++k) rows.push_back(alg.mul(x, alg.basis(k), y));
    return Subspace::span(rows, alg.dim());
}

struct QuotientAlgebra {
    AlgebraPtr algebra;
    /// Row convention, dim(A) × dim(A/I).
    Matrix projection;
    /// Row convention, dim(A/I) × dim(A); projection∘section = identity.
    Matrix section;
    /// Standard coordinates of A kept as the quotient basis.
    std::vector<std::size_t> kept;
    bool degenerate = false;

    Vec project(const Vec& a) const { return row_times(a, projection); }
    Vec lift(const Vec& b) const { return row_times(b, section); }
};

/// A/I on the basis given by the non-pivot standard coordinates of I.
inline QuotientAlgebra quotient_algebra(const Algebra& alg, const Ideal& ideal) {
    const Subspace& s = ideal.space();
    if (s.ambient_dim() != alg.dim()) throw InvalidInput("ideal belongs to a different algebra");
    QuotientAlgebra q;
    q.kept = s.non_pivots();
    const std::size_t m = q.kept.size();
    q.projection = Matrix(alg.dim(), m);
    for (std::size_t k = 0; k < alg.dim(); ++k) {
        Vec r = s.reduce(alg.basis(k));
        for (std::size_t t = 0; t < m; ++t) q.projection(k, t) = r[q.kept[t]];
    }
    q.section = Matrix(m, alg.dim());
    for (std::size_t t = 0; t < m; ++t) q.section(t, q.kept[t]) = 1;
    AlgebraDef d = AlgebraDef::empty(m);
    for (std::size_t t = 0; t < m; ++t) d.basis_names[t] = alg.name(q.kept[t]);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vec prod = q.project(alg.mul(alg.basis(q.kept[a]), alg.basis(q.kept[b])));
            for (std::size_t k = 0; k < m; ++k) d.c(a, b, k) = prod[k];
        }
    d.one = q.project(alg.one());
    q.algebra = Algebra::create(std::move(d));
    q.degenerate = m == 0;
    return q;
}

/// Algebra spanned by a subspace closed under multiplication, with unity
/// `unit` (which need not be the unity of A). Basis: the RREF rows.
struct SubAlgebra {
    AlgebraPtr algebra;
    Subspace space;
    /// Row convention, dim(sub) × dim(A).
    Matrix embedding;

    Vec embed(const Vec& x) const { return row_times(x, embedding); }
    Vec coordinates(const Vec& a) const { return space.coordinates(a); }
};

inline SubAlgebra subalgebra(const Algebra& alg, const Subspace& space, const Vec& unit,
                             const std::string& name_prefix = "b") {
    SubAlgebra sub;
    sub.space = space;
    sub.embedding = space.basis();
    const std::size_t m = space.dim();
    AlgebraDef d = AlgebraDef::empty(m);
    for (std::size_t t = 0; t < m; ++t) {
        Vec v = space.basis_vector(t);
        std::optional<std::size_t> single;
        std::size_t nz = 0;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (sgn(v[k]) != 0) {
                ++nz;
                single = k;
            }
        d.basis_names[t] = (nz == 1 && v[*single] == 1) ? alg.name(*single) : name_prefix + std::to_string(t);
    }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vec prod = alg.mul(space.basis_vector(a), space.basis_vector(b));
            if (!space.contains(prod)) throw InvalidInput("subspace is not closed under multiplication");
            Vec c = space.coordinates(prod);
            for (std::size_t k = 0; k < m; ++k) d.c(a, b, k) = c[k];
        }
    d.one = space.coordinates(unit);
    sub.algebra = Algebra::create(std::move(d));
    return sub;
}

/// Opposite algebra: same basis, a ∘ b = b·a.
inline AlgebraPtr opposite(const Algebra& alg) {
    AlgebraDef d = alg.def();
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) d.c(i, j, k) = alg.c(j, i, k);
    return Algebra::create(std::move(d));
}

}  // namespace fdalg
