#pragma once

// Exact dense linear algebra over Q: matrices, reduced row echelon form,
// kernels, linear solves and canonical subspaces.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fdalg/errors.hpp"
#include "fdalg/rational.hpp"

namespace fdalg {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Rows must share one length; `cols` is used when `rows` is empty.
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw InvalidInput("ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows) {
        std::size_t cols = rows.size() ? rows.begin()->size() : 0;
        Matrix m(rows.size(), cols);
        std::size_t i = 0;
        for (const auto& r : rows) {
            if (r.size() != cols) throw InvalidInput("ragged matrix rows");
            std::size_t j = 0;
            for (long x : r) m(i, j++) = x;
            ++i;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const {
        return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    Vec col(std::size_t c) const {
        Vec v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    void set_row(std::size_t r, const Vec& v) {
        if (v.size() != cols_) throw InvalidInput("row length mismatch");
        std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
    }

    std::vector<Vec> row_list() const {
        std::vector<Vec> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
        return out;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
    }

    bool is_square() const { return rows_ == cols_; }

    Rational trace() const {
        if (!is_square()) throw InvalidInput("trace of a non-square matrix");
        Rational t = 0;
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
        return r;
    }

    friend Matrix operator*(const Rational& s, const Matrix& a) {
        Matrix r = a;
        for (auto& x : r.data_) x *= s;
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw InvalidInput("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (sgn(aik) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (sgn(b(k, j)) != 0) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    Matrix& add_scaled(const Rational& s, const Matrix& b) {
        require_same_shape(b);
        if (sgn(s) == 0) return *this;
        for (std::size_t i = 0; i < data_.size(); ++i)
            if (sgn(b.data_[i]) != 0) data_[i] += s * b.data_[i];
        return *this;
    }

    /// Flattened row-major entries.
    const Vec& entries() const { return data_; }

    static Matrix from_entries(std::size_t rows, std::size_t cols, const Vec& entries) {
        if (entries.size() != rows * cols) throw InvalidInput("entry count does not match shape");
        Matrix m(rows, cols);
        m.data_ = entries;
        return m;
    }

private:
    void require_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw InvalidInput("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vec data_;
};

/// Row vector times matrix: v·M.
inline Vec row_times(const Vec& v, const Matrix& m) {
    if (v.size() != m.rows()) throw InvalidInput("row vector length does not match matrix rows");
    Vec r = zero_vec(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (sgn(v[i]) == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(i, j)) != 0) r[j] += v[i] * m(i, j);
    }
    return r;
}

/// Matrix times column vector: M·v.
inline Vec times_col(const Matrix& m, const Vec& v) {
    if (v.size() != m.cols()) throw InvalidInput("column vector length does not match matrix cols");
    Vec r = zero_vec(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(i, j)) != 0 && sgn(v[j]) != 0) r[i] += m(i, j) * v[j];
    return r;
}

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Gauss-Jordan elimination. Rows below `rank` of `reduced` are zero.
inline RrefResult rref(Matrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    RrefResult out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && sgn(m(piv, c)) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(piv, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < cols; ++j)
            if (sgn(m(r, j)) != 0) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(m);
    return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Canonical subspace of Q^n: the nonzero rows of a reduced row echelon
/// form. Two subspaces are equal iff their bases are identical.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace zero(std::size_t ambient) { return Subspace(ambient); }

    static Subspace full(std::size_t ambient) { return from_matrix(Matrix::identity(ambient)); }

    static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient) {
        return from_matrix(Matrix::from_rows(vectors, ambient));
    }

    static Subspace from_matrix(const Matrix& rows) {
        RrefResult rr = rref(rows);
        Subspace s(rows.cols());
        s.basis_ = Matrix(rr.rank, rows.cols());
        for (std::size_t i = 0; i < rr.rank; ++i)
            for (std::size_t j = 0; j < rows.cols(); ++j) s.basis_(i, j) = rr.reduced(i, j);
        s.pivots_ = std::move(rr.pivots);
        return s;
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    Vec basis_vector(std::size_t i) const { return basis_.row(i); }
    std::vector<Vec> basis_vectors() const { return basis_.row_list(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    std::vector<std::size_t> non_pivots() const {
        std::vector<std::size_t> out;
        std::size_t p = 0;
        for (std::size_t j = 0; j < ambient_; ++j) {
            if (p < pivots_.size() && pivots_[p] == j) {
                ++p;
                continue;
            }
            out.push_back(j);
        }
        return out;
    }

    /// v minus its component along the basis, read off at the pivots.
    /// Zero iff v lies in the subspace.
    Vec reduce(Vec v) const {
        require_ambient(v.size());
        for (std::size_t r = 0; r < basis_.rows(); ++r) {
            Rational f = v[pivots_[r]];
            if (sgn(f) == 0) continue;
            for (std::size_t j = 0; j < ambient_; ++j)
                if (sgn(basis_(r, j)) != 0) v[j] -= f * basis_(r, j);
        }
        return v;
    }

    bool contains(const Vec& v) const { return fdalg::is_zero(reduce(v)); }

    bool contains(const Subspace& other) const {
        require_ambient(other.ambient_);
        for (std::size_t r = 0; r < other.dim(); ++r)
            if (!contains(other.basis_vector(r))) return false;
        return true;
    }

    /// Coordinates of v with respect to the basis; v must lie in the subspace.
    Vec coordinates(const Vec& v) const {
        if (!contains(v)) throw InvalidInput("vector is not in the subspace");
        Vec c(dim());
        for (std::size_t r = 0; r < dim(); ++r) c[r] = v[pivots_[r]];
        return c;
    }

    Vec from_coordinates(const Vec& c) const {
        if (c.size() != dim()) throw InvalidInput("coordinate length mismatch");
        return row_times(c, basis_);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

private:
    void require_ambient(std::size_t n) const {
        if (n != ambient_) throw InvalidInput("ambient dimension mismatch");
    }

    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// {v : m·vᵀ = 0}.
inline Subspace kernel_basis(const Matrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<Vec> vecs;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v = zero_vec(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < rr.rank; ++r) v[rr.pivots[r]] = -rr.reduced(r, f);
        vecs.push_back(std::move(v));
    }
    return Subspace::span(vecs, m.cols());
}

/// Left kernel {y : y·m = 0}.
inline Subspace left_kernel(const Matrix& m) { return kernel_basis(m.transpose()); }

/// Inconsistent system m·x = rhs. The certificate y satisfies y·m = 0 and
/// y·rhs ≠ 0.
struct NoSolution {
    Vec certificate;
};

using SolveResult = std::variant<Vec, NoSolution>;

/// A particular solution of m·x = rhs (free variables set to zero).
inline SolveResult solve(const Matrix& m, const Vec& rhs) {
    if (rhs.size() != m.rows()) throw InvalidInput("right-hand side length does not match rows");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = rhs[i];
    }
    RrefResult rr = rref(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) {
        Subspace lk = left_kernel(m);
        for (std::size_t r = 0; r < lk.dim(); ++r) {
            Vec y = lk.basis_vector(r);
            if (sgn(dot(y, rhs)) != 0) return NoSolution{std::move(y)};
        }
        throw InternalError("inconsistent system without a left-kernel certificate");
    }
    Vec x = zero_vec(m.cols());
    for (std::size_t r = 0; r < rr.rank; ++r) x[rr.pivots[r]] = rr.reduced(r, m.cols());
    return x;
}

inline std::optional<Vec> try_solve(const Matrix& m, const Vec& rhs) {
    auto res = solve(m, rhs);
    if (auto* x = std::get_if<Vec>(&res)) return std::move(*x);
    return std::nullopt;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) throw InvalidInput("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    RrefResult rr = rref(aug);
    if (rr.rank < n || (n > 0 && rr.pivots[n - 1] != n - 1)) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.reduced(i, n + j);
    return inv;
}

inline bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

inline Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw InvalidInput("ambient dimension mismatch");
    std::vector<Vec> rows = u.basis_vectors();
    for (auto& r : v.basis_vectors()) rows.push_back(std::move(r));
    return Subspace::span(rows, u.ambient_dim());
}

/// Annihilator in the dual space, written in the same coordinates.
inline Subspace annihilator(const Subspace& u) {
    if (u.dim() == 0) return Subspace::full(u.ambient_dim());
    return kernel_basis(u.basis());
}

inline Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw InvalidInput("ambient dimension mismatch");
    Subspace both = sum(annihilator(u), annihilator(v));
    if (both.dim() == 0) return Subspace::full(u.ambient_dim());
    return kernel_basis(both.basis());
}

/// W with U ⊕ W = V, spanned by the basis vectors of V sitting at the
/// non-pivot positions of U written in V-coordinates.
inline Subspace complement_within(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw InvalidInput("ambient dimension mismatch");
    if (!v.contains(u)) throw InvalidInput("complement_within: U is not contained in V");
    std::vector<Vec> coords;
    for (std::size_t r = 0; r < u.dim(); ++r) coords.push_back(v.coordinates(u.basis_vector(r)));
    Subspace uc = Subspace::span(coords, v.dim());
    std::vector<Vec> picked;
    for (std::size_t j : uc.non_pivots()) picked.push_back(v.basis_vector(j));
    return Subspace::span(picked, v.ambient_dim());
}

/// Subspace spanned by the given vectors; an empty list gives zero.
inline Subspace span_of(const std::vector<Vec>& vectors, std::size_t ambient) {
    return Subspace::span(vectors, ambient);
}

/// Basis of {H : X_k·H = H·Y_k for all k}, H of shape dim(X) × dim(Y).
/// With row-convention actions this is the space of intertwiners.
inline std::vector<Matrix> intertwiners(const std::vector<Matrix>& xs, const std::vector<Matrix>& ys) {
    if (xs.size() != ys.size()) throw InvalidInput("intertwiners: action families differ in length");
    if (xs.empty()) throw InvalidInput("intertwiners: empty action family");
    const std::size_t m = xs.front().rows(), n = ys.front().rows();
    std::vector<Vec> rows;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const Matrix& x = xs[k];
        const Matrix& y = ys[k];
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                Vec eq = zero_vec(m * n);
                for (std::size_t a = 0; a < m; ++a)
                    if (sgn(x(r, a)) != 0) eq[a * n + c] += x(r, a);
                for (std::size_t b = 0; b < n; ++b)
                    if (sgn(y(b, c)) != 0) eq[r * n + b] -= y(b, c);
                if (!fdalg::is_zero(eq)) rows.push_back(std::move(eq));
            }
    }
    Subspace sol = rows.empty() ? Subspace::full(m * n) : kernel_basis(Matrix::from_rows(rows, m * n));
    std::vector<Matrix> out;
    for (std::size_t t = 0; t < sol.dim(); ++t) out.push_back(Matrix::from_entries(m, n, sol.basis_vector(t)));
    return out;
}

/// Linear combination Σ c_t M_t.
inline Matrix combine(const std::vector<Matrix>& ms, const Vec& coeffs, std::size_t rows, std::size_t cols) {
    if (ms.size() != coeffs.size()) throw InvalidInput("combine: coefficient count mismatch");
    Matrix r(rows, cols);
    for (std::size_t t = 0; t < ms.size(); ++t) r.add_scaled(coeffs[t], ms[t]);
    return r;
}

/// Rank of a family of matrices viewed as vectors.
inline std::size_t span_rank(const std::vector<Matrix>& ms) {
    if (ms.empty()) return 0;
    std::vector<Vec> rows;
    for (const auto& m : ms) rows.push_back(m.entries());
    return Subspace::span(rows, ms.front().entries().size()).dim();
}

}  // namespace fdalg
