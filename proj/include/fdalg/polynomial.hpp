#pragma once

// Univariate polynomials over Q as coefficient vectors (constant term
// first). Only what the idempotent machinery needs: minimal polynomials of
// algebra elements and their rational roots.

#include <algorithm>
#include <string>
#include <vector>

#include "fdalg/algebra.hpp"

namespace fdalg {

using Poly = Vec;

inline std::string poly_to_string(const Poly& p) {
    std::string out;
    for (std::size_t d = p.size(); d-- > 0;) {
        if (sgn(p[d]) == 0) continue;
        Rational c = p[d];
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        bool unit = c == 1;
        if (!unit || d == 0) out += to_string(c);
        if (d >= 1) out += (unit ? "" : "*") + std::string("x");
        if (d >= 2) out += "^" + std::to_string(d);
    }
    return out.empty() ? "0" : out;
}

inline Rational poly_eval(const Poly& p, const Rational& x) {
    Rational r = 0;
    for (std::size_t d = p.size(); d-- > 0;) r = r * x + p[d];
    return r;
}

/// Divides by (x − root), which must be a root.
inline Poly deflate(const Poly& p, const Rational& root) {
    if (p.size() < 2) throw InvalidInput("deflate: constant polynomial");
    Poly q(p.size() - 1);
    Rational carry = 0;
    for (std::size_t d = p.size(); d-- > 1;) {
        carry = carry * root + p[d];
        q[d - 1] = carry;
    }
    return q;
}

/// Monic minimal polynomial of a over Q, found from the first linear
/// dependency among 1, a, a², ...
inline Poly minimal_polynomial(const Algebra& alg, const Vec& a) {
    std::vector<Vec> powers{alg.one()};
    while (true) {
        Vec next = alg.mul(powers.back(), a);
        Matrix cols = Matrix::from_rows(powers, alg.dim()).transpose();
        if (auto c = try_solve(cols, next)) {
            Poly p(powers.size() + 1);
            for (std::size_t d = 0; d < powers.size(); ++d) p[d] = -(*c)[d];
            p.back() = 1;
            return p;
        }
        powers.push_back(std::move(next));
        if (powers.size() > alg.dim() + 1) throw InternalError("minimal polynomial degree exceeds dimension");
    }
}

namespace detail {

inline std::vector<mpz_class> positive_divisors(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        mpz_class e = n / d;
        if (e != d) large.push_back(e);
    }
    std::reverse(large.begin(), large.end());
    small.insert(small.end(), large.begin(), large.end());
    return small;
}

}  // namespace detail

/// Rational roots with multiplicity, ascending, plus the part of p left
/// after dividing them out (degree 0 iff p splits over Q).
struct RationalRoots {
    std::vector<Rational> roots;
    Poly remainder;
};

inline RationalRoots rational_roots(Poly p) {
    while (p.size() > 1 && sgn(p.back()) == 0) p.pop_back();
    RationalRoots out;
    auto integer_coeffs = [](const Poly& q) {
        mpz_class l = 1;
        for (const auto& c : q) l = lcm(l, mpz_class(c.get_den()));
        std::vector<mpz_class> z;
        for (const auto& c : q) z.push_back(mpz_class(c * l));
        return z;
    };
    while (p.size() > 1) {
        if (sgn(p[0]) == 0) {
            out.roots.push_back(0);
            p = deflate(p, 0);
            continue;
        }
        auto z = integer_coeffs(p);
        bool found = false;
        for (const auto& num : detail::positive_divisors(z.front())) {
            for (const auto& den : detail::positive_divisors(z.back())) {
                for (int s : {-1, 1}) {
                    Rational cand{mpz_class(s * num), den};
                    cand.canonicalize();
                    if (sgn(poly_eval(p, cand)) == 0) {
                        out.roots.push_back(cand);
                        p = deflate(p, cand);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.remainder = p;
    return out;
}

}  // namespace fdalg
