#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "fdalg/errors.hpp"

namespace fdalg {

/// Exact rational number. GMP keeps every arithmetic result canonical
/// (gcd 1, positive denominator).
using Rational = mpq_class;

/// Dense vector of rationals; also used for algebra element coordinates.
using Vec = std::vector<Rational>;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw InvalidInput("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// "p/q", or "p" for integers.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

/// Accepts "p", "p/q", "-p/q" with optional surrounding blanks.
inline Rational parse_rational(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view s = trim(text);
    auto slash = s.find('/');
    std::string_view num = trim(s.substr(0, slash));
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
    if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
        throw InvalidInput("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    mpz_class p(n, 10), q(std::string(den), 10);
    if (q == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

inline Vec unit_vec(std::size_t n, std::size_t k) {
    Vec v = zero_vec(n);
    v.at(k) = 1;
    return v;
}

inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

inline Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InvalidInput("vector length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InvalidInput("vector length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec operator*(const Rational& s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline Vec& axpy(Vec& y, const Rational& s, const Vec& x) {
    if (x.size() != y.size()) throw InvalidInput("vector length mismatch");
    if (sgn(s) == 0) return y;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (sgn(x[i]) != 0) y[i] += s * x[i];
    return y;
}

inline Rational dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InvalidInput("vector length mismatch");
    Rational r = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) r += a[i] * b[i];
    return r;
}

}  // namespace fdalg
