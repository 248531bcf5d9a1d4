#pragma once

// JSON encoding of algebras, modules, functionals and endomorphisms.
// Rationals are always written as strings; on input both strings and
// integer numbers are accepted. Unknown keys are ignored.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fdalg/amodule.hpp"
#include "fdalg/linfunc.hpp"
#include "fdalg/zoo.hpp"
#include "json.hpp"

namespace fdalg::json {

using Json = nlohmann::ordered_json;

inline Json encode(const Rational& q) { return to_string(q); }

inline Json encode(const Vec& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(encode(q));
    return out;
}

inline Json encode(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(encode(m.row(r)));
    return out;
}

inline Rational decode_rational(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<long long>())));
    if (j.is_number_unsigned()) return Rational(mpz_class(std::to_string(j.get<unsigned long long>())));
    throw InvalidInput("expected a rational as a string or an integer, got " + j.dump());
}

inline Vec decode_vec(const Json& j, std::size_t expected, const std::string& what) {
    if (!j.is_array()) throw InvalidInput(what + ": expected an array");
    if (j.size() != expected)
        throw InvalidInput(what + ": expected " + std::to_string(expected) + " entries, got " + std::to_string(j.size()));
    Vec out;
    for (const auto& x : j) out.push_back(decode_rational(x));
    return out;
}

inline Matrix decode_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& what) {
    if (!j.is_array() || j.size() != rows)
        throw InvalidInput(what + ": expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) m.set_row(r, decode_vec(j[r], cols, what + " row " + std::to_string(r)));
    return m;
}

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline Json read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput("malformed JSON in " + path.string() + ": " + e.what());
    }
}

inline void write_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path.string());
    out << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------

inline Json encode(const AlgebraDef& d) {
    Json out;
    out["dim"] = d.dim;
    out["basis_names"] = d.basis_names;
    out["one"] = encode(d.one);
    Json mult = Json::array();
    for (std::size_t i = 0; i < d.dim; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < d.dim; ++j) {
            Vec c(d.dim);
            for (std::size_t k = 0; k < d.dim; ++k) c[k] = d.c(i, j, k);
            row.push_back(encode(c));
        }
        mult.push_back(std::move(row));
    }
    out["mult"] = std::move(mult);
    return out;
}

/// Shape-checked but not validated; see Algebra::create.
inline AlgebraDef decode_algebra_def(const Json& j) {
    const Json& dim_j = field(j, "dim");
    if (!dim_j.is_number_integer() || dim_j.get<long long>() < 0) throw InvalidInput("dim must be a non-negative integer");
    const auto n = static_cast<std::size_t>(dim_j.get<long long>());
    AlgebraDef d = AlgebraDef::empty(n);
    if (j.contains("basis_names")) {
        const Json& names = j.at("basis_names");
        if (!names.is_array() || names.size() != n) throw InvalidInput("basis_names must list one name per basis element");
        for (std::size_t i = 0; i < n; ++i) {
            if (!names[i].is_string()) throw InvalidInput("basis names must be strings");
            d.basis_names[i] = names[i].get<std::string>();
        }
    }
    d.one = decode_vec(field(j, "one"), n, "one");
    const Json& mult = field(j, "mult");
    if (!mult.is_array() || mult.size() != n) throw InvalidInput("mult must be an n×n×n array");
    for (std::size_t i = 0; i < n; ++i) {
        if (!mult[i].is_array() || mult[i].size() != n) throw InvalidInput("mult must be an n×n×n array");
        for (std::size_t jj = 0; jj < n; ++jj) {
            Vec c = decode_vec(mult[i][jj], n, "mult[" + std::to_string(i) + "][" + std::to_string(jj) + "]");
            for (std::size_t k = 0; k < n; ++k) d.c(i, jj, k) = c[k];
        }
    }
    return d;
}

inline AlgebraPtr decode_algebra(const Json& j) { return Algebra::create(decode_algebra_def(j)); }

inline Json encode(const Violation& v) {
    Json out;
    out["kind"] = kind_name(v.kind);
    out["i"] = v.i;
    out["j"] = v.j;
    out["k"] = v.k;
    out["message"] = v.message;
    return out;
}

// ---------------------------------------------------------------------------

inline Json encode(const LinFunc& f) { return Json{{"values", encode(f.values)}}; }

inline LinFunc decode_linfunc(const Json& j, const Algebra& alg) {
    return LinFunc{decode_vec(field(j, "values"), alg.dim(), "values")};
}

/// Module with the algebra inline.
inline Json encode(const RightModule& m) {
    Json out;
    out["algebra"] = encode(m.algebra()->def());
    out["dim"] = m.dim();
    Json act = Json::array();
    for (const auto& a : m.action()) act.push_back(encode(a));
    out["action"] = std::move(act);
    return out;
}

/// Module with the algebra given as a file reference.
inline Json encode(const RightModule& m, const std::string& algebra_ref) {
    Json out = encode(m);
    out["algebra"] = algebra_ref;
    return out;
}

/// `base` resolves a string "algebra" reference. If `expected` is given the
/// module must be over an equal algebra, and shares its pointer.
inline RightModule decode_module(const Json& j, const std::filesystem::path& base, const AlgebraPtr& expected = nullptr) {
    AlgebraPtr alg;
    if (!j.contains("algebra")) {
        if (!expected) throw InvalidInput("module has no algebra and none was supplied");
        alg = expected;
    } else if (const Json& a = j.at("algebra"); a.is_string()) {
        std::filesystem::path ref = a.get<std::string>();
        alg = decode_algebra(read_file(ref.is_absolute() ? ref : base / ref));
    } else {
        alg = decode_algebra(a);
    }
    if (expected) {
        if (!(*alg == *expected)) throw InvalidInput("module is over a different algebra");
        alg = expected;
    }
    const Json& dim_j = field(j, "dim");
    if (!dim_j.is_number_integer() || dim_j.get<long long>() < 0) throw InvalidInput("module dim must be a non-negative integer");
    const auto m = static_cast<std::size_t>(dim_j.get<long long>());
    const Json& act = field(j, "action");
    if (!act.is_array() || act.size() != alg->dim()) throw InvalidInput("action must hold one matrix per algebra basis element");
    std::vector<Matrix> action;
    for (std::size_t k = 0; k < alg->dim(); ++k) action.push_back(decode_matrix(act[k], m, m, "action[" + std::to_string(k) + "]"));
    return RightModule::create(alg, m, std::move(action));
}

inline Matrix decode_endo(const Json& j, const RightModule& w) {
    const Json& body = j.is_object() ? field(j, "matrix") : j;
    Matrix h = decode_matrix(body, w.dim(), w.dim(), "endomorphism");
    require_hom(w, w, h, "endomorphism");
    return h;
}

// ---------------------------------------------------------------------------

/// Algebra plus canonical φ, notes and named modules in one document.
inline Json encode(const ZooEntry& e, const std::vector<NamedModule>& modules) {
    Json out = encode(e.def);
    out["name"] = e.name;
    if (e.canonical_phi) out["canonical_phi"] = encode(*e.canonical_phi);
    Json notes;
    notes["symmetric"] = e.notes.symmetric;
    notes["basic"] = e.notes.basic;
    notes["indecomposable"] = e.notes.indecomposable;
    notes["split"] = e.notes.split;
    if (!e.notes.convention.empty()) notes["composition"] = e.notes.convention;
    out["notes"] = std::move(notes);
    Json mods = Json::object();
    for (const auto& nm : modules) {
        Json m;
        m["dim"] = nm.module.dim();
        Json act = Json::array();
        for (const auto& a : nm.module.action()) act.push_back(encode(a));
        m["action"] = std::move(act);
        mods[nm.name] = std::move(m);
    }
    out["modules"] = std::move(mods);
    return out;
}

}  // namespace fdalg::json
