#pragma once

// Command-line front end. Every command prints one JSON document on the
// output stream; errors are JSON too, with the exit codes
// 0 ok, 1 verification failure, 2 invalid input or usage, 3 not split over Q,
// 4 not projective, 5 hypothesis violated.

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fdalg/json_io.hpp"
#include "fdalg/pseudotrace.hpp"
#include "fdalg/slf.hpp"
#include "fdalg/structure.hpp"
#include "fdalg/verify.hpp"
#include "fdalg/zoo.hpp"

namespace fdalg::cli {

using json::Json;

enum ExitCode { kOk = 0, kVerificationFailed = 1, kInvalid = 2, kNotSplit = 3, kNotProjective = 4, kHypothesis = 5 };

/// Ends a command with a JSON payload and an exit code.
struct Outcome {
    Json payload;
    int code = kOk;
};

namespace detail {

inline std::filesystem::path parent_of(const std::string& file) {
    auto p = std::filesystem::path(file).parent_path();
    return p.empty() ? std::filesystem::path(".") : p;
}

inline AlgebraPtr load_algebra(const std::string& file) { return json::decode_algebra(json::read_file(file)); }

/// Reads a functional file, or the canonical_phi of a zoo document.
inline LinFunc load_phi(const std::string& file, const Algebra& alg) {
    Json j = json::read_file(file);
    if (!j.contains("values") && j.contains("canonical_phi")) return json::decode_linfunc(j.at("canonical_phi"), alg);
    return json::decode_linfunc(j, alg);
}

/// Reads a module file; zoo documents need `name` to pick one module.
inline RightModule load_module(const std::string& file, const std::string& name, const AlgebraPtr& alg) {
    Json j = json::read_file(file);
    if (j.contains("modules")) {
        if (name.empty()) throw InvalidInput("module file holds several modules; pass --module-name");
        const Json& mods = j.at("modules");
        if (!mods.contains(name)) throw InvalidInput("no module named '" + name + "'");
        return json::decode_module(mods.at(name), parent_of(file), alg);
    }
    return json::decode_module(j, parent_of(file), alg);
}

inline Vec parse_element(const std::string& text, const Algebra& alg) {
    Vec out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        out.push_back(parse_rational(item));
    }
    alg.require_element(out);
    return out;
}

inline Json encode_subspace(const Subspace& s) {
    Json out = Json::array();
    for (std::size_t r = 0; r < s.dim(); ++r) out.push_back(json::encode(s.basis_vector(r)));
    return out;
}

inline Json encode_vectors(const std::vector<Vec>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) out.push_back(json::encode(v));
    return out;
}

inline Json encode_report(const OmegaReport& r) {
    Json out;
    out["a"] = r.a;
    out["b"] = r.b;
    out["phi_vanishes_on_middle"] = r.phi_vanishes;
    out["basis_of_algebra"] = r.basis_of_p;
    out["basis_of_radical"] = r.basis_of_radical;
    out["c"] = r.c;
    out["d"] = r.d;
    out["e_left"] = r.e_left;
    out["e_right"] = r.e_right;
    if (!r.note.empty()) out["note"] = r.note;
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Commands.

inline Outcome cmd_analyze(const std::string& file) {
    AlgebraPtr alg = detail::load_algebra(file);
    const Algebra& a = *alg;
    a.require_nonzero("analyze");
    Json out;
    out["dim"] = a.dim();
    out["basis_names"] = a.def().basis_names;
    Ideal rad = radical(a);
    out["radical_dim"] = rad.dim();
    out["radical_basis"] = detail::encode_subspace(rad.space());
    Subspace soc_r = socle(a, Side::Right, rad), soc_l = socle(a, Side::Left, rad);
    out["socle_right_dim"] = soc_r.dim();
    out["socle_left_dim"] = soc_l.dim();
    out["center_dim"] = center(a).dim();
    out["commutator_dim"] = commutator_subspace(a).dim();
    out["slf_dim"] = slf_basis(a).size();

    IdempotentDecomposition dec = primitive_idempotents(a);
    std::vector<Vec> central = central_blocks(a, dec);
    out["blocks"] = central.size();
    out["simple_types"] = dec.block_count();
    out["idempotents"] = detail::encode_vectors(dec.idempotents);
    out["idempotent_types"] = dec.block_of;
    out["central_idempotents"] = detail::encode_vectors(central);
    BasicAlgebraData basic = basic_algebra(a, dec);
    out["basic_dim"] = basic.algebra()->dim();
    out["basic_idempotent"] = json::encode(basic.e);
    out["basic_algebra"] = json::encode(basic.algebra()->def());

    SymmetricFormResult sym = find_symmetric_form(a);
    out["symmetric"] = sym.verdict == SymmetricVerdict::Found;
    out["symmetric_verdict"] = verdict_name(sym.verdict);
    if (sym.phi) out["symmetric_phi"] = json::encode(*sym.phi);
    if (!sym.reason.empty()) out["symmetric_reason"] = sym.reason;
    out["candidates_tried"] = sym.candidates_tried;
    return {out, kOk};
}

struct SlfOptions {
    std::string algebra;
    std::string phi;
    std::string nu;
    std::string r = "0";
};

inline Outcome cmd_slf(const SlfOptions& opt) {
    AlgebraPtr alg = detail::load_algebra(opt.algebra);
    const Algebra& a = *alg;
    Json out;
    auto basis = slf_basis(a);
    out["slf_dim"] = basis.size();
    out["commutator_dim"] = commutator_subspace(a).dim();
    Json b = Json::array();
    for (const auto& f : basis) b.push_back(json::encode(f));
    out["basis"] = std::move(b);
    if (opt.phi.empty()) return {out, kOk};

    LinFunc phi = detail::load_phi(opt.phi, a);
    out["symmetric"] = is_symmetric(a, phi);
    if (!is_symmetric(a, phi)) return {out, kOk};
    out["nondegenerate"] = is_nondegenerate(a, phi);
    Ideal rad = rad_phi(a, phi);
    out["rad_phi_dim"] = rad.dim();
    out["rad_phi_basis"] = detail::encode_subspace(rad.space());
    if (!a.is_zero()) {
        IdempotentDecomposition dec = primitive_idempotents(a);
        BasicAlgebraData basic = basic_algebra(a, dec);
        out["transfer_down"] = json::encode(transfer_down(a, phi, basic));
    }
    if (!opt.nu.empty()) {
        Vec nu = detail::parse_element(opt.nu, a);
        NuDeformation d = nu_deformation(a, phi, nu, parse_rational(opt.r));
        Json nd;
        nd["s"] = d.s;
        nd["kernel_dim"] = d.kernel.dim();
        nd["kernel_basis"] = detail::encode_subspace(d.kernel.space());
        nd["quotient"] = json::encode(d.quotient.algebra->def());
        nd["phi_prime"] = json::encode(d.phi_prime);
        out["nu_deformation"] = std::move(nd);
    }
    return {out, kOk};
}

struct PseudotraceOptions {
    std::string algebra;
    std::string phi;
    std::string module;
    std::string module_name;
    std::string endo;
};

inline Outcome cmd_pseudotrace(const PseudotraceOptions& opt) {
    AlgebraPtr alg = detail::load_algebra(opt.algebra);
    LinFunc phi = detail::load_phi(opt.phi, *alg);
    RightModule w = detail::load_module(opt.module, opt.module_name, alg);
    SymmetricContext ctx = build_context(alg, phi);
    OmegaBasis omega = build_omega(ctx);

    Json out;
    InterlockReport il = is_interlocked(ctx, w);
    out["interlocked"] = il.interlocked;
    out["interlocked_per_idempotent"] = il.per_idempotent;
    auto res = decompose_projective(ctx, w);
    if (auto* bad = std::get_if<ResidualNotProjective>(&res)) {
        out["error"] = "NotProjective";
        out["residual_dim"] = bad->residual.dim();
        out["residual_basis"] = detail::encode_subspace(bad->residual);
        out["partial_multiplicities"] = bad->partial_multiplicities;
        return {out, kNotProjective};
    }
    const auto& dec = std::get<ProjectiveDecomposition>(res);
    out["multiplicities"] = dec.multiplicities;

    std::vector<Matrix> endos;
    if (!opt.endo.empty()) {
        endos.push_back(json::decode_endo(json::read_file(opt.endo), w));
    } else {
        endos = hom_space(w, w);
    }
    Json pseudo = Json::array(), phiw = Json::array(), phiw_free = Json::array();
    bool equal = true;
    for (const auto& e : endos) {
        EqualityCheck eq = check_equality_theorem(ctx, omega, w, e);
        pseudo.push_back(to_string(eq.pseudo));
        phiw.push_back(to_string(eq.phi_w));
        phiw_free.push_back(to_string(eq.phi_w_free_cover));
        equal = equal && eq.agree();
    }
    if (!opt.endo.empty()) {
        out["pseudotrace"] = pseudo[0];
        out["phi_W"] = phiw[0];
        out["phi_W_free_cover"] = phiw_free[0];
    } else {
        out["endo_basis_dim"] = endos.size();
        out["pseudotrace"] = std::move(pseudo);
        out["phi_W"] = std::move(phiw);
        out["phi_W_free_cover"] = std::move(phiw_free);
    }
    out["equal"] = equal;
    out["omega_full"] = omega.full;
    out["omega_report"] = detail::encode_report(omega.report);
    return {out, equal ? kOk : kVerificationFailed};
}

inline Outcome cmd_verify(const std::string& suite, const std::string& algebra_file, const std::string& phi_file) {
    std::vector<std::string> ids;
    if (suite == "all") {
        ids = verify::suite_ids();
    } else {
        auto known = verify::suite_ids();
        if (std::find(known.begin(), known.end(), suite) == known.end())
            throw InvalidInput("unknown suite '" + suite + "'");
        ids.push_back(suite);
    }
    std::optional<verify::Target> user;
    if (!algebra_file.empty()) {
        AlgebraPtr alg = detail::load_algebra(algebra_file);
        std::optional<LinFunc> phi;
        if (!phi_file.empty()) {
            phi = detail::load_phi(phi_file, *alg);
        } else {
            Json j = json::read_file(algebra_file);
            if (j.contains("canonical_phi")) phi = json::decode_linfunc(j.at("canonical_phi"), *alg);
        }
        user = verify::Target{std::filesystem::path(algebra_file).stem().string(), alg, phi};
    }
    Json suites = Json::array();
    bool failed = false;
    std::size_t checks = 0;
    for (const auto& id : ids) {
        verify::SuiteReport rep = verify::run_suite(id, user);
        failed = failed || rep.failed();
        checks += rep.checks.size();
        suites.push_back(verify::to_json(rep));
    }
    Json out;
    out["suites"] = std::move(suites);
    out["checks"] = checks;
    out["all_passed"] = !failed;
    return {out, failed ? kVerificationFailed : kOk};
}

inline Outcome cmd_zoo(const std::string& name, const std::string& emit, const std::string& emit_dir, bool list) {
    if (list || name.empty()) {
        Json out;
        out["entries"] = zoo_names();
        out["families"] = std::vector<std::string>{"trunc-N", "cyclic-M", "matrix-N", "upper-N"};
        return {out, kOk};
    }
    ZooEntry e = zoo_entry(name);
    AlgebraPtr alg = e.algebra();
    std::vector<NamedModule> modules;
    if (e.notes.split) {
        modules = standard_modules(alg, primitive_idempotents(*alg));
    } else {
        modules.push_back({"regular", regular_module(alg)});
    }
    Json doc = json::encode(e, modules);
    if (!emit.empty()) json::write_file(emit, doc);
    Json written = Json::array();
    if (!emit_dir.empty()) {
        std::filesystem::path dir = emit_dir;
        std::filesystem::create_directories(dir);
        const std::string alg_file = name + ".json";
        Json alg_doc = json::encode(e.def);
        if (!e.notes.convention.empty()) alg_doc["composition"] = e.notes.convention;
        json::write_file(dir / alg_file, alg_doc);
        written.push_back((dir / alg_file).string());
        if (e.canonical_phi) {
            json::write_file(dir / (name + ".phi.json"), json::encode(*e.canonical_phi));
            written.push_back((dir / (name + ".phi.json")).string());
        }
        for (const auto& m : modules) {
            auto file = dir / (name + "." + m.name + ".module.json");
            json::write_file(file, json::encode(m.module, alg_file));
            written.push_back(file.string());
        }
    }
    if (emit.empty() && emit_dir.empty()) return {doc, kOk};
    Json out;
    out["name"] = name;
    if (!emit.empty()) out["emitted"] = emit;
    if (!emit_dir.empty()) out["files"] = std::move(written);
    return {out, kOk};
}

// ---------------------------------------------------------------------------

inline std::string utc_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream ss;
    ss << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return ss.str();
}

/// Maps library errors to JSON payloads and exit codes.
inline Outcome run_guarded(const std::function<Outcome()>& body) {
    try {
        return body();
    } catch (const ValidationError& e) {
        return {Json{{"error", kind_name(e.violation.kind)}, {"violation", json::encode(e.violation)}}, kInvalid};
    } catch (const NotSplitOverQ& e) {
        return {Json{{"error", "NotSplitOverQ"}, {"minimal_polynomial", e.minimal_polynomial}, {"message", e.what()}},
                kNotSplit};
    } catch (const NotProjectiveError& e) {
        return {Json{{"error", "NotProjective"}, {"message", e.what()}}, kNotProjective};
    } catch (const HypothesisViolation& e) {
        return {Json{{"error", e.hypothesis}, {"message", e.what()}}, kHypothesis};
    } catch (const InvalidInput& e) {
        return {Json{{"error", "InvalidInput"}, {"message", e.what()}}, kInvalid};
    } catch (const NotAnIdeal& e) {
        return {Json{{"error", "NotAnIdeal"}, {"message", e.what()}}, kInvalid};
    } catch (const ShrinkingStalled& e) {
        return {Json{{"error", "ShrinkingStalled"}, {"search_log", e.search_log}, {"message", e.what()}}, kVerificationFailed};
    } catch (const Error& e) {
        return {Json{{"error", "InternalError"}, {"message", e.what()}}, kVerificationFailed};
    }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with finite-dimensional algebras over Q", "fdalg"};
    app.require_subcommand(1);
    bool meta = false;
    app.add_flag("--meta", meta, "Write run timestamps to stderr");

    std::string algebra, phi, module, module_name, endo, suite = "all", name, emit, emit_dir, nu, r = "0";
    bool list = false;

    auto* analyze = app.add_subcommand("analyze", "Structure report for an algebra");
    analyze->add_option("algebra,--algebra", algebra, "Algebra JSON file")->required();

    auto* slf = app.add_subcommand("slf", "Symmetric linear functions, Rad(phi) and deformations");
    slf->add_option("--algebra", algebra, "Algebra JSON file")->required();
    slf->add_option("--phi", phi, "Functional JSON file");
    slf->add_option("--nu", nu, "Central element as comma-separated rationals");
    slf->add_option("--r", r, "Rational shift for nu");

    auto* pt = app.add_subcommand("pseudotrace", "Pseudotrace and phi_W of module endomorphisms");
    pt->add_option("--algebra", algebra, "Algebra JSON file")->required();
    pt->add_option("--phi", phi, "Functional JSON file")->required();
    pt->add_option("--module", module, "Module JSON file")->required();
    pt->add_option("--module-name", module_name, "Module name inside a zoo document");
    pt->add_option("--endo", endo, "Endomorphism JSON file (default: every End basis element)");

    auto* ver = app.add_subcommand("verify", "Run verification suites");
    ver->add_option("--suite", suite, "Suite id or 'all'");
    ver->add_option("--algebra", algebra, "Run on this algebra instead of the zoo");
    ver->add_option("--phi", phi, "Symmetric functional for --algebra");

    auto* zoo = app.add_subcommand("zoo", "Emit catalogue algebras");
    zoo->add_option("--name", name, "Entry name");
    zoo->add_option("--emit", emit, "Write algebra, phi and modules to one file");
    zoo->add_option("--emit-dir", emit_dir, "Write separate algebra, phi and module files");
    zoo->add_flag("--list", list, "List entries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        out << Json{{"error", "UsageError"}, {"message", e.what()}}.dump(2) << "\n";
        return kInvalid;
    }

    const auto started = std::chrono::steady_clock::now();
    const std::string started_at = utc_now();
    Outcome result = run_guarded([&]() -> Outcome {
        if (*analyze) return cmd_analyze(algebra);
        if (*slf) return cmd_slf({algebra, phi, nu, r});
        if (*pt) return cmd_pseudotrace({algebra, phi, module, module_name, endo});
        if (*ver) return cmd_verify(suite, algebra, phi);
        return cmd_zoo(name, emit, emit_dir, list);
    });
    out << result.payload.dump(2) << "\n";
    if (meta) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
        err << Json{{"started", started_at}, {"finished", utc_now()}, {"elapsed_ms", ms}, {"exit_code", result.code}}.dump()
            << "\n";
    }
    return result.code;
}

}  // namespace fdalg::cli
