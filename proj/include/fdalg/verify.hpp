#pragma once

// Verification suites: each check compares two independent computations of
// the same quantity, or confirms a structural statement, over the zoo or a
// user algebra. Results are machine-readable.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fdalg/json_io.hpp"
#include "fdalg/pseudotrace.hpp"
#include "fdalg/slf.hpp"
#include "fdalg/zoo.hpp"

namespace fdalg::verify {

using json::Json;

enum class Status { Pass, Fail, Inconclusive };

inline std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Inconclusive: return "inconclusive";
    }
    return "";
}

struct Check {
    std::string name;
    std::string anchor;
    Status status = Status::Pass;
    Json witness;
};

struct SuiteReport {
    std::string id;
    std::string anchor;
    std::vector<Check> checks;

    bool failed() const {
        for (const auto& c : checks)
            if (c.status == Status::Fail) return true;
        return false;
    }
};

/// An algebra to run suites on, with an optional symmetric functional.
struct Target {
    std::string name;
    AlgebraPtr algebra;
    std::optional<LinFunc> phi;
};

inline Target target_from_zoo(const std::string& name) {
    ZooEntry e = zoo_entry(name);
    return Target{name, e.algebra(), e.canonical_phi};
}

/// Uses the given functional, or searches for a symmetric one.
inline std::optional<LinFunc> symmetric_phi(const Target& t) {
    if (t.phi) return t.phi;
    auto found = find_symmetric_form(*t.algebra);
    return found.phi;
}

inline Json to_json(const Check& c) {
    Json out;
    out["name"] = c.name;
    out["anchor"] = c.anchor;
    out["status"] = status_name(c.status);
    if (!c.witness.is_null()) out["witness"] = c.witness;
    return out;
}

inline Json to_json(const SuiteReport& r) {
    Json out;
    out["suite"] = r.id;
    out["anchor"] = r.anchor;
    Json checks = Json::array();
    std::size_t pass = 0, fail = 0, inconclusive = 0;
    for (const auto& c : r.checks) {
        checks.push_back(to_json(c));
        (c.status == Status::Pass ? pass : c.status == Status::Fail ? fail : inconclusive)++;
    }
    out["passed"] = pass;
    out["failed"] = fail;
    out["inconclusive"] = inconclusive;
    out["checks"] = std::move(checks);
    return out;
}

namespace detail {

class Recorder {
public:
    explicit Recorder(SuiteReport& report) : report_(report) {}

    /// Runs `body`, which fills the witness and returns the status. Library
    /// errors become failures with the message as witness.
    void run(const std::string& name, const std::string& anchor, const std::function<Status(Json&)>& body) {
        Check c{name, anchor, Status::Pass, Json()};
        try {
            c.status = body(c.witness);
        } catch (const NotSplitOverQ& e) {
            c.status = Status::Inconclusive;
            c.witness = Json{{"error", "NotSplitOverQ"}, {"message", e.what()}};
        } catch (const HypothesisViolation& e) {
            c.status = Status::Inconclusive;
            c.witness = Json{{"error", e.hypothesis}, {"message", e.what()}};
        } catch (const Error& e) {
            c.status = Status::Fail;
            c.witness = Json{{"error", "exception"}, {"message", e.what()}};
        }
        report_.checks.push_back(std::move(c));
    }

    void inconclusive(const std::string& name, const std::string& anchor, const std::string& reason) {
        report_.checks.push_back(Check{name, anchor, Status::Inconclusive, Json{{"reason", reason}}});
    }

private:
    SuiteReport& report_;
};

inline Status verdict(bool ok) { return ok ? Status::Pass : Status::Fail; }

}  // namespace detail

/// A projective module built from summands eA, with the coordinate system
/// {e, inclusion} on each summand.
struct SummandModule {
    std::string name;
    RightModule module;
    CoordinateSystem summand_coordinates;
};

inline SummandModule summand_module(const AlgebraPtr& alg, const std::string& name, const std::vector<Vec>& idempotents) {
    std::vector<RightModule> parts;
    std::vector<CoordinateSystem> local;
    for (const auto& e : idempotents) {
        Submodule s = right_ideal_module(alg, e);
        local.push_back(CoordinateSystem{{s.space.coordinates(e)}, {s.inclusion}});
        parts.push_back(std::move(s.module));
    }
    DirectSum sum = direct_sum(alg, parts);
    CoordinateSystem cs;
    for (std::size_t t = 0; t < parts.size(); ++t) {
        cs.elements.push_back(row_times(local[t].elements[0], sum.injections[t]));
        cs.functionals.push_back(sum.projections[t] * local[t].functionals[0]);
    }
    if (!is_coordinate_system(sum.module, cs)) throw InternalError("summand coordinates are not a coordinate system");
    return SummandModule{name, std::move(sum.module), std::move(cs)};
}

/// regular, each e_bA (when e_b ≠ 1), and e_1A ⊕ A.
inline std::vector<SummandModule> projective_family(const AlgebraPtr& alg, const IdempotentDecomposition& dec) {
    std::vector<SummandModule> out;
    out.push_back(summand_module(alg, "regular", {alg->one()}));
    for (std::size_t b = 0; b < dec.block_count(); ++b)
        if (dec.representative(b) != alg->one())
            out.push_back(summand_module(alg, "e" + std::to_string(b + 1) + "A", {dec.representative(b)}));
    out.push_back(summand_module(alg, "e1A+A", {dec.representative(0), alg->one()}));
    return out;
}

// ---------------------------------------------------------------------------
// Suites.

inline const char* kAnchorIndependence = "phi_W does not depend on the choice of coordinate system";
inline const char* kAnchorSymmetry = "phi_W is a symmetric linear function on End(W)";
inline const char* kAnchorContext = "standing setup of a basic indecomposable symmetric algebra";
inline const char* kAnchorInterlocked = "W is interlocked with phi if and only if W is projective";
inline const char* kAnchorMultiplicity = "multiplicity of e_iP in W equals dim W f_i";
inline const char* kAnchorEquality = "phi_W equals the pseudotrace on End(W)";
inline const char* kAnchorNu = "phi_W(alpha o (nu - r)) equals phi'_{W/WK}(alpha hat)";
inline const char* kAnchorTransfer = "restriction to eAe and the transfer back are mutually inverse on SLFs";
inline const char* kAnchorDoubleCentralizer = "A = End_{eAe}(Ae) and eAe is anti-isomorphic to End_A(Ae)";
inline const char* kAnchorDecomposition = "phi is a sum of pseudotraces over blocks";

inline std::vector<std::string> suite_ids() {
    return {"coordinate-independence", "phi-w-symmetry", "context", "interlocked", "multiplicity",
            "equality", "nu-compatibility", "transfer", "double-centralizer", "decomposition"};
}

inline SuiteReport suite_coordinate_independence(const std::vector<Target>& targets) {
    SuiteReport rep{"coordinate-independence", kAnchorIndependence, {}};
    detail::Recorder rec(rep);
    for (const auto& t : targets) {
        auto phi = symmetric_phi(t);
        if (!phi) {
            rec.inconclusive(t.name, kAnchorIndependence, "no symmetric functional available");
            continue;
        }
        std::vector<SummandModule> family;
        rec.run(t.name + "/idempotents", kAnchorIndependence, [&](Json&) {
            family = projective_family(t.algebra, primitive_idempotents(*t.algebra));
            return Status::Pass;
        });
        for (const auto& m : family) {
            rec.run(t.name + "/" + m.name, kAnchorIndependence, [&](Json& wit) {
                CoordinateSystem free = coordinates_of(m.module);
                auto end = hom_space(m.module, m.module);
                for (std::size_t a = 0; a < end.size(); ++a) {
                    Rational x = phi_W(*phi, m.module, m.summand_coordinates, end[a]);
                    Rational y = phi_W(*phi, m.module, free, end[a]);
                    if (x != y) {
                        wit = Json{{"endo_index", a}, {"summand_system", to_string(x)}, {"free_cover", to_string(y)}};
                        return Status::Fail;
                    }
                }
                wit = Json{{"endo_dim", end.size()}};
                return Status::Pass;
            });
        }
    }
    return rep;
}

inline SuiteReport suite_phi_w_symmetry(const std::vector<Target>& targets) {
    SuiteReport rep{"phi-w-symmetry", kAnchorSymmetry, {}};
    detail::Recorder rec(rep);
    for (const auto& t : targets) {
        auto phi = symmetric_phi(t);
        if (!phi) {
            rec.inconclusive(t.name, kAnchorSymmetry, "no symmetric functional available");
            continue;
        }
        std::vector<SummandModule> family;
        rec.run(t.name + "/idempotents", kAnchorSymmetry, [&](Json&) {
            family = projective_family(t.algebra, primitive_idempotents(*t.algebra));
            return Status::Pass;
        });
        for (const auto& m : family) {
            rec.run(t.name + "/" + m.name, kAnchorSymmetry, [&](Json& wit) {
                auto end = hom_space(m.module, m.module);
                for (std::size_t a = 0; a < end.size(); ++a)
                    for (std::size_t b = a + 1; b < end.size(); ++b) {
                        Rational ab = phi_W(*phi, m.module, m.summand_coordinates, end[b] * end[a]);
                        Rational ba = phi_W(*phi, m.module, m.summand_coordinates, end[a] * end[b]);
                        if (ab != ba) {
                            wit = Json{{"alpha", a}, {"beta", b}, {"phi_W(ab)", to_string(ab)}, {"phi_W(ba)", to_string(ba)}};
                            return Status::Fail;
                        }
                    }
                wit = Json{{"endo_dim", end.size()}, {"pairs", end.size() * (end.size() - 1) / 2}};
                return Status::Pass;
            });
        }
    }
    return rep;
}

/// Context-based targets: the basic indecomposable symmetric ones.
inline std::vector<Target> default_context_targets() { return {target_from_zoo("t3"), target_from_zoo("n2")}; }

inline SuiteReport suite_context(const std::vector<Target>& targets, bool with_rejections) {
    SuiteReport rep{"context", kAnchorContext, {}};
    detail::Recorder rec(rep);
    for (const auto& t : targets) {
        auto phi = symmetric_phi(t);
        if (!phi) {
            rec.inconclusive(t.name, kAnchorContext, "no symmetric functional available");
            continue;
        }
        rec.run(t.name + "/invariants", kAnchorContext, [&](Json& wit) {
            SymmetricContext ctx = build_context(t.algebra, *phi);
            Json d = Json::array();
            for (const auto& row : ctx.d) d.push_back(row);
            Json f = Json::array();
            for (const auto& v : ctx.socle_duals) f.push_back(json::encode(v));
            wit = Json{{"k", ctx.k()}, {"d", d}, {"socle_duals", f}};
            return Status::Pass;
        });
        rec.run(t.name + "/omega-weak", kAnchorContext, [&](Json& wit) {
            SymmetricContext ctx = build_context(t.algebra, *phi);
            OmegaBasis om = build_omega(ctx, OmegaMode::Weak);
            wit = Json{{"size", om.all().size()}};
            return detail::verdict(om.report.weak_pass());
        });
        rec.run(t.name + "/omega-full", kAnchorContext, [&](Json& wit) {
            SymmetricContext ctx = build_context(t.algebra, *phi);
            OmegaBasis om = build_omega(ctx, OmegaMode::Full);
            wit = Json{{"normalized", om.full}, {"c", om.report.c}, {"d", om.report.d},
                       {"e_left", om.report.e_left}, {"e_right", om.report.e_right}};
            if (!om.report.note.empty()) wit["note"] = om.report.note;
            return om.full && om.report.c && om.report.d ? Status::Pass : Status::Inconclusive;
        });
    }
    if (with_rejections) {
        auto expect_violation = [&](const std::string& name, const AlgebraPtr& alg, const LinFunc& phi,
                                    const std::string& hypothesis) {
            rec.run(name, kAnchorContext, [&](Json& wit) {
                try {
                    build_context(alg, phi);
                } catch (const HypothesisViolation& e) {
                    wit = Json{{"rejected_with", e.hypothesis}};
                    return detail::verdict(e.hypothesis == hypothesis);
                }
                wit = Json{{"rejected_with", nullptr}};
                return Status::Fail;
            });
        };
        ZooEntry m2 = zoo_entry("m2");
        expect_violation("m2/rejected-not-basic", m2.algebra(), *m2.canonical_phi, "NotBasic");
        ZooEntry n2 = zigzag_2();
        LinFunc shifted = *n2.canonical_phi;
        shifted.values[0] = 1;
        expect_violation("n2/rejected-phi-on-idempotent", n2.algebra(), shifted, "PhiNonzeroOnIdempotent");
    }
    return rep;
}

/// Runs `body` on each (context, module) for the standard module set.
inline void for_each_context_module(detail::Recorder& rec, const std::vector<Target>& targets, const char* anchor,
                                    const std::function<Status(const SymmetricContext&, const NamedModule&, Json&)>& body) {
    for (const auto& t : targets) {
        auto phi = symmetric_phi(t);
        if (!phi) {
            rec.inconclusive(t.name, anchor, "no symmetric functional available");
            continue;
        }
        std::optional<SymmetricContext> ctx;
        std::vector<NamedModule> modules;
        rec.run(t.name + "/context", anchor, [&](Json& wit) {
            ctx = build_context(t.algebra, *phi);
            modules = standard_modules(t.algebra, primitive_idempotents(*t.algebra));
            wit = Json{{"module_instances", modules.size()}};
            return Status::Pass;
        });
        if (!ctx) continue;
        for (const auto& m : modules)
            rec.run(t.name + "/" + m.name, anchor, [&](Json& wit) { return body(*ctx, m, wit); });
    }
}

inline SuiteReport suite_interlocked(const std::vector<Target>& targets) {
    SuiteReport rep{"interlocked", kAnchorInterlocked, {}};
    detail::Recorder rec(rep);
    for_each_context_module(rec, targets, kAnchorInterlocked, [](const SymmetricContext& ctx, const NamedModule& m, Json& wit) {
        InterlockReport il = is_interlocked(ctx, m.module);
        auto res = decompose_projective(ctx, m.module);
        bool decomposed = std::holds_alternative<ProjectiveDecomposition>(res);
        bool projective = is_projective(m.module);
        wit = Json{{"interlocked", il.interlocked}, {"decomposed", decomposed}, {"free_cover_projective", projective}};
        return detail::verdict(il.interlocked == decomposed && decomposed == projective);
    });
    return rep;
}

inline SuiteReport suite_multiplicity(const std::vector<Target>& targets) {
    SuiteReport rep{"multiplicity", kAnchorMultiplicity, {}};
    detail::Recorder rec(rep);
    for_each_context_module(rec, targets, kAnchorMultiplicity, [](const SymmetricContext& ctx, const NamedModule& m, Json& wit) {
        auto res = decompose_projective(ctx, m.module);
        if (!std::holds_alternative<ProjectiveDecomposition>(res)) {
            wit = Json{{"projective", false}};
            return Status::Pass;
        }
        const auto& dec = std::get<ProjectiveDecomposition>(res);
        Subspace wj = submodule_times_ideal(m.module, ctx.radical.space());
        bool ok = true;
        Json rows = Json::array();
        for (std::size_t i = 0; i < ctx.k(); ++i) {
            std::size_t wf = rank(m.module.act_matrix(ctx.socle_duals[i]));
            Subspace we = Subspace::from_matrix(m.module.act_matrix(ctx.idempotents[i]));
            std::size_t wje = intersect(we, wj).dim();
            std::size_t quotient = we.dim() - wje;
            ok = ok && dec.multiplicities[i] == wf && quotient == wf;
            rows.push_back(Json{{"n", dec.multiplicities[i]}, {"dim_Wf", wf}, {"dim_We/WJe", quotient}});
        }
        wit = Json{{"projective", true}, {"per_idempotent", rows}};
        return detail::verdict(ok);
    });
    return rep;
}

inline SuiteReport suite_equality(const std::vector<Target>& targets) {
    SuiteReport rep{"equality", kAnchorEquality, {}};
    detail::Recorder rec(rep);
    for_each_context_module(rec, targets, kAnchorEquality, [](const SymmetricContext& ctx, const NamedModule& m, Json& wit) {
        if (!is_projective(m.module)) {
            wit = Json{{"projective", false}};
            return Status::Pass;
        }
        OmegaBasis omega = build_omega(ctx);
        auto end = hom_space(m.module, m.module);
        for (std::size_t a = 0; a < end.size(); ++a) {
            EqualityCheck eq = check_equality_theorem(ctx, omega, m.module, end[a]);
            if (!eq.agree()) {
                wit = Json{{"endo_index", a}, {"pseudotrace", to_string(eq.pseudo)}, {"phi_W", to_string(eq.phi_w)},
                           {"phi_W_free_cover", to_string(eq.phi_w_free_cover)}};
                return Status::Fail;
            }
        }
        wit = Json{{"projective", true}, {"endo_dim", end.size()}};
        return Status::Pass;
    });
    return rep;
}

struct NuCase {
    std::string name;
    Target target;
    Vec nu;
    Rational r;
};

inline std::vector<NuCase> default_nu_cases() {
    std::vector<NuCase> out;
    out.push_back({"t3/nu=x", target_from_zoo("t3"), {0, 1, 0}, 0});
    out.push_back({"n2/nu=ab+ba", target_from_zoo("n2"), {0, 0, 0, 0, 1, 1}, 0});
    return out;
}

/// Every central element of the center basis with a nilpotent shift gives a
/// case for a user algebra.
inline std::vector<NuCase> nu_cases_for(const Target& t) {
    std::vector<NuCase> out;
    Subspace z = center(*t.algebra);
    for (std::size_t r = 0; r < z.dim(); ++r) {
        Vec nu = z.basis_vector(r);
        if (nilpotency_exponent(*t.algebra, nu)) out.push_back({t.name + "/center" + std::to_string(r), t, nu, 0});
    }
    return out;
}

inline SuiteReport suite_nu_compatibility(const std::vector<NuCase>& cases) {
    SuiteReport rep{"nu-compatibility", kAnchorNu, {}};
    detail::Recorder rec(rep);
    if (cases.empty()) rec.inconclusive("cases", kAnchorNu, "no central element with a nilpotent shift");
    for (const auto& c : cases) {
        auto phi = symmetric_phi(c.target);
        if (!phi) {
            rec.inconclusive(c.name, kAnchorNu, "no symmetric functional available");
            continue;
        }
        std::vector<NamedModule> modules{{"regular", regular_module(c.target.algebra)},
                                         {"A^2", free_module(c.target.algebra, 2)}};
        rec.run(c.name + "/summands", kAnchorNu, [&](Json&) {
            auto dec = primitive_idempotents(*c.target.algebra);
            for (const auto& m : projective_family(c.target.algebra, dec))
                if (m.name != "regular") modules.push_back({m.name, m.module});
            return Status::Pass;
        });
        for (const auto& m : modules)
            rec.run(c.name + "/" + m.name, kAnchorNu, [&](Json& wit) {
                auto end = hom_space(m.module, m.module);
                for (std::size_t a = 0; a < end.size(); ++a) {
                    NuCompatibility nc = check_nu_compatibility(*phi, m.module, end[a], c.nu, c.r);
                    if (!nc.agree()) {
                        wit = Json{{"endo_index", a}, {"lhs", to_string(nc.lhs)}, {"rhs", to_string(nc.rhs)},
                                   {"rhs_free_cover", to_string(nc.rhs_free_cover)}};
                        return Status::Fail;
                    }
                }
                wit = Json{{"endo_dim", end.size()}};
                return Status::Pass;
            });
    }
    return rep;
}

inline SuiteReport suite_transfer(const std::vector<Target>& targets) {
    SuiteReport rep{"transfer", kAnchorTransfer, {}};
    detail::Recorder rec(rep);
    for (const auto& t : targets)
        rec.run(t.name, kAnchorTransfer, [&](Json& wit) {
            const Algebra& a = *t.algebra;
            auto dec = primitive_idempotents(a);
            BasicAlgebraData basic = basic_algebra(a, dec);
            const Algebra& eae = *basic.algebra();
            auto slf_a = slf_basis(a);
            auto slf_e = slf_basis(eae);
            bool ok = slf_a.size() == slf_e.size();
            for (const auto& phi : slf_a) {
                LinFunc down = transfer_down(a, phi, basic);
                ok = ok && is_symmetric(eae, down) && transfer_up(a, down, basic) == phi;
                LinFunc down_trace = transfer_down_via_trace(t.algebra, phi, basic);
                ok = ok && down_trace == down && transfer_up_via_trace(t.algebra, down_trace, basic) == phi;
            }
            for (const auto& psi : slf_e) {
                LinFunc up = transfer_up(a, psi, basic);
                ok = ok && is_symmetric(a, up) && transfer_down(a, up, basic) == psi;
                ok = ok && transfer_up_via_trace(t.algebra, psi, basic) == up;
            }
            wit = Json{{"slf_dim", slf_a.size()}, {"slf_dim_basic", slf_e.size()}, {"basic_dim", eae.dim()}};
            return detail::verdict(ok);
        });
    return rep;
}

inline SuiteReport suite_double_centralizer(const std::vector<Target>& targets) {
    SuiteReport rep{"double-centralizer", kAnchorDoubleCentralizer, {}};
    detail::Recorder rec(rep);
    for (const auto& t : targets)
        rec.run(t.name, kAnchorDoubleCentralizer, [&](Json& wit) {
            const Algebra& a = *t.algebra;
            auto dec = primitive_idempotents(a);
            DoubleCentralizerReport dc = verify_double_centralizer(a, basic_algebra(a, dec));
            wit = Json{{"dim_A", dc.dim_a}, {"dim_eAe", dc.dim_basic}, {"dim_Ae", dc.dim_ae},
                       {"dim_End_eAe(Ae)", dc.dim_end_basic_ae}, {"dim_End_A(Ae)", dc.dim_end_a_ae}};
            return detail::verdict(dc.pass());
        });
    return rep;
}

struct DecompositionCase {
    std::string name;
    Target target;
    LinFunc phi;
    Vec nu;
    Rational r;
    std::optional<std::size_t> s;
};

inline std::vector<DecompositionCase> default_decomposition_cases() {
    std::vector<DecompositionCase> out;
    Target t3 = target_from_zoo("t3");
    out.push_back({"t3/1-dual/s=1", t3, LinFunc{{1, 0, 0}}, {0, 1, 0}, 0, 1});
    out.push_back({"t3/x^2-dual", t3, *t3.phi, {0, 1, 0}, 0, std::nullopt});
    Target prod = target_from_zoo("m2xt3");
    Vec nu = zero_vec(7);
    nu[5] = 1;
    out.push_back({"m2xt3/blockwise", prod, *prod.phi, nu, 0, std::nullopt});
    LinFunc low{{1, 0, 0, 1, 1, 0, 0}};
    out.push_back({"m2xt3/trace+1-dual/s=1", prod, low, nu, 0, 1});
    Target n2 = target_from_zoo("n2");
    out.push_back({"n2/nu=ab+ba", n2, *n2.phi, {0, 0, 0, 0, 1, 1}, 0, std::nullopt});
    return out;
}

inline std::vector<DecompositionCase> decomposition_cases_for(const Target& t) {
    std::vector<DecompositionCase> out;
    auto phi = symmetric_phi(t);
    if (!phi) return out;
    out.push_back({t.name + "/nu=0", t, *phi, t.algebra->zero(), 0, std::nullopt});
    return out;
}

inline SuiteReport suite_decomposition(const std::vector<DecompositionCase>& cases) {
    SuiteReport rep{"decomposition", kAnchorDecomposition, {}};
    detail::Recorder rec(rep);
    if (cases.empty()) rec.inconclusive("cases", kAnchorDecomposition, "no symmetric functional available");
    for (const auto& c : cases)
        rec.run(c.name, kAnchorDecomposition, [&](Json& wit) {
            PseudotraceDecomposition d = decompose_as_pseudotraces(c.target.algebra, c.phi, c.nu, c.r, c.s);
            Json parts = Json::array();
            for (const auto& sum : d.summands)
                parts.push_back(Json{{"dim_B", sum.quotient.quotient.algebra->dim()},
                                     {"dim_P", sum.basic.algebra()->dim()},
                                     {"dim_M", sum.bimodule.space.dim()},
                                     {"annihilated", sum.annihilated}});
            wit = Json{{"s", d.s}, {"summands", parts}, {"reconstructed", json::encode(d.reconstructed)}};
            return detail::verdict(d.exact);
        });
    return rep;
}

// ---------------------------------------------------------------------------

inline std::vector<Target> zoo_targets(const std::vector<std::string>& names) {
    std::vector<Target> out;
    for (const auto& n : names) out.push_back(target_from_zoo(n));
    return out;
}

/// Runs one suite on the zoo defaults, or on `user` when given.
inline SuiteReport run_suite(const std::string& id, const std::optional<Target>& user = std::nullopt) {
    auto pick = [&](const std::vector<std::string>& defaults) {
        return user ? std::vector<Target>{*user} : zoo_targets(defaults);
    };
    const std::vector<std::string> symmetric{"t3", "m2", "qs3", "n2", "m2xt3"};
    if (id == "coordinate-independence") return suite_coordinate_independence(pick(symmetric));
    if (id == "phi-w-symmetry") return suite_phi_w_symmetry(pick(symmetric));
    if (id == "context") return suite_context(pick({"t3", "n2"}), !user);
    if (id == "interlocked") return suite_interlocked(pick({"t3", "n2"}));
    if (id == "multiplicity") return suite_multiplicity(pick({"t3", "n2"}));
    if (id == "equality") return suite_equality(pick({"t3", "n2"}));
    if (id == "nu-compatibility") return suite_nu_compatibility(user ? nu_cases_for(*user) : default_nu_cases());
    if (id == "transfer") return suite_transfer(pick({"t3", "m2", "qs3", "n2", "m2xt3"}));
    if (id == "double-centralizer") return suite_double_centralizer(pick({"t3", "m2", "qs3", "n2", "u2", "m2xt3"}));
    if (id == "decomposition")
        return suite_decomposition(user ? decomposition_cases_for(*user) : default_decomposition_cases());
    throw InvalidInput("unknown suite '" + id + "'");
}

}  // namespace fdalg::verify
