#include "braidops/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidops/coherence.hpp"
#include "braidops/errors.hpp"
#include "braidops/hopf.hpp"
#include "braidops/io.hpp"

namespace braidops {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitPrecondition = 3;

std::string display_name(const std::string& name) {
    if (name == "prec") return "≺";
    if (name == "succ") return "≻";
    if (name == "mid") return "*";
    if (name == "star") return "⋆";
    return name;
}

std::vector<std::string> display_names(const OperadPresentation& p) {
    std::vector<std::string> out;
    for (const auto& n : p.generator_names) out.push_back(display_name(n));
    return out;
}

std::string format_vector(const std::vector<Rational>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

// linear combination of generators rendered with the usual glyphs
std::string format_op(const OperadPresentation& p, const std::vector<Rational>& v) {
    const auto names = display_names(p);
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!s.empty()) s += v[i].sign() > 0 ? " + " : " - ";
        else if (v[i].sign() < 0) s += "-";
        const Rational a = v[i].abs();
        if (!a.is_one()) s += a.str() + "·";
        s += names[i];
    }
    return s.empty() ? "0" : s;
}

ordered_json rational_array(const std::vector<Rational>& v) {
    ordered_json a = ordered_json::array();
    for (const Rational& c : v) a.push_back(c.str());
    return a;
}

ordered_json functional_json(const OperadPresentation& p, const std::vector<Rational>& v) {
    ordered_json o = ordered_json::object();
    for (std::size_t i = 0; i < v.size(); ++i) o[p.generator_names[i]] = v[i].str();
    return o;
}

OperadPresentation load_presentation(const std::string& file, const std::string& preset) {
    if (file.empty() == preset.empty())
        throw ParseError("provide exactly one of FILE or --preset");
    return file.empty() ? load_preset(preset) : load_operad_file(file);
}

BraidedSpace load_braiding(const std::string& file, bool flip, int dim) {
    if (file.empty() == !flip)
        throw ParseError("provide exactly one of --braiding FILE or --flip");
    if (flip) return flip_braiding(dim);
    return load_braiding_file(file);
}

void emit_json(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int cmd_check_operad(std::ostream& out, bool json_mode, const std::string& file,
                     const std::string& preset, int degree) {
    const OperadPresentation p = load_presentation(file, preset);
    const OperadComponents c = build_components(p, degree);
    const StarTower tower = star_tower(c);

    std::vector<int> dims;
    for (int k = 1; k <= degree; ++k) dims.push_back(c.dim(k));

    // identities of the unit substitution against the star tower
    std::string unit_ids = "skipped";
    std::string unit_witness;
    if (p.unit_action && tower.associative) {
        unit_ids = "pass";
        if (!unit_action_normalized(p, *p.unit_action)) {
            unit_ids = "fail";
            unit_witness = "unit action is not normalized on the star element";
        } else {
            for (int n = 2; n <= degree && unit_ids == "pass"; ++n) {
                for (int i = 0; i < n; ++i) {
                    const PElement got = substitute_unit(c, *p.unit_action,
                                                         tower.star[static_cast<std::size_t>(n)],
                                                         i);
                    if (!(got == tower.star[static_cast<std::size_t>(n - 1)])) {
                        unit_ids = "fail";
                        unit_witness = "unit substitution at position " + std::to_string(i + 1) +
                                       " of the arity-" + std::to_string(n) + " star power";
                        break;
                    }
                }
            }
        }
    }

    const bool pass = tower.associative && tower.splits_ok && unit_ids != "fail";

    if (json_mode) {
        ordered_json j;
        j["command"] = "check-operad";
        j["name"] = p.name;
        j["generators"] = p.generator_names;
        j["degree"] = degree;
        j["dims"] = dims;
        j["associative"] = tower.associative;
        j["splits"] = tower.associative ? (tower.splits_ok ? "pass" : "fail") : "skipped";
        j["unit_identities"] = unit_ids;
        j["warnings"] = c.warnings();
        j["pass"] = pass;
        emit_json(out, j);
    } else {
        out << "operad: " << p.name << " (" << p.generator_count() << " generators)\n";
        out << "dims P1..P" << degree << ":";
        for (int d : dims) out << " " << d;
        out << "\n";
        out << "star " << format_op(p, p.star_coeffs)
            << " associative: " << (tower.associative ? "yes" : "no") << "\n";
        if (tower.associative)
            out << "star tower splits: " << (tower.splits_ok ? "pass" : "fail")
                << (tower.splits_ok ? "" : " at " + tower.splits_witness) << "\n";
        out << "unit substitution identities: " << unit_ids
            << (unit_witness.empty() ? "" : " (" + unit_witness + ")") << "\n";
        for (const auto& w : c.warnings()) out << "warning: " << w << "\n";
    }
    return pass ? kExitPass : kExitCheckFailure;
}

int cmd_coherence(std::ostream& out, std::ostream& err, bool json_mode, const std::string& mode,
                  const std::string& file, const std::string& preset) {
    const OperadPresentation p = load_presentation(file, preset);

    if (mode == "verify") {
        if (!p.unit_action) {
            err << "error: the presentation has no unit_action to verify\n";
            return kExitInputError;
        }
        if (!unit_action_normalized(p, *p.unit_action)) {
            err << "error: unit action is not normalized on the star element\n";
            return kExitInputError;
        }
        const CoherenceReport rep = check_coherence(p, *p.unit_action);
        if (json_mode) {
            ordered_json j;
            j["command"] = "coherence-verify";
            j["name"] = p.name;
            ordered_json entries = ordered_json::array();
            for (const auto& e : rep.entries) {
                ordered_json je;
                je["relation"] = e.relation;
                je["equation"] = "C" + std::to_string(e.equation);
                je["pass"] = e.pass;
                je["difference"] = rational_array(e.difference);
                entries.push_back(std::move(je));
            }
            j["entries"] = std::move(entries);
            j["pass"] = rep.all_pass();
            emit_json(out, j);
        } else {
            for (std::size_t r = 0; r < p.relations.size(); ++r) {
                out << "relation " << (r + 1) << ":";
                for (int eq = 1; eq <= 5; ++eq) {
                    const auto& e = rep.entries[r * 5 + static_cast<std::size_t>(eq - 1)];
                    out << " C" << eq << (e.pass ? " ok" : " FAIL");
                }
                out << "\n";
            }
            if (const CoherenceEntry* f = rep.first_failure()) {
                out << "FAIL at (relation " << f->relation << ", C" << f->equation
                    << "); difference " << format_op(p, f->difference) << "\n";
            } else {
                out << "coherent: all equations pass\n";
            }
        }
        return rep.all_pass() ? kExitPass : kExitCheckFailure;
    }

    // solve
    const CoherenceSolution sol = solve_coherence(p);
    const char* kind = nullptr;
    switch (sol.kind) {
    case CoherenceSolution::Kind::Infeasible: kind = "infeasible"; break;
    case CoherenceSolution::Kind::NoSolutions: kind = "no-solutions"; break;
    case CoherenceSolution::Kind::Points: kind = "points"; break;
    case CoherenceSolution::Kind::Family: kind = "family"; break;
    case CoherenceSolution::Kind::Residual: kind = "residual"; break;
    }
    if (json_mode) {
        ordered_json j;
        j["command"] = "coherence-solve";
        j["name"] = p.name;
        j["kind"] = kind;
        ordered_json pts = ordered_json::array();
        for (const UnitAction& ua : sol.points) {
            ordered_json jp;
            jp["alpha"] = functional_json(p, ua.alpha);
            jp["beta"] = functional_json(p, ua.beta);
            pts.push_back(std::move(jp));
        }
        j["points"] = std::move(pts);
        if (sol.kind == CoherenceSolution::Kind::Family) {
            ordered_json fam;
            fam["base"] = rational_array(sol.family.particular);
            ordered_json dirs = ordered_json::array();
            for (const auto& d : sol.family.directions) dirs.push_back(rational_array(d));
            fam["directions"] = std::move(dirs);
            j["family"] = std::move(fam);
        }
        if (sol.kind == CoherenceSolution::Kind::Residual) j["residual"] = sol.residual.str();
        if (!sol.note.empty()) j["note"] = sol.note;
        const bool found = sol.kind == CoherenceSolution::Kind::Points
                               ? !sol.points.empty()
                               : sol.kind == CoherenceSolution::Kind::Family;
        j["pass"] = found;
        emit_json(out, j);
        return found ? kExitPass : kExitCheckFailure;
    }
    switch (sol.kind) {
    case CoherenceSolution::Kind::Infeasible:
        out << "no unit action: the linear equations are inconsistent\n";
        return kExitCheckFailure;
    case CoherenceSolution::Kind::NoSolutions:
        out << "no unit action: the quadratic equations exclude every candidate\n";
        return kExitCheckFailure;
    case CoherenceSolution::Kind::Points:
        if (sol.points.empty()) {
            out << "no solutions\n";
            return kExitCheckFailure;
        }
        out << sol.points.size() << " solution(s):\n";
        for (const UnitAction& ua : sol.points)
            out << "  alpha = " << format_vector(ua.alpha)
                << ", beta = " << format_vector(ua.beta) << "\n";
        return kExitPass;
    case CoherenceSolution::Kind::Family:
        out << "solution family: base (alpha, beta) = " << format_vector(sol.family.particular)
            << " with " << sol.family.directions.size() << " free direction(s)\n";
        for (const auto& d : sol.family.directions) out << "  direction " << format_vector(d)
                                                        << "\n";
        return kExitPass;
    case CoherenceSolution::Kind::Residual:
        out << "linear stage solved with " << sol.linear_stage.param_count()
            << " parameter(s); quadratic residue not rationally solvable\n";
        out << "residual system: " << sol.residual.str() << "\n";
        if (!sol.note.empty()) out << "note: " << sol.note << "\n";
        return kExitCheckFailure;
    }
    return kExitCheckFailure;
}

int cmd_classify(std::ostream& out, bool json_mode, const std::string& file,
                 const std::string& preset, const std::string& basis_arg,
                 const std::string& case_arg) {
    const OperadPresentation p = load_presentation(file, preset);

    std::vector<std::string> basis_names;
    std::stringstream ss(basis_arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) basis_names.push_back(item);
    }
    std::vector<std::vector<Rational>> basis_ops;
    for (const auto& name : basis_names) {
        std::vector<Rational> v(static_cast<std::size_t>(p.generator_count()));
        v[static_cast<std::size_t>(p.generator_index(name))] = 1;
        basis_ops.push_back(std::move(v));
    }

    std::vector<RelationSpaceCase> cases;
    if (case_arg == "prime") cases = {RelationSpaceCase::Prime};
    else if (case_arg == "double") cases = {RelationSpaceCase::DoublePrime};
    else cases = {RelationSpaceCase::Prime, RelationSpaceCase::DoublePrime};

    bool any_contained = false;
    ordered_json jcases = ordered_json::array();
    std::ostringstream human;
    for (const RelationSpaceCase sc : cases) {
        const char* label = sc == RelationSpaceCase::Prime ? "prime" : "double";
        const char* glyph =
            sc == RelationSpaceCase::Prime ? "Λ′" : "Λ″"; // Λ′ / Λ″
        const RelationSpace space = relation_space(p.star_coeffs, basis_ops, sc);
        const ContainmentResult res = check_containment(p, space);
        any_contained = any_contained || res.contained;
        if (json_mode) {
            ordered_json jc;
            jc["case"] = label;
            jc["generator_count"] = space.generators.size();
            jc["contained"] = res.contained;
            jc["offending_relation"] = res.first_offending_relation;
            jcases.push_back(std::move(jc));
        } else {
            human << glyph << " (" << label << ", " << space.generators.size()
                  << " generators): "
                  << (res.contained ? "contained"
                                    : "not contained (relation " +
                                          std::to_string(res.first_offending_relation) + ")")
                  << "\n";
        }
    }
    if (json_mode) {
        ordered_json j;
        j["command"] = "classify";
        j["name"] = p.name;
        j["basis"] = basis_names;
        j["cases"] = std::move(jcases);
        j["pass"] = any_contained;
        emit_json(out, j);
    } else {
        out << "relation space of " << p.name << " over basis (";
        for (std::size_t i = 0; i < basis_names.size(); ++i)
            out << (i ? ", " : "") << display_name(basis_names[i]);
        out << "):\n" << human.str();
    }
    return any_contained ? kExitPass : kExitCheckFailure;
}

int cmd_hopf(std::ostream& out, std::ostream& err, bool json_mode, const std::string& file,
             const std::string& preset, const std::string& braiding_file, bool flip, int dim,
             int degree, bool antipode) {
    const OperadPresentation p = load_presentation(file, preset);
    if (!p.unit_action) {
        err << "error: the presentation has no unit_action\n";
        return kExitInputError;
    }
    const BraidedSpace V = load_braiding(braiding_file, flip, dim);

    const YbeCheck ybe = check_yang_baxter(V);
    if (!ybe.ok) {
        if (json_mode) {
            ordered_json j;
            j["command"] = "hopf";
            j["error"] = "braiding fails the hexagon equation";
            j["witness"] = ybe.witness;
            emit_json(out, j);
        } else {
            err << "error: braiding fails the hexagon equation at basis word (";
            for (std::size_t i = 0; i < ybe.witness.size(); ++i)
                err << (i ? ", " : "") << ybe.witness[i];
            err << ")\n";
        }
        return kExitPrecondition;
    }
    if (!is_invertible(V))
        err << "warning: braiding is not invertible; positive lifts only\n";

    const OperadComponents c = build_components(p, degree);
    const HopfLab lab(c, *p.unit_action, V);
    const HopfReport rep = lab.verify_axioms(antipode);
    const TwistedCocommutativity tw = lab.check_twisted_cocommutativity();

    if (json_mode) {
        ordered_json j;
        j["command"] = "hopf";
        j["name"] = p.name;
        j["dim"] = V.dim();
        j["degree"] = degree;
        ordered_json checks = ordered_json::array();
        for (const auto& item : rep.items) {
            ordered_json ji;
            ji["name"] = item.name;
            ji["verdict"] = item.verdict == HopfReport::Verdict::Pass ? "pass"
                            : item.verdict == HopfReport::Verdict::Fail ? "fail"
                                                                        : "inconclusive";
            ji["witness"] = item.witness;
            checks.push_back(std::move(ji));
        }
        j["checks"] = std::move(checks);
        ordered_json jt;
        jt["morphism"] = tw.morphism_holds;
        jt["cocommutative"] = tw.cocomm_holds;
        j["twisted"] = std::move(jt);
        j["pass"] = rep.all_pass();
        emit_json(out, j);
    } else {
        out << "hopf suite: " << p.name << ", letter dim " << V.dim() << ", degree " << degree
            << "\n";
        for (const auto& item : rep.items) {
            out << "  " << item.name << ": ";
            switch (item.verdict) {
            case HopfReport::Verdict::Pass: out << "pass"; break;
            case HopfReport::Verdict::Fail: out << "FAIL (" << item.witness << ")"; break;
            case HopfReport::Verdict::Inconclusive:
                out << "inconclusive (" << item.witness << ")";
                break;
            }
            out << "\n";
        }
        out << "  braiding morphism: " << (tw.morphism_holds ? "yes" : "no")
            << "; coproduct braiding-invariant: " << (tw.cocomm_holds ? "yes" : "no") << "\n";
        out << (rep.all_pass() ? "all conclusive checks pass\n" : "FAILURES present\n");
    }
    return rep.all_pass() ? kExitPass : kExitCheckFailure;
}

int cmd_ybe(std::ostream& out, bool json_mode, const std::string& braiding_file, bool flip,
            int dim) {
    const BraidedSpace V = load_braiding(braiding_file, flip, dim);
    const YbeCheck ybe = check_yang_baxter(V);
    if (json_mode) {
        ordered_json j;
        j["command"] = "ybe";
        j["dim"] = V.dim();
        j["pass"] = ybe.ok;
        if (!ybe.ok) j["witness"] = ybe.witness;
        j["involutive"] = check_involutive(V);
        j["invertible"] = is_invertible(V);
        emit_json(out, j);
    } else {
        if (ybe.ok) {
            out << "hexagon equation: pass (dim " << V.dim() << ")\n";
            out << "involutive: " << (check_involutive(V) ? "yes" : "no") << ", invertible: "
                << (is_invertible(V) ? "yes" : "no") << "\n";
        } else {
            out << "hexagon equation: FAIL at basis word (";
            for (std::size_t i = 0; i < ybe.witness.size(); ++i)
                out << (i ? ", " : "") << ybe.witness[i];
            out << ")\n";
        }
    }
    return ybe.ok ? kExitPass : kExitCheckFailure;
}

int cmd_presets(std::ostream& out, const std::string& mode, const std::string& name) {
    if (mode == "list") {
        for (const auto& n : preset_names()) out << n << "\n";
        return kExitPass;
    }
    out << preset_text(name); // verbatim bytes
    return kExitPass;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact workbench for braided binary quadratic operad presentations"};
    app.name("braidops");
    bool json_mode = false;
    app.add_flag("--json", json_mode, "machine-readable output");
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check-operad",
                                     "component dimensions, star associativity, star tower");
    std::string co_file, co_preset;
    int co_degree = 4;
    check->add_option("file", co_file, "operad JSON file");
    check->add_option("--preset", co_preset, "builtin presentation name");
    check->add_option("--degree", co_degree, "truncation arity (default 4)");

    auto* coh = app.add_subcommand("coherence", "verify or solve the unit-action equations");
    std::string coh_mode, coh_file, coh_preset;
    coh->add_option("mode", coh_mode, "verify or solve")
        ->required()
        ->check(CLI::IsMember({"verify", "solve"}));
    coh->add_option("file", coh_file, "operad JSON file");
    coh->add_option("--preset", coh_preset, "builtin presentation name");

    auto* cls = app.add_subcommand("classify",
                                   "test containment in the canonical relation subspaces");
    std::string cls_file, cls_preset, cls_basis, cls_case;
    cls->add_option("file", cls_file, "operad JSON file");
    cls->add_option("--preset", cls_preset, "builtin presentation name");
    cls->add_option("--basis", cls_basis, "comma-separated generator names")->required();
    cls->add_option("--case", cls_case, "prime or double")
        ->check(CLI::IsMember({"prime", "double"}));

    auto* hopf = app.add_subcommand("hopf", "verify the braided Hopf structure exhaustively");
    std::string hopf_file, hopf_preset, hopf_braiding;
    bool hopf_flip = false, hopf_antipode = false;
    int hopf_dim = 2, hopf_degree = 4;
    hopf->add_option("file", hopf_file, "operad JSON file");
    hopf->add_option("--preset", hopf_preset, "builtin presentation name");
    hopf->add_option("--braiding", hopf_braiding, "braiding JSON file");
    hopf->add_flag("--flip", hopf_flip, "use the flip braiding");
    hopf->add_option("--dim", hopf_dim, "letter-space dimension (default 2)");
    hopf->add_option("--degree", hopf_degree, "truncation arity (default 4)");
    hopf->add_flag("--antipode", hopf_antipode, "include the antipode convolution check");

    auto* ybe = app.add_subcommand("ybe", "check the hexagon equation of a braiding");
    std::string ybe_braiding;
    bool ybe_flip = false;
    int ybe_dim = 2;
    ybe->add_option("--braiding", ybe_braiding, "braiding JSON file");
    ybe->add_flag("--flip", ybe_flip, "use the flip braiding");
    ybe->add_option("--dim", ybe_dim, "letter-space dimension (default 2)");

    auto* pre = app.add_subcommand("presets", "list or emit the shipped presentations");
    std::string pre_mode, pre_name;
    pre->add_option("mode", pre_mode, "list or emit")
        ->required()
        ->check(CLI::IsMember({"list", "emit"}));
    pre->add_option("name", pre_name, "preset name (for emit)");

    std::vector<const char*> argv;
    argv.push_back("braidops");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (*check) return cmd_check_operad(out, json_mode, co_file, co_preset, co_degree);
        if (*coh) return cmd_coherence(out, err, json_mode, coh_mode, coh_file, coh_preset);
        if (*cls) return cmd_classify(out, json_mode, cls_file, cls_preset, cls_basis, cls_case);
        if (*hopf)
            return cmd_hopf(out, err, json_mode, hopf_file, hopf_preset, hopf_braiding,
                            hopf_flip, hopf_dim, hopf_degree, hopf_antipode);
        if (*ybe) return cmd_ybe(out, json_mode, ybe_braiding, ybe_flip, ybe_dim);
        if (*pre) {
            if (pre_mode == "emit" && pre_name.empty()) {
                err << "error: presets emit needs a name\n";
                return kExitInputError;
            }
            return cmd_presets(out, pre_mode, pre_name);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const StarMismatch& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

} // namespace braidops
