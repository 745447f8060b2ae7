#include "g3af_cli/run.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "g3af/aaf.hpp"
#include "g3af/error.hpp"
#include "g3af/formula_text.hpp"
#include "g3af/framework.hpp"
#include "g3af/meta.hpp"
#include "g3af/translate.hpp"
#include "g3af_cli/document.hpp"

namespace g3af::cli {

namespace {

using nlohmann::json;

struct Result {
    json doc;
    std::ostringstream text;
    int code = kOk;
};

// Failures the runner reports with exit code 1; `what` already carries the
// offending fact or flag.
struct UsageError : Error {
    using Error::Error;
};

struct Input {
    std::string path;
    InputDocument doc;
    Species species;
};

Input load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        auto doc = parse_document(buf.str());
        const auto species = detect_species(doc);
        return {path, std::move(doc), species};
    } catch (const ParseError& e) {
        throw UsageError(path + ":" + e.what());
    }
}

// Builders report the offending fact as a ParseError; tag it with the file.
template <class Fn>
auto build(const Input& in, std::string_view command, Fn fn) -> decltype(fn(in.doc)) {
    try {
        return fn(in.doc);
    } catch (const ParseError& e) {
        throw UsageError(in.path + ":" + e.what() + " (command '" + std::string(command) + "' on a " +
                         std::string(to_string(in.species)) + " network)");
    } catch (const ContractError& e) {
        throw UsageError(in.path + ": " + e.what());
    }
}

json labelling_json(const Framework& f, const Labelling& lab) {
    json j = json::object();
    for (std::size_t i = 0; i < f.size(); ++i) j[f.argument(i).str()] = std::string(to_string(lab[i]));
    return j;
}

json labellings_json(const Framework& f, const std::vector<Labelling>& labs) {
    json j = json::array();
    for (const auto& l : labs) j.push_back(labelling_json(f, l));
    return j;
}

void labellings_text(std::ostream& os, const Framework& f, const std::vector<Labelling>& labs) {
    os << labs.size() << " labelling(s)\n";
    for (const auto& l : labs) os << "  " << format_labelling(f, l) << '\n';
}

json assignment_json(const PropAssignment& h) {
    json j = json::object();
    for (const auto& [k, v] : h) j[k] = std::string(profile(v));
    return j;
}

std::string assignment_text(const PropAssignment& h) {
    std::string s;
    for (const auto& [k, v] : h) s += (s.empty() ? "" : " ") + k + "=" + std::string(profile(v));
    return s;
}

json attacks_json(const Framework& f) {
    json j = json::array();
    for (const auto& [a, b] : f.attack_pairs()) j.push_back(a.str() + ">" + b.str());
    return j;
}

void header(Result& r, std::string_view command, const Input& in) {
    r.doc["command"] = std::string(command);
    r.doc["species"] = std::string(to_string(in.species));
}

// --- extensions ------------------------------------------------------------

Result cmd_extensions(const Input& in, const std::string& semantics) {
    Result r;
    header(r, "extensions", in);
    const auto f = build(in, "extensions", to_framework);
    const auto complete = enumerate_complete(f);
    std::vector<Labelling> chosen;
    if (semantics == "complete") {
        chosen = complete;
    } else if (semantics == "stable") {
        chosen = enumerate_stable(f);
    } else {
        const auto c = classify(complete);
        chosen = semantics == "grounded" ? std::vector<Labelling>{c.grounded} : c.preferred;
    }
    r.doc["framework"] = f.describe();
    r.doc["semantics"] = semantics;
    r.doc["count"] = chosen.size();
    r.doc["labellings"] = labellings_json(f, chosen);
    r.text << semantics << " labellings of " << f.describe() << '\n';
    labellings_text(r.text, f, chosen);
    return r;
}

// --- translate -------------------------------------------------------------

template <class F>
json theory_json(const Theory<F>& t) {
    json clauses = json::array();
    for (const auto& [name, phi] : t.entries()) clauses.push_back({{"name", name}, {"formula", to_text(phi)}});
    return {{"kind", std::string(to_string(t.kind()))}, {"clauses", clauses}};
}

template <class F>
void theory_text(std::ostream& os, const Theory<F>& t) {
    os << "# " << to_string(t.kind()) << '\n' << to_text(t);
}

StarScope parse_scope(const std::string& s) { return s == "declared" ? StarScope::DeclaredOnly : StarScope::AllNodes; }

Result cmd_translate(const Input& in, const std::string& mode, const std::string& scope) {
    Result r;
    header(r, "translate", in);
    r.doc["mode"] = mode;
    json theories = json::array();
    auto emit = [&](const auto& t) {
        theories.push_back(theory_json(t));
        theory_text(r.text, t);
    };
    if (mode == "star") {
        const auto hn = build(in, "translate --mode star", to_higher);
        r.doc["scope"] = scope;
        emit(star_theory(hn, parse_scope(scope)));
    } else {
        const auto f = build(in, "translate", to_framework);
        r.doc["framework"] = f.describe();
        if (mode == "delta-prop") {
            const auto subst = to_instantiation(in.doc);
            if (subst.empty()) {
                emit(delta_prop(f));
            } else {
                emit(build(in, "translate", [&](const InputDocument&) { return instantiate(f, subst); }));
            }
        } else if (mode == "theta") {
            const auto th = theta(f);
            emit(th.theta0);
            emit(th.theta1);
        } else if (mode == "delta-pred") {
            emit(build(in, "translate", [&](const InputDocument&) { return delta_pred(f); }));
        } else {
            PredTheory t(TheoryKind::OA);
            t.add("o_a", build(in, "translate", [&](const InputDocument&) { return o_a(f); }));
            emit(t);
        }
    }
    r.doc["theories"] = theories;
    return r;
}

// --- solve-higher ----------------------------------------------------------

struct HigherFlags {
    std::string scope = "all";
    bool pin_r = false;
    std::size_t max_unknowns = 14;
};

Result cmd_solve_higher(const Input& in, const HigherFlags& flags, std::string_view command) {
    Result r;
    header(r, command, in);
    const auto hn = build(in, command, to_higher);
    SolveOptions opts;
    opts.scope = parse_scope(flags.scope);
    opts.max_unknowns = flags.max_unknowns;
    if (flags.pin_r) {
        std::set<std::pair<std::string, std::string>> pinned;
        for (const auto& [a, b] : hn.attacks()) {
            if (a < hn.node_count() && b < hn.node_count()) pinned.emplace(hn.units()[a].name, hn.units()[b].name);
        }
        opts.pin_r = pinned;
    }
    const auto unknowns = count_unknowns(hn, opts);
    std::vector<GeneralizedModel> models;
    try {
        models = solve_higher(hn, opts);
    } catch (const SearchSpaceError& e) {
        throw SearchSpaceError(std::string(command) + ": " + e.what() + "; raise --max-unknowns or use --pin-r");
    }
    const auto& d = hn.domain();
    json list = json::array();
    r.text << "units:";
    for (const auto& u : hn.units()) r.text << ' ' << u.name;
    r.text << "\nscope " << flags.scope << (flags.pin_r ? ", R pinned" : "") << ", " << unknowns
           << " unknowns\n" << models.size() << " model(s)\n";
    for (const auto& m : models) {
        json nodes = json::object(), rel = json::object(), units = json::object();
        std::string line;
        for (std::size_t i = 0; i < d.size(); ++i) {
            const auto v = m.interp.in(i);
            const auto label = v == ThreeVal::TT ? Label::In : v == ThreeVal::FF ? Label::Out : Label::Und;
            nodes[d.element(i)] = std::string(to_string(label));
            line += " " + d.element(i) + ":" + std::string(to_string(label));
        }
        for (std::size_t i = 0; i < d.size(); ++i) {
            for (std::size_t j = 0; j < d.size(); ++j) {
                const auto v = m.interp.r(i, j);
                rel[r_unit_name(d.element(i), d.element(j))] = std::string(profile(v));
                const auto name = r_unit_name(d.element(i), d.element(j));
                if (v != ThreeVal::FF && !hn.unit_index(name)) line += " " + r_unit_name(d.element(i), d.element(j)) + "=" + std::string(profile(v));
            }
        }
        for (const auto& [name, v] : m.statuses) {
            units[name] = std::string(profile(v));
            line += " " + name + "=" + std::string(profile(v));
        }
        list.push_back({{"nodes", nodes}, {"r", rel}, {"units", units}});
        r.text << ' ' << line << '\n';
    }
    r.doc["scope"] = flags.scope;
    r.doc["pin_r"] = flags.pin_r;
    r.doc["unknowns"] = unknowns;
    r.doc["count"] = models.size();
    r.doc["models"] = list;
    return r;
}

// --- models ----------------------------------------------------------------

Result cmd_models(const Input& in) {
    if (in.species == Species::Higher) return cmd_solve_higher(in, {}, "models");
    Result r;
    header(r, "models", in);
    const auto f = build(in, "models", to_framework);
    r.doc["framework"] = f.describe();
    const auto subst = to_instantiation(in.doc);
    if (subst.empty()) {
        std::vector<std::string> names;
        for (const auto& a : f.arguments()) names.push_back(a.str());
        const auto theory = delta_prop(f);
        std::vector<Labelling> labs;
        for (const auto& h : enumerate_models(theory.formulas(), names)) labs.push_back(assignment_to_labelling(f, h));
        std::sort(labs.begin(), labs.end());
        r.doc["count"] = labs.size();
        r.doc["labellings"] = labellings_json(f, labs);
        r.text << "models of the attack theory of " << f.describe() << '\n';
        labellings_text(r.text, f, labs);
        return r;
    }
    const auto theory = build(in, "models", [&](const InputDocument&) { return instantiate(f, subst); });
    std::set<std::string> names;
    for (const auto& phi : theory.formulas()) names.merge(atoms(phi));
    const auto models = enumerate_models(theory.formulas(), {names.begin(), names.end()});
    const auto patterns = instantiation_patterns(f, subst);
    json ms = json::array();
    r.text << "models of the instantiated theory of " << f.describe() << '\n' << models.size() << " model(s)\n";
    for (const auto& h : models) {
        ms.push_back(assignment_json(h));
        r.text << "  " << assignment_text(h) << '\n';
    }
    r.doc["count"] = models.size();
    r.doc["models"] = ms;
    r.doc["patterns"] = labellings_json(f, patterns);
    r.text << "patterns: ";
    labellings_text(r.text, f, patterns);
    return r;
}

// --- verify ----------------------------------------------------------------

json report_json(const Framework& f, const CorrespondenceReport& rep) {
    return {{"verdict", rep.ok() ? "MATCH" : "MISMATCH"},
            {"model_count", rep.model_count},
            {"labelling_count", rep.labelling_count},
            {"matched", labellings_json(f, rep.matched)},
            {"only_models", labellings_json(f, rep.only_models)},
            {"only_labellings", labellings_json(f, rep.only_labellings)}};
}

void report_text(std::ostream& os, std::string_view title, const Framework& f, const CorrespondenceReport& rep) {
    os << title << ": " << (rep.ok() ? "MATCH" : "MISMATCH") << " (" << rep.model_count << " model(s), "
       << rep.labelling_count << " labelling(s))\n";
    for (const auto& l : rep.only_models) os << "  only in models: " << format_labelling(f, l) << '\n';
    for (const auto& l : rep.only_labellings) os << "  only in labellings: " << format_labelling(f, l) << '\n';
}

Result cmd_verify(const Input& in, const std::string& theorem) {
    Result r;
    header(r, "verify", in);
    const auto f = build(in, "verify", to_framework);
    r.doc["framework"] = f.describe();
    r.doc["theorem"] = theorem;
    bool ok = true;
    if (theorem == "thm2") {
        const auto rep = verify_thm2(f);
        ok = rep.ok();
        r.doc["report"] = report_json(f, rep);
        report_text(r.text, "thm2", f, rep);
    } else if (theorem == "theta") {
        const auto rep = verify_theta(f);
        ok = rep.ok();
        r.doc["report"] = {{"stable", report_json(f, rep.stable)},
                           {"non_stable", report_json(f, rep.non_stable)},
                           {"combined", report_json(f, rep.combined)}};
        report_text(r.text, "theta stable", f, rep.stable);
        report_text(r.text, "theta non-stable", f, rep.non_stable);
        report_text(r.text, "theta combined", f, rep.combined);
    } else if (theorem == "thm42") {
        const auto rep = build(in, "verify", [&](const InputDocument&) { return verify_thm42(f); });
        ok = rep.ok();
        r.doc["report"] = report_json(f, rep);
        report_text(r.text, "thm42", f, rep);
    } else {
        const auto rep = build(in, "verify", [&](const InputDocument&) { return verify_oa(f); });
        ok = rep.ok();
        r.doc["report"] = {{"relations_checked", rep.relations_checked},
                           {"model_count", rep.model_count},
                           {"not_covering", rep.not_covering},
                           {"not_complete", rep.not_complete},
                           {"exact", report_json(f, rep.exact)}};
        r.text << "oa: " << rep.model_count << " model(s) over " << rep.relations_checked << " relation(s), "
               << rep.not_covering << " not covering, " << rep.not_complete << " not complete\n";
        report_text(r.text, "oa exact", f, rep.exact);
    }
    r.doc["verdict"] = ok ? "MATCH" : "MISMATCH";
    r.text << (ok ? "MATCH" : "MISMATCH") << '\n';
    r.code = ok ? kOk : kMismatch;
    return r;
}

// --- aaf / encode ----------------------------------------------------------

std::string relation_text(const Relation& rel) {
    std::string s = "{";
    for (const auto& [a, b] : rel) s += (s.size() > 1 ? "," : "") + a + ">" + b;
    return s + "}";
}

void aaf_members(Result& r, const AxiomaticFrame& af, std::size_t max_pairs) {
    std::vector<AafMember> members;
    try {
        members = aaf_extensions(af, max_pairs);
    } catch (const SearchSpaceError& e) {
        throw SearchSpaceError(std::string(e.what()) + "; raise --max-pairs");
    }
    json list = json::array();
    r.text << "psi: " << to_text(af.psi) << '\n' << members.size() << " relation(s)\n";
    for (const auto& m : members) {
        json rel = json::array();
        for (const auto& [a, b] : m.r) rel.push_back(a + ">" + b);
        list.push_back({{"relation", rel}, {"labellings", labellings_json(m.framework, m.labellings)}});
        r.text << "R = " << relation_text(m.r) << ": ";
        labellings_text(r.text, m.framework, m.labellings);
    }
    r.doc["psi"] = to_text(af.psi);
    r.doc["count"] = members.size();
    r.doc["members"] = list;
}

Result cmd_aaf(const Input& in, std::size_t max_pairs) {
    Result r;
    header(r, "aaf", in);
    aaf_members(r, build(in, "aaf", to_axiomatic), max_pairs);
    return r;
}

void encoding_summary(Result& r, const Encoding& enc) {
    json proj = json::array();
    for (const auto& a : enc.projection) proj.push_back(a.str());
    r.doc["encoding"] = {{"framework", enc.framework.describe()},
                         {"arguments", enc.framework.size()},
                         {"attacks", attacks_json(enc.framework)},
                         {"projection", proj}};
    r.text << "encoding: " << enc.framework.describe() << '\n' << "projection:";
    for (const auto& a : enc.projection) r.text << ' ' << a.str();
    r.text << '\n';
}

std::vector<Labelling> projected(const Encoding& enc, const std::vector<Labelling>& labs) {
    std::set<Labelling> out;
    for (const auto& l : labs) out.insert(project(enc, l));
    return {out.begin(), out.end()};
}

Result cmd_encode(const Input& in, std::string from, bool do_project, std::size_t max_pairs) {
    Result r;
    header(r, "encode", in);
    if (from.empty()) {
        switch (in.species) {
            case Species::Disjunctive: from = "disjunctive"; break;
            case Species::Conjunctive: from = "conjunctive"; break;
            case Species::Adf: from = "adf"; break;
            default:
                throw UsageError("encode: a " + std::string(to_string(in.species)) +
                                 " network has no encoding; pass --from conjunctive|disjunctive|adf");
        }
    }
    r.doc["from"] = from;
    r.doc["project"] = do_project;
    if (from == "disjunctive") {
        const auto dn = build(in, "encode --from disjunctive", to_disjunctive);
        const auto af = build(in, "encode", [&](const InputDocument&) { return encode_disjunctive(dn); });
        aaf_members(r, af, max_pairs);
        return r;
    }
    if (from == "conjunctive") {
        const auto cn = build(in, "encode --from conjunctive", to_conjunctive);
        const auto enc = build(in, "encode", [&](const InputDocument&) { return encode_conjunctive(cn); });
        encoding_summary(r, enc);
        if (do_project) {
            const auto base = restrict(enc.framework, enc.projection);
            const auto labs = projected(enc, enumerate_complete(enc.framework));
            r.doc["labellings"] = labellings_json(base, labs);
            r.doc["count"] = labs.size();
            r.text << "projected complete ";
            labellings_text(r.text, base, labs);
        }
        return r;
    }
    const auto adf = build(in, "encode --from adf", to_adf);
    const auto enc = build(in, "encode", [&](const InputDocument&) { return encode_adf(adf); });
    encoding_summary(r, enc);
    if (do_project) {
        const auto base = restrict(enc.framework, enc.projection);
        const auto labs = projected(enc, enumerate_stable(enc.framework));
        std::vector<Labelling> expected;
        for (const auto& bits : adf_two_valued_models(adf)) {
            Labelling l;
            for (bool b : bits) l.labels.push_back(b ? Label::In : Label::Out);
            expected.push_back(std::move(l));
        }
        std::sort(expected.begin(), expected.end());
        const bool ok = labs == expected;
        r.doc["labellings"] = labellings_json(base, labs);
        r.doc["count"] = labs.size();
        r.doc["adf_models"] = labellings_json(base, expected);
        r.doc["verdict"] = ok ? "MATCH" : "MISMATCH";
        r.text << "projected two-valued ";
        labellings_text(r.text, base, labs);
        r.text << "two-valued models of the conditions: ";
        labellings_text(r.text, base, expected);
        r.text << (ok ? "MATCH" : "MISMATCH") << '\n';
        r.code = ok ? kOk : kMismatch;
    }
    return r;
}

// --- valid -----------------------------------------------------------------

Result cmd_valid(const std::string& text) {
    Result r;
    r.doc["command"] = "valid";
    PropFormula f = PropFormula::top();
    try {
        f = parse_prop(text);
    } catch (const ParseError& e) {
        throw UsageError(std::string("valid: formula ") + e.what());
    }
    const auto v = is_valid(f);
    r.doc["formula"] = to_text(f);
    r.doc["verdict"] = v.valid ? "VALID" : "INVALID";
    r.text << (v.valid ? "VALID" : "INVALID") << '\n';
    if (v.countermodel) {
        r.doc["countermodel"] = assignment_json(*v.countermodel);
        r.text << "countermodel (fails at t): " << (v.countermodel->empty() ? "any (no atoms)" : assignment_text(*v.countermodel)) << '\n';
    }
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Argumentation networks as three-valued G3 theories", "g3af"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    std::string file;
    auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "Network file")->required(); };

    std::string semantics = "complete";
    auto* ext = app.add_subcommand("extensions", "Labellings under a semantics");
    add_file(ext);
    ext->add_option("--semantics", semantics)
        ->check(CLI::IsMember({"complete", "stable", "grounded", "preferred"}))
        ->capture_default_str();

    std::string mode;
    std::string scope = "all";
    auto* tr = app.add_subcommand("translate", "Print a theory for the network");
    add_file(tr);
    tr->add_option("--mode", mode)->required()->check(CLI::IsMember({"delta-prop", "theta", "delta-pred", "o-a", "star"}));
    tr->add_option("--scope", scope, "Attack scope of the starred clauses")
        ->check(CLI::IsMember({"all", "declared"}))
        ->capture_default_str();

    auto* mo = app.add_subcommand("models", "Models of the network's theory");
    add_file(mo);

    std::string theorem;
    auto* ve = app.add_subcommand("verify", "Compare models with labellings; exits 2 on mismatch");
    add_file(ve);
    ve->add_option("--theorem", theorem)->required()->check(CLI::IsMember({"thm2", "theta", "thm42", "oa"}));

    HigherFlags hf;
    auto* sh = app.add_subcommand("solve-higher", "Generalized models of a higher-level network");
    add_file(sh);
    sh->add_option("--scope", hf.scope)->check(CLI::IsMember({"all", "declared"}))->capture_default_str();
    sh->add_flag("--pin-r", hf.pin_r, "Fix R to the declared node attacks");
    sh->add_option("--max-unknowns", hf.max_unknowns)->capture_default_str();

    std::size_t max_pairs = 20;
    auto* aa = app.add_subcommand("aaf", "Relations satisfying psi and their labellings");
    add_file(aa);
    aa->add_option("--max-pairs", max_pairs)->capture_default_str();

    std::string from;
    bool do_project = false;
    auto* en = app.add_subcommand("encode", "Lower a network to a plain or axiomatic one");
    add_file(en);
    en->add_option("--from", from)->check(CLI::IsMember({"conjunctive", "disjunctive", "adf"}));
    en->add_flag("--project", do_project, "Report labellings restricted to the original arguments");
    en->add_option("--max-pairs", max_pairs)->capture_default_str();

    std::string formula;
    auto* va = app.add_subcommand("valid", "Decide G3 validity of a propositional formula");
    va->add_option("formula", formula)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    Result result;
    try {
        if (va->parsed()) {
            result = cmd_valid(formula);
        } else {
            const auto in = load(file);
            if (ext->parsed()) result = cmd_extensions(in, semantics);
            if (tr->parsed()) result = cmd_translate(in, mode, scope);
            if (mo->parsed()) result = cmd_models(in);
            if (ve->parsed()) result = cmd_verify(in, theorem);
            if (sh->parsed()) result = cmd_solve_higher(in, hf, "solve-higher");
            if (aa->parsed()) result = cmd_aaf(in, max_pairs);
            if (en->parsed()) result = cmd_encode(in, from, do_project, max_pairs);
        }
    } catch (const SearchSpaceError& e) {
        err << "error: " << e.what() << '\n';
        return kGuard;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    if (format == "json") {
        out << result.doc.dump(2) << '\n';
    } else {
        out << result.text.str();
    }
    return result.code;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace g3af::cli
