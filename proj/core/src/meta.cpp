#include "g3af/meta.hpp"

#include <algorithm>

#include "compiled.hpp"
#include "g3af/error.hpp"
#include "g3af/framework.hpp"
#include "prop_internal.hpp"

namespace g3af {

std::string r_unit_name(const std::string& from, const std::string& to) { return "r(" + from + "," + to + ")"; }

namespace {

// "r(a,b)" -> {a, b}
std::optional<std::pair<std::string, std::string>> split_r_unit(const std::string& name) {
    if (name.size() < 6 || name.rfind("r(", 0) != 0 || name.back() != ')') return std::nullopt;
    const auto inner = name.substr(2, name.size() - 3);
    const auto comma = inner.find(',');
    if (comma == std::string::npos) return std::nullopt;
    auto a = inner.substr(0, comma);
    auto b = inner.substr(comma + 1);
    if (!ArgumentId::is_valid(a) || !ArgumentId::is_valid(b)) return std::nullopt;
    return std::pair{a, b};
}

}  // namespace

HigherNetwork::HigherNetwork(std::vector<std::string> nodes) : domain_(std::move(nodes)) {
    for (const auto& e : domain_.elements()) {
        units_.push_back({Unit::Kind::Node, e, PredFormula::in(Term::constant(e))});
    }
}

std::optional<std::size_t> HigherNetwork::unit_index(const std::string& name) const {
    for (std::size_t i = 0; i < units_.size(); ++i) {
        if (units_[i].name == name) return i;
    }
    return std::nullopt;
}

void HigherNetwork::add_wff(std::string name, PredFormula formula) {
    if (!ArgumentId::is_valid(name)) throw ContractError("invalid wff name '" + name + "'");
    if (unit_index(name)) throw ContractError("unit name '" + name + "' is already taken");
    if (!is_closed(formula)) throw ContractError("wff '" + name + "' is not closed");
    for (const auto& c : constants(formula)) {
        if (!domain_.index_of(c)) throw ContractError("wff '" + name + "' names '" + c + "', which is not a node");
    }
    units_.push_back({Unit::Kind::Wff, std::move(name), std::move(formula)});
}

std::string HigherNetwork::add_r_atom(const std::string& from, const std::string& to) {
    for (const auto& e : {from, to}) {
        if (!domain_.index_of(e)) throw ContractError("R-atom endpoint '" + e + "' is not a node");
    }
    auto name = r_unit_name(from, to);
    if (!unit_index(name)) {
        units_.push_back({Unit::Kind::Wff, name, PredFormula::r(Term::constant(from), Term::constant(to))});
    }
    return name;
}

void HigherNetwork::add_attack(const std::string& from, const std::string& to) {
    auto resolve = [&](const std::string& name) {
        if (auto i = unit_index(name)) return *i;
        if (auto pr = split_r_unit(name)) {
            add_r_atom(pr->first, pr->second);
            return *unit_index(name);
        }
        throw ContractError("attack endpoint '" + name + "' is not a declared unit");
    };
    const auto a = resolve(from);
    const auto b = resolve(to);
    if (std::find(attacks_.begin(), attacks_.end(), std::pair{a, b}) != attacks_.end()) {
        throw ContractError("attack " + from + " -> " + to + " declared twice");
    }
    attacks_.emplace_back(a, b);
}

PredFormula attack_formula(const HigherNetwork& hn, std::size_t attacker, std::size_t target) {
    const auto& u = hn.units().at(attacker);
    const auto& v = hn.units().at(target);
    if (u.kind == Unit::Kind::Node && v.kind == Unit::Kind::Node) {
        return PredFormula::imp(
            PredFormula::conj(u.formula, PredFormula::r(Term::constant(u.name), Term::constant(v.name))),
            PredFormula::neg(v.formula));
    }
    return PredFormula::imp(u.formula, PredFormula::neg(v.formula));
}

PredTheory star_theory(const HigherNetwork& hn, StarScope scope) {
    PredTheory theory(TheoryKind::Star);
    const auto n = PredFormula::n();
    const auto& units = hn.units();
    for (std::size_t x = 0; x < units.size(); ++x) {
        const auto& target = units[x];
        std::vector<PredFormula> ins, outs;
        auto joint = [&](const Unit& y) {
            const auto r = PredFormula::r(Term::constant(y.name), Term::constant(target.name));
            ins.push_back(PredFormula::conj(y.formula, r));
            outs.push_back(PredFormula::disj(PredFormula::neg(y.formula), PredFormula::neg(r)));
        };
        auto plain = [&](const Unit& y) {
            ins.push_back(y.formula);
            outs.push_back(PredFormula::neg(y.formula));
        };
        const bool target_node = target.kind == Unit::Kind::Node;
        if (target_node && scope == StarScope::AllNodes) {
            for (std::size_t y = 0; y < hn.node_count(); ++y) joint(units[y]);
        }
        for (const auto& [from, to] : hn.attacks()) {
            if (to != x) continue;
            const auto& y = units[from];
            if (y.kind == Unit::Kind::Node && target_node) {
                if (scope == StarScope::DeclaredOnly) joint(y);
            } else {
                plain(y);
            }
        }
        const auto in_form = target.formula;
        const auto out_form = PredFormula::neg(target.formula);
        const auto all_out = PredFormula::conj_all(outs);
        const auto some_in = PredFormula::disj_all(ins);
        theory.add("a1[" + target.name + "]", PredFormula::imp(in_form, PredFormula::disj(n, all_out)));
        theory.add("a2[" + target.name + "]", PredFormula::imp(all_out, PredFormula::disj(n, in_form)));
        theory.add("b1[" + target.name + "]", PredFormula::imp(out_form, PredFormula::disj(n, some_in)));
        theory.add("b2[" + target.name + "]", PredFormula::imp(some_in, PredFormula::disj(n, out_form)));
    }
    return theory;
}

namespace {

// R pairs the grounded theory reads, as element names.
std::set<std::pair<std::string, std::string>> mentioned_pairs(const HigherNetwork& hn, const PredTheory& theory) {
    const auto& d = hn.domain();
    const auto n = static_cast<std::uint32_t>(d.size());
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& f : theory.formulas()) {
        detail::Program p;
        detail::compile_pred(f, d, p);
        for (auto a : p.atom_indices()) {
            if (a < n) continue;
            const auto k = a - n;
            out.emplace(d.element(k / n), d.element(k % n));
        }
    }
    return out;
}

}  // namespace

std::size_t count_unknowns(const HigherNetwork& hn, const SolveOptions& opts) {
    const std::size_t nodes = hn.node_count();
    const std::size_t wffs = hn.units().size() - nodes;
    std::size_t r_atoms = 0;
    if (!opts.pin_r) {
        r_atoms = opts.scope == StarScope::AllNodes ? nodes * nodes
                                                    : mentioned_pairs(hn, star_theory(hn, opts.scope)).size();
    }
    return nodes + r_atoms + wffs;
}

std::vector<GeneralizedModel> solve_higher(const HigherNetwork& hn, const SolveOptions& opts) {
    const auto unknowns = count_unknowns(hn, opts);
    if (unknowns > opts.max_unknowns) {
        throw SearchSpaceError("network has " + std::to_string(unknowns) + " three-valued unknowns (nodes + R atoms + wffs); the bound is " +
                               std::to_string(opts.max_unknowns));
    }
    const auto theory = star_theory(hn, opts.scope);
    InterpOptions iopts;
    iopts.r_decided = false;
    if (opts.pin_r) {
        iopts.fixed_r = *opts.pin_r;
    } else if (opts.scope == StarScope::DeclaredOnly) {
        iopts.r_support = mentioned_pairs(hn, theory);
    }
    std::vector<GeneralizedModel> out;
    for (auto& m : enumerate_interps(hn.domain(), theory.formulas(), iopts)) {
        GeneralizedModel gm{std::move(m), {}};
        for (std::size_t i = hn.node_count(); i < hn.units().size(); ++i) {
            gm.statuses.emplace_back(hn.units()[i].name, pred_value(hn.units()[i].formula, gm.interp));
        }
        out.push_back(std::move(gm));
    }
    return out;
}

}  // namespace g3af
