#include "g3af/translate.hpp"

#include <algorithm>
#include <numeric>

#include "g3af/error.hpp"
#include "g3af/formula_text.hpp"

namespace g3af {

std::string_view to_string(TheoryKind kind) noexcept {
    switch (kind) {
        case TheoryKind::DeltaProp: return "delta-prop";
        case TheoryKind::Theta0: return "theta0";
        case TheoryKind::Theta1: return "theta1";
        case TheoryKind::Instantiated: return "instantiated";
        case TheoryKind::DeltaPred: return "delta-pred";
        case TheoryKind::OA: return "o-a";
        case TheoryKind::Star: return "star";
    }
    return "?";
}

template <class F>
void Theory<F>::add(std::string name, F formula) {
    if (find(name) != nullptr) throw ContractError("theory already has a formula named '" + name + "'");
    entries_.emplace_back(std::move(name), std::move(formula));
}

template <class F>
std::vector<F> Theory<F>::formulas() const {
    std::vector<F> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.second);
    return out;
}

template <class F>
const F* Theory<F>::find(std::string_view name) const {
    for (const auto& e : entries_) {
        if (e.first == name) return &e.second;
    }
    return nullptr;
}

template class Theory<PropFormula>;
template class Theory<PredFormula>;

namespace {

template <class T>
std::string theory_text(const T& theory) {
    std::string out;
    for (const auto& [name, f] : theory.entries()) out += name + ": " + to_text(f) + "\n";
    return out;
}

std::vector<std::string> argument_names(const Framework& f) {
    std::vector<std::string> out;
    for (const auto& a : f.arguments()) out.push_back(a.str());
    return out;
}

PropFormula arg_atom(const Framework& f, std::size_t i) { return PropFormula::atom(f.argument(i).str()); }

PropFormula replace_n(const PropFormula& f, const PropFormula& by) {
    using K = PropFormula::Kind;
    switch (f.kind()) {
        case K::NConst: return by;
        case K::Atom:
        case K::Top:
        case K::Bot: return f;
        case K::Neg: return PropFormula::neg(replace_n(f.lhs(), by));
        case K::And: return PropFormula::conj(replace_n(f.lhs(), by), replace_n(f.rhs(), by));
        case K::Or: return PropFormula::disj(replace_n(f.lhs(), by), replace_n(f.rhs(), by));
        case K::Imp: return PropFormula::imp(replace_n(f.lhs(), by), replace_n(f.rhs(), by));
    }
    return f;
}

Label label_of(ThreeVal v) {
    switch (v) {
        case ThreeVal::TT: return Label::In;
        case ThreeVal::FF: return Label::Out;
        case ThreeVal::FT: return Label::Und;
    }
    return Label::Und;
}

ThreeVal value_of(Label l) {
    switch (l) {
        case Label::In: return ThreeVal::TT;
        case Label::Out: return ThreeVal::FF;
        case Label::Und: return ThreeVal::FT;
    }
    return ThreeVal::FT;
}

std::vector<Labelling> labellings_of(const Framework& f, const std::vector<PropAssignment>& models) {
    std::vector<Labelling> out;
    out.reserve(models.size());
    for (const auto& h : models) out.push_back(assignment_to_labelling(f, h));
    return out;
}

}  // namespace

std::string to_text(const PropTheory& theory) { return theory_text(theory); }
std::string to_text(const PredTheory& theory) { return theory_text(theory); }

PropTheory delta_prop(const Framework& f) {
    PropTheory theory(TheoryKind::DeltaProp);
    const auto n = PropFormula::n();
    for (std::size_t x = 0; x < f.size(); ++x) {
        std::vector<PropFormula> out_forms, in_forms;
        for (auto y : f.attackers(x)) {
            out_forms.push_back(PropFormula::neg(arg_atom(f, y)));
            in_forms.push_back(arg_atom(f, y));
        }
        const auto ax = arg_atom(f, x);
        const auto all_out = PropFormula::conj_all(out_forms);
        const auto some_in = PropFormula::disj_all(in_forms);
        const auto& name = f.argument(x).str();
        theory.add("a1[" + name + "]", PropFormula::imp(ax, PropFormula::disj(n, all_out)));
        theory.add("a2[" + name + "]", PropFormula::imp(all_out, PropFormula::disj(n, ax)));
        theory.add("b1[" + name + "]", PropFormula::imp(PropFormula::neg(ax), PropFormula::disj(n, some_in)));
        theory.add("b2[" + name + "]", PropFormula::imp(some_in, PropFormula::disj(PropFormula::neg(ax), n)));
    }
    return theory;
}

PropAssignment labelling_to_assignment(const Framework& f, const Labelling& lab) {
    if (lab.size() != f.size()) throw ContractError("labelling does not match the framework");
    PropAssignment h;
    for (std::size_t i = 0; i < f.size(); ++i) h.emplace(f.argument(i).str(), value_of(lab[i]));
    return h;
}

Labelling assignment_to_labelling(const Framework& f, const PropAssignment& h) {
    Labelling lab;
    lab.labels.reserve(f.size());
    for (const auto& a : f.arguments()) {
        auto it = h.find(a.str());
        if (it == h.end()) throw ContractError("assignment misses argument '" + a.str() + "'");
        lab.labels.push_back(label_of(it->second));
    }
    return lab;
}

CorrespondenceReport compare_labellings(std::string framework, std::vector<Labelling> from_models,
                                        std::vector<Labelling> labellings) {
    CorrespondenceReport r;
    r.framework = std::move(framework);
    r.model_count = from_models.size();
    r.labelling_count = labellings.size();
    std::sort(from_models.begin(), from_models.end());
    from_models.erase(std::unique(from_models.begin(), from_models.end()), from_models.end());
    std::sort(labellings.begin(), labellings.end());
    labellings.erase(std::unique(labellings.begin(), labellings.end()), labellings.end());
    std::set_intersection(from_models.begin(), from_models.end(), labellings.begin(), labellings.end(),
                          std::back_inserter(r.matched));
    std::set_difference(from_models.begin(), from_models.end(), labellings.begin(), labellings.end(),
                        std::back_inserter(r.only_models));
    std::set_difference(labellings.begin(), labellings.end(), from_models.begin(), from_models.end(),
                        std::back_inserter(r.only_labellings));
    return r;
}

CorrespondenceReport verify_thm2(const Framework& f) {
    const auto formulas = delta_prop(f).formulas();
    auto models = enumerate_models(formulas, argument_names(f));
    return compare_labellings(f.describe(), labellings_of(f, models), enumerate_complete(f));
}

PropFormula defined_n(const Framework& f) {
    std::vector<PropFormula> parts;
    for (std::size_t i = 0; i < f.size(); ++i) {
        parts.push_back(PropFormula::disj(arg_atom(f, i), PropFormula::neg(arg_atom(f, i))));
    }
    return PropFormula::conj_all(std::move(parts));
}

ThetaTheories theta(const Framework& f) {
    ThetaTheories out;
    for (std::size_t x = 0; x < f.size(); ++x) {
        std::vector<PropFormula> out_forms;
        for (auto y : f.attackers(x)) out_forms.push_back(PropFormula::neg(arg_atom(f, y)));
        out.theta0.add("t0[" + f.argument(x).str() + "]",
                       PropFormula::iff(arg_atom(f, x), PropFormula::conj_all(std::move(out_forms))));
    }
    const auto dn = defined_n(f);
    const auto base = delta_prop(f);
    for (const auto& [name, clause] : base.entries()) out.theta1.add(name, replace_n(clause, dn));
    return out;
}

ThetaReport verify_theta(const Framework& f) {
    const auto names = argument_names(f);
    const auto th = theta(f);
    const auto dn = defined_n(f);
    const auto complete = enumerate_complete(f);

    std::vector<Labelling> stable, non_stable;
    for (const auto& lab : complete) (lab.is_two_valued() ? stable : non_stable).push_back(lab);

    std::vector<Labelling> route0, route1;
    for (const auto& h : enumerate_models(th.theta0.formulas(), names)) {
        auto lab = assignment_to_labelling(f, h);
        if (lab.is_two_valued()) route0.push_back(std::move(lab));
    }
    for (const auto& h : enumerate_models(th.theta1.formulas(), names)) {
        if (value(dn, h) == ThreeVal::FT) route1.push_back(assignment_to_labelling(f, h));
    }
    std::vector<Labelling> both = route0;
    both.insert(both.end(), route1.begin(), route1.end());

    ThetaReport r;
    r.stable = compare_labellings(f.describe(), std::move(route0), std::move(stable));
    r.non_stable = compare_labellings(f.describe(), std::move(route1), std::move(non_stable));
    r.combined = compare_labellings(f.describe(), std::move(both), complete);
    return r;
}

PropTheory instantiate(const Framework& f, const std::map<ArgumentId, PropFormula>& subst) {
    std::map<std::string, PropFormula> by_name;
    for (const auto& [x, formula] : subst) {
        f.index_of_or_throw(x);
        for (const auto& atom : atoms(formula)) {
            if (atom != x.str() && f.index_of(ArgumentId(atom))) {
                throw ContractError("formula for '" + x.str() + "' mentions argument '" + atom + "'");
            }
        }
        by_name.emplace(x.str(), formula);
    }
    PropTheory theory(TheoryKind::Instantiated);
    const auto base = delta_prop(f);
    for (const auto& [name, clause] : base.entries()) theory.add(name, substitute(clause, by_name));
    return theory;
}

std::vector<Labelling> instantiation_patterns(const Framework& f, const std::map<ArgumentId, PropFormula>& subst) {
    const auto theory = instantiate(f, subst);
    std::set<std::string> names;
    for (const auto& clause : theory.formulas()) {
        auto a = atoms(clause);
        names.insert(a.begin(), a.end());
    }
    std::vector<PropFormula> reading;
    for (std::size_t i = 0; i < f.size(); ++i) {
        auto it = subst.find(f.argument(i));
        reading.push_back(it == subst.end() ? arg_atom(f, i) : it->second);
    }
    for (const auto& r : reading) {
        auto a = atoms(r);
        names.insert(a.begin(), a.end());
    }
    std::vector<Labelling> out;
    for (const auto& h : enumerate_models(theory.formulas(), {names.begin(), names.end()})) {
        Labelling lab;
        for (const auto& r : reading) lab.labels.push_back(label_of(value(r, h)));
        out.push_back(std::move(lab));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

Domain domain_of(const Framework& f) { return Domain(argument_names(f)); }

PredFormula decidedness() {
    const auto x = Term::var("X");
    const auto y = Term::var("Y");
    return PredFormula::forall(
        "X", PredFormula::forall("Y", PredFormula::disj(PredFormula::r(x, y), PredFormula::neg(PredFormula::r(x, y)))));
}

}  // namespace

PredTheory delta_pred(const Framework& f) {
    domain_of(f);
    PredTheory theory(TheoryKind::DeltaPred);
    const auto x = Term::var("X");
    const auto y = Term::var("Y");
    const auto n = PredFormula::n();
    const auto in_x = PredFormula::in(x);
    const auto attackers_out = PredFormula::forall(
        "Y", PredFormula::imp(PredFormula::r(y, x), PredFormula::neg(PredFormula::in(y))));
    const auto attacker_in = PredFormula::exists("Y", PredFormula::conj(PredFormula::r(y, x), PredFormula::in(y)));
    theory.add("A1", PredFormula::forall("X", PredFormula::imp(in_x, PredFormula::disj(n, attackers_out))));
    theory.add("A2", PredFormula::forall("X", PredFormula::imp(attackers_out, PredFormula::disj(n, in_x))));
    theory.add("B1", PredFormula::forall("X", PredFormula::imp(PredFormula::neg(in_x), PredFormula::disj(n, attacker_in))));
    theory.add("B2", PredFormula::forall("X", PredFormula::imp(attacker_in, PredFormula::disj(n, PredFormula::neg(in_x)))));
    theory.add("DEC", decidedness());
    return theory;
}

Labelling interp_to_labelling(const PredInterp& m) {
    Labelling lab;
    for (auto v : m.in_val) lab.labels.push_back(label_of(v));
    return lab;
}

CorrespondenceReport verify_thm42(const Framework& f) {
    InterpOptions opts;
    opts.fixed_r.emplace();
    for (const auto& [from, to] : f.attack_pairs()) opts.fixed_r->emplace(from.str(), to.str());
    const auto formulas = delta_pred(f).formulas();
    std::vector<Labelling> labs;
    for (const auto& m : enumerate_interps(domain_of(f), formulas, opts)) labs.push_back(interp_to_labelling(m));
    return compare_labellings(f.describe(), std::move(labs), enumerate_complete(f));
}

PredFormula o_a(const Framework& f) {
    const std::size_t n = f.size();
    std::vector<Term> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(Term::var("X" + std::to_string(i + 1)));
    const auto y = Term::var("Y");

    std::vector<PredFormula> distinct;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) distinct.push_back(PredFormula::neq(xs[i], xs[j]));
    }
    std::vector<PredFormula> listed;
    for (const auto& xi : xs) listed.push_back(PredFormula::eq(y, xi));
    std::vector<PredFormula> pa;
    for (const auto& [i, j] : f.attacks()) pa.push_back(PredFormula::r(xs[i], xs[j]));

    PredFormula body = PredFormula::conj(
        PredFormula::conj(PredFormula::conj_all(std::move(distinct)),
                          PredFormula::forall("Y", PredFormula::disj_all(std::move(listed)))),
        PredFormula::conj_all(std::move(pa)));
    for (std::size_t i = n; i > 0; --i) body = PredFormula::exists(xs[i - 1].name, std::move(body));
    return PredFormula::conj(decidedness(), std::move(body));
}

OAReport verify_oa(const Framework& f) {
    const auto d = domain_of(f);
    const std::size_t n = f.size();
    auto formulas = delta_pred(f).formulas();
    formulas.push_back(o_a(f));
    InterpOptions opts;
    opts.r_decided = true;
    const auto models = enumerate_interps(d, formulas, opts);

    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    OAReport report;
    report.model_count = models.size();
    std::set<std::vector<ThreeVal>> relations;
    std::vector<Labelling> mapped_back;
    for (const auto& m : models) {
        relations.insert(m.r_val);
        std::vector<Attack> atts;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (m.r(i, j) == ThreeVal::TT) atts.emplace_back(f.argument(i), f.argument(j));
            }
        }
        const Framework own(std::vector<ArgumentId>(f.arguments().begin(), f.arguments().end()), atts);
        const auto lab = interp_to_labelling(m);
        if (!check_complete(own, lab).complete) ++report.not_complete;

        bool covered = false;
        for (const auto& p : perms) {
            bool contains = true;
            std::size_t hits = 0;
            for (const auto& [i, j] : f.attacks()) {
                if (m.r(p[i], p[j]) != ThreeVal::TT) {
                    contains = false;
                    break;
                }
                ++hits;
            }
            if (!contains) continue;
            covered = true;
            if (hits == own.attacks().size()) {
                Labelling back;
                for (std::size_t i = 0; i < n; ++i) back.labels.push_back(lab[p[i]]);
                mapped_back.push_back(std::move(back));
            }
        }
        if (!covered) ++report.not_covering;
    }
    report.relations_checked = relations.size();
    report.exact = compare_labellings(f.describe(), std::move(mapped_back), enumerate_complete(f));
    return report;
}

}  // namespace g3af
