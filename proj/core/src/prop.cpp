#include "g3af/prop.hpp"

#include <algorithm>
#include <unordered_map>

#include "compiled.hpp"
#include "g3af/error.hpp"
#include "g3af/framework.hpp"
#include "prop_internal.hpp"

namespace g3af {

struct PropFormula::Node {
    Kind kind;
    std::string name;
    std::vector<PropFormula> kids;
};

namespace {

const std::string kNoName;

}  // namespace

PropFormula PropFormula::atom(std::string name) {
    if (!ArgumentId::is_valid(name) || name == "true" || name == "false") {
        throw ContractError("invalid atom name '" + name + "'");
    }
    return PropFormula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}}));
}

PropFormula PropFormula::n() {
    static const PropFormula f(std::make_shared<const Node>(Node{Kind::NConst, {}, {}}));
    return f;
}

PropFormula PropFormula::top() {
    static const PropFormula f(std::make_shared<const Node>(Node{Kind::Top, {}, {}}));
    return f;
}

PropFormula PropFormula::bot() {
    static const PropFormula f(std::make_shared<const Node>(Node{Kind::Bot, {}, {}}));
    return f;
}

PropFormula PropFormula::neg(PropFormula f) {
    return PropFormula(std::make_shared<const Node>(Node{Kind::Neg, {}, {std::move(f)}}));
}

PropFormula PropFormula::conj(PropFormula a, PropFormula b) {
    return PropFormula(std::make_shared<const Node>(Node{Kind::And, {}, {std::move(a), std::move(b)}}));
}

PropFormula PropFormula::disj(PropFormula a, PropFormula b) {
    return PropFormula(std::make_shared<const Node>(Node{Kind::Or, {}, {std::move(a), std::move(b)}}));
}

PropFormula PropFormula::imp(PropFormula a, PropFormula b) {
    return PropFormula(std::make_shared<const Node>(Node{Kind::Imp, {}, {std::move(a), std::move(b)}}));
}

PropFormula PropFormula::iff(PropFormula a, PropFormula b) { return conj(imp(a, b), imp(b, a)); }

PropFormula PropFormula::conj_all(std::vector<PropFormula> fs) {
    if (fs.empty()) return top();
    PropFormula acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(std::move(acc), std::move(fs[i]));
    return acc;
}

PropFormula PropFormula::disj_all(std::vector<PropFormula> fs) {
    if (fs.empty()) return bot();
    PropFormula acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = disj(std::move(acc), std::move(fs[i]));
    return acc;
}

PropFormula::Kind PropFormula::kind() const noexcept { return node_->kind; }

const std::string& PropFormula::name() const {
    if (node_->kind != Kind::Atom) return kNoName;
    return node_->name;
}

const PropFormula& PropFormula::lhs() const {
    if (node_->kids.empty()) throw ContractError("formula has no operands");
    return node_->kids[0];
}

const PropFormula& PropFormula::rhs() const {
    if (node_->kids.size() < 2) throw ContractError("formula has no right operand");
    return node_->kids[1];
}

bool operator==(const PropFormula& a, const PropFormula& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->kind != b.node_->kind || a.node_->name != b.node_->name) return false;
    return a.node_->kids == b.node_->kids;
}

namespace {

void collect_atoms(const PropFormula& f, std::set<std::string>& out) {
    switch (f.kind()) {
        case PropFormula::Kind::Atom: out.insert(f.name()); break;
        case PropFormula::Kind::NConst:
        case PropFormula::Kind::Top:
        case PropFormula::Kind::Bot: break;
        case PropFormula::Kind::Neg: collect_atoms(f.lhs(), out); break;
        default:
            collect_atoms(f.lhs(), out);
            collect_atoms(f.rhs(), out);
    }
}

}  // namespace

std::set<std::string> atoms(const PropFormula& f) {
    std::set<std::string> out;
    collect_atoms(f, out);
    return out;
}

bool contains_nconst(const PropFormula& f) {
    switch (f.kind()) {
        case PropFormula::Kind::NConst: return true;
        case PropFormula::Kind::Atom:
        case PropFormula::Kind::Top:
        case PropFormula::Kind::Bot: return false;
        case PropFormula::Kind::Neg: return contains_nconst(f.lhs());
        default: return contains_nconst(f.lhs()) || contains_nconst(f.rhs());
    }
}

PropFormula substitute(const PropFormula& f, const std::map<std::string, PropFormula>& subst) {
    switch (f.kind()) {
        case PropFormula::Kind::Atom: {
            auto it = subst.find(f.name());
            return it == subst.end() ? f : it->second;
        }
        case PropFormula::Kind::NConst:
        case PropFormula::Kind::Top:
        case PropFormula::Kind::Bot: return f;
        case PropFormula::Kind::Neg: return PropFormula::neg(substitute(f.lhs(), subst));
        case PropFormula::Kind::And: return PropFormula::conj(substitute(f.lhs(), subst), substitute(f.rhs(), subst));
        case PropFormula::Kind::Or: return PropFormula::disj(substitute(f.lhs(), subst), substitute(f.rhs(), subst));
        case PropFormula::Kind::Imp: return PropFormula::imp(substitute(f.lhs(), subst), substitute(f.rhs(), subst));
    }
    return f;
}

bool eval_world(World w, const PropFormula& f, const PropAssignment& h) {
    switch (f.kind()) {
        case PropFormula::Kind::Atom: {
            auto it = h.find(f.name());
            if (it == h.end()) throw ContractError("atom '" + f.name() + "' is unassigned");
            return holds_at(it->second, w);
        }
        case PropFormula::Kind::NConst: return w == World::s;
        case PropFormula::Kind::Top: return true;
        case PropFormula::Kind::Bot: return false;
        case PropFormula::Kind::And: return eval_world(w, f.lhs(), h) && eval_world(w, f.rhs(), h);
        case PropFormula::Kind::Or: return eval_world(w, f.lhs(), h) || eval_world(w, f.rhs(), h);
        case PropFormula::Kind::Neg:
            for (World u : kWorlds) {
                if (u >= w && eval_world(u, f.lhs(), h)) return false;
            }
            return true;
        case PropFormula::Kind::Imp:
            for (World u : kWorlds) {
                if (u >= w && eval_world(u, f.lhs(), h) && !eval_world(u, f.rhs(), h)) return false;
            }
            return true;
    }
    return false;
}

ThreeVal value(const PropFormula& f, const PropAssignment& h) {
    return from_worlds(eval_world(World::t, f, h), eval_world(World::s, f, h));
}

namespace detail {

void compile_prop(const PropFormula& f, const std::unordered_map<std::string, std::uint32_t>& index, Program& out) {
    switch (f.kind()) {
        case PropFormula::Kind::Atom: {
            auto it = index.find(f.name());
            if (it == index.end()) throw ContractError("atom '" + f.name() + "' is not in the enumerated atom set");
            out.atom(it->second);
            return;
        }
        case PropFormula::Kind::NConst: out.constant(ThreeVal::FT); return;
        case PropFormula::Kind::Top: out.constant(ThreeVal::TT); return;
        case PropFormula::Kind::Bot: out.constant(ThreeVal::FF); return;
        case PropFormula::Kind::Neg:
            compile_prop(f.lhs(), index, out);
            out.op(Op::Neg);
            return;
        case PropFormula::Kind::And:
        case PropFormula::Kind::Or:
        case PropFormula::Kind::Imp:
            compile_prop(f.lhs(), index, out);
            compile_prop(f.rhs(), index, out);
            out.op(f.kind() == PropFormula::Kind::And ? Op::And : f.kind() == PropFormula::Kind::Or ? Op::Or : Op::Imp);
            return;
    }
}

}  // namespace detail

std::vector<PropAssignment> enumerate_models(std::span<const PropFormula> theory, const std::vector<std::string>& atoms) {
    std::unordered_map<std::string, std::uint32_t> index;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (!index.emplace(atoms[i], static_cast<std::uint32_t>(i)).second) {
            throw ContractError("atom '" + atoms[i] + "' listed twice");
        }
    }
    std::vector<detail::Program> programs(theory.size());
    for (std::size_t i = 0; i < theory.size(); ++i) detail::compile_prop(theory[i], index, programs[i]);

    std::vector<PropAssignment> out;
    std::vector<ThreeVal> vals(atoms.size(), ThreeVal::FF);
    while (true) {
        bool ok = std::all_of(programs.begin(), programs.end(),
                              [&](const detail::Program& p) { return p.run(vals.data()) == ThreeVal::TT; });
        if (ok) {
            PropAssignment h;
            for (std::size_t i = 0; i < atoms.size(); ++i) h.emplace(atoms[i], vals[i]);
            out.push_back(std::move(h));
        }
        std::size_t i = vals.size();
        while (i > 0) {
            --i;
            if (vals[i] != ThreeVal::TT) {
                vals[i] = static_cast<ThreeVal>(static_cast<int>(vals[i]) + 1);
                break;
            }
            vals[i] = ThreeVal::FF;
            if (i == 0) return out;
        }
        if (vals.empty()) return out;
    }
}

Validity is_valid(const PropFormula& f) {
    auto names = atoms(f);
    std::vector<std::string> order(names.begin(), names.end());
    std::unordered_map<std::string, std::uint32_t> index;
    for (std::size_t i = 0; i < order.size(); ++i) index.emplace(order[i], static_cast<std::uint32_t>(i));
    detail::Program program;
    detail::compile_prop(f, index, program);

    std::vector<ThreeVal> vals(order.size(), ThreeVal::FF);
    while (true) {
        if (program.run(vals.data()) != ThreeVal::TT) {
            PropAssignment h;
            for (std::size_t i = 0; i < order.size(); ++i) h.emplace(order[i], vals[i]);
            return {false, std::move(h)};
        }
        std::size_t i = vals.size();
        bool wrapped = true;
        while (i > 0) {
            --i;
            if (vals[i] != ThreeVal::TT) {
                vals[i] = static_cast<ThreeVal>(static_cast<int>(vals[i]) + 1);
                wrapped = false;
                break;
            }
            vals[i] = ThreeVal::FF;
        }
        if (wrapped) return {true, std::nullopt};
    }
}

}  // namespace g3af
