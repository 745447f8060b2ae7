#include "g3af/pred.hpp"

#include <algorithm>

#include "compiled.hpp"
#include "g3af/error.hpp"
#include "g3af/framework.hpp"
#include "prop_internal.hpp"

namespace g3af {

namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }

}  // namespace

Term Term::var(std::string name) {
    if (!ArgumentId::is_valid(name) || !is_upper(name.front())) {
        throw ContractError("'" + name + "' is not a variable name (variables start with an uppercase letter)");
    }
    return Term{Kind::Var, std::move(name)};
}

Term Term::constant(std::string name) {
    if (!ArgumentId::is_valid(name) || is_upper(name.front()) || name == "true" || name == "false" ||
        name == "forall" || name == "exists") {
        throw ContractError("'" + name + "' is not a constant name (constants do not start with an uppercase letter)");
    }
    return Term{Kind::Const, std::move(name)};
}

struct PredFormula::Node {
    Kind kind;
    std::vector<Term> terms;
    std::string var;
    std::vector<PredFormula> kids;
};

namespace {

const std::string kNoVar;
const std::vector<Term> kNoTerms;

}  // namespace

PredFormula PredFormula::in(Term t) {
    return PredFormula(std::make_shared<const Node>(Node{Kind::In, {std::move(t)}, {}, {}}));
}

PredFormula PredFormula::r(Term a, Term b) {
    return PredFormula(std::make_shared<const Node>(Node{Kind::R, {std::move(a), std::move(b)}, {}, {}}));
}

PredFormula PredFormula::eq(Term a, Term b) {
    return PredFormula(std::make_shared<const Node>(Node{Kind::Eq, {std::move(a), std::move(b)}, {}, {}}));
}

PredFormula PredFormula::neq(Term a, Term b) { return neg(eq(std::move(a), std::move(b))); }

PredFormula PredFormula::n() {
    static const PredFormula f(std::make_shared<const Node>(Node{Kind::NConst, {}, {}, {}}));
    return f;
}

PredFormula PredFormula::top() {
    static const PredFormula f(std::make_shared<const Node>(Node{Kind::Top, {}, {}, {}}));
    return f;
}

PredFormula PredFormula::bot() {
    static const PredFormula f(std::make_shared<const Node>(Node{Kind::Bot, {}, {}, {}}));
    return f;
}

PredFormula PredFormula::neg(PredFormula f) {
    return PredFormula(std::make_shared<const Node>(Node{Kind::Neg, {}, {}, {std::move(f)}}));
}

PredFormula PredFormula::conj(PredFormula a, PredFormula b) {
    return PredFormula(std::make_shared<const Node>(Node{Kind::And, {}, {}, {std::move(a), std::move(b)}}));
}

PredFormula PredFormula::disj(PredFormula a, PredFormula b) {
    return PredFormula(std::make_shared<const Node>(Node{Kind::Or, {}, {}, {std::move(a), std::move(b)}}));
}

PredFormula PredFormula::imp(PredFormula a, PredFormula b) {
    return PredFormula(std::make_shared<const Node>(Node{Kind::Imp, {}, {}, {std::move(a), std::move(b)}}));
}

PredFormula PredFormula::iff(PredFormula a, PredFormula b) { return conj(imp(a, b), imp(b, a)); }

PredFormula PredFormula::conj_all(std::vector<PredFormula> fs) {
    if (fs.empty()) return top();
    PredFormula acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(std::move(acc), std::move(fs[i]));
    return acc;
}

PredFormula PredFormula::disj_all(std::vector<PredFormula> fs) {
    if (fs.empty()) return bot();
    PredFormula acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = disj(std::move(acc), std::move(fs[i]));
    return acc;
}

PredFormula PredFormula::forall(std::string var, PredFormula body) {
    Term::var(var);
    return PredFormula(std::make_shared<const Node>(Node{Kind::Forall, {}, std::move(var), {std::move(body)}}));
}

PredFormula PredFormula::exists(std::string var, PredFormula body) {
    Term::var(var);
    return PredFormula(std::make_shared<const Node>(Node{Kind::Exists, {}, std::move(var), {std::move(body)}}));
}

PredFormula::Kind PredFormula::kind() const noexcept { return node_->kind; }

const std::vector<Term>& PredFormula::terms() const { return node_->terms.empty() ? kNoTerms : node_->terms; }

const std::string& PredFormula::var() const { return node_->var.empty() ? kNoVar : node_->var; }

const PredFormula& PredFormula::lhs() const {
    if (node_->kids.empty()) throw ContractError("formula has no operands");
    return node_->kids[0];
}

const PredFormula& PredFormula::rhs() const {
    if (node_->kids.size() < 2) throw ContractError("formula has no right operand");
    return node_->kids[1];
}

bool operator==(const PredFormula& a, const PredFormula& b) {
    if (a.node_ == b.node_) return true;
    return a.node_->kind == b.node_->kind && a.node_->terms == b.node_->terms && a.node_->var == b.node_->var &&
           a.node_->kids == b.node_->kids;
}

namespace {

using K = PredFormula::Kind;

bool is_atomic(K k) { return k == K::In || k == K::R || k == K::Eq; }
bool is_binary(K k) { return k == K::And || k == K::Or || k == K::Imp; }
bool is_quant(K k) { return k == K::Forall || k == K::Exists; }

void collect_free(const PredFormula& f, std::vector<std::string>& bound, std::set<std::string>& out) {
    if (is_atomic(f.kind())) {
        for (const auto& t : f.terms()) {
            if (t.is_var() && std::find(bound.begin(), bound.end(), t.name) == bound.end()) out.insert(t.name);
        }
    } else if (is_quant(f.kind())) {
        bound.push_back(f.var());
        collect_free(f.body(), bound, out);
        bound.pop_back();
    } else if (f.kind() == K::Neg) {
        collect_free(f.lhs(), bound, out);
    } else if (is_binary(f.kind())) {
        collect_free(f.lhs(), bound, out);
        collect_free(f.rhs(), bound, out);
    }
}

template <class Pred>
bool any_node(const PredFormula& f, Pred pred) {
    if (pred(f)) return true;
    if (f.kind() == K::Neg || is_quant(f.kind())) return any_node(f.lhs(), pred);
    if (is_binary(f.kind())) return any_node(f.lhs(), pred) || any_node(f.rhs(), pred);
    return false;
}

void collect_constants(const PredFormula& f, std::set<std::string>& out) {
    if (is_atomic(f.kind())) {
        for (const auto& t : f.terms()) {
            if (!t.is_var()) out.insert(t.name);
        }
    } else if (f.kind() == K::Neg || is_quant(f.kind())) {
        collect_constants(f.lhs(), out);
    } else if (is_binary(f.kind())) {
        collect_constants(f.lhs(), out);
        collect_constants(f.rhs(), out);
    }
}

}  // namespace

std::set<std::string> free_vars(const PredFormula& f) {
    std::vector<std::string> bound;
    std::set<std::string> out;
    collect_free(f, bound, out);
    return out;
}

bool is_closed(const PredFormula& f) { return free_vars(f).empty(); }

std::set<std::string> constants(const PredFormula& f) {
    std::set<std::string> out;
    collect_constants(f, out);
    return out;
}

bool mentions_in(const PredFormula& f) {
    return any_node(f, [](const PredFormula& g) { return g.kind() == K::In; });
}

bool mentions_nconst(const PredFormula& f) {
    return any_node(f, [](const PredFormula& g) { return g.kind() == K::NConst; });
}

PredFormula substitute_var(const PredFormula& f, const std::string& var, const Term& t) {
    auto sub = [&](const Term& u) { return u.is_var() && u.name == var ? t : u; };
    switch (f.kind()) {
        case K::In: return PredFormula::in(sub(f.terms()[0]));
        case K::R: return PredFormula::r(sub(f.terms()[0]), sub(f.terms()[1]));
        case K::Eq: return PredFormula::eq(sub(f.terms()[0]), sub(f.terms()[1]));
        case K::NConst:
        case K::Top:
        case K::Bot: return f;
        case K::Neg: return PredFormula::neg(substitute_var(f.lhs(), var, t));
        case K::And: return PredFormula::conj(substitute_var(f.lhs(), var, t), substitute_var(f.rhs(), var, t));
        case K::Or: return PredFormula::disj(substitute_var(f.lhs(), var, t), substitute_var(f.rhs(), var, t));
        case K::Imp: return PredFormula::imp(substitute_var(f.lhs(), var, t), substitute_var(f.rhs(), var, t));
        case K::Forall:
            if (f.var() == var) return f;
            return PredFormula::forall(f.var(), substitute_var(f.body(), var, t));
        case K::Exists:
            if (f.var() == var) return f;
            return PredFormula::exists(f.var(), substitute_var(f.body(), var, t));
    }
    return f;
}

Domain::Domain(std::vector<std::string> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw ContractError("a domain needs at least one element");
    for (const auto& e : elements_) Term::constant(e);
    std::sort(elements_.begin(), elements_.end());
    if (auto dup = std::adjacent_find(elements_.begin(), elements_.end()); dup != elements_.end()) {
        throw ContractError("duplicate domain element '" + *dup + "'");
    }
}

std::optional<std::size_t> Domain::index_of(const std::string& name) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), name);
    if (it == elements_.end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

namespace {

void check_interp(const PredInterp& m) {
    const auto n = m.domain.size();
    if (m.in_val.size() != n) throw ContractError("in_val does not cover the domain");
    if (m.r_val.size() != n * n) throw ContractError("r_val does not cover the domain squared");
    if (m.r_decided && std::any_of(m.r_val.begin(), m.r_val.end(), [](ThreeVal v) { return v == ThreeVal::FT; })) {
        throw ContractError("a decided R cannot take the value (f,t)");
    }
}

using Env = std::vector<std::pair<std::string, std::size_t>>;

std::size_t resolve(const Term& t, const Domain& d, const Env& env) {
    if (t.is_var()) {
        for (auto it = env.rbegin(); it != env.rend(); ++it) {
            if (it->first == t.name) return it->second;
        }
        throw ContractError("variable '" + t.name + "' is unbound");
    }
    if (auto i = d.index_of(t.name)) return *i;
    throw ContractError("constant '" + t.name + "' is not a domain element");
}

bool kripke(World w, const PredFormula& f, const PredInterp& m, Env& env) {
    const auto& d = m.domain;
    switch (f.kind()) {
        case K::In: return holds_at(m.in(resolve(f.terms()[0], d, env)), w);
        case K::R: return holds_at(m.r(resolve(f.terms()[0], d, env), resolve(f.terms()[1], d, env)), w);
        case K::Eq: return resolve(f.terms()[0], d, env) == resolve(f.terms()[1], d, env);
        case K::NConst: return w == World::s;
        case K::Top: return true;
        case K::Bot: return false;
        case K::And: return kripke(w, f.lhs(), m, env) && kripke(w, f.rhs(), m, env);
        case K::Or: return kripke(w, f.lhs(), m, env) || kripke(w, f.rhs(), m, env);
        case K::Neg:
            for (World u : kWorlds) {
                if (u >= w && kripke(u, f.lhs(), m, env)) return false;
            }
            return true;
        case K::Imp:
            for (World u : kWorlds) {
                if (u >= w && kripke(u, f.lhs(), m, env) && !kripke(u, f.rhs(), m, env)) return false;
            }
            return true;
        case K::Forall:
            for (World u : kWorlds) {
                if (u < w) continue;
                for (std::size_t e = 0; e < d.size(); ++e) {
                    env.emplace_back(f.var(), e);
                    bool ok = kripke(u, f.body(), m, env);
                    env.pop_back();
                    if (!ok) return false;
                }
            }
            return true;
        case K::Exists:
            for (std::size_t e = 0; e < d.size(); ++e) {
                env.emplace_back(f.var(), e);
                bool ok = kripke(w, f.body(), m, env);
                env.pop_back();
                if (ok) return true;
            }
            return false;
    }
    return false;
}

}  // namespace

bool eval_pred(World w, const PredFormula& f, const PredInterp& m, const Valuation& v) {
    check_interp(m);
    Env env;
    for (const auto& [var, element] : v) {
        auto i = m.domain.index_of(element);
        if (!i) throw ContractError("valuation maps '" + var + "' outside the domain");
        env.emplace_back(var, *i);
    }
    return kripke(w, f, m, env);
}

ThreeVal pred_value(const PredFormula& f, const PredInterp& m) {
    if (!is_closed(f)) throw ContractError("pred_value needs a closed formula");
    return from_worlds(eval_pred(World::t, f, m), eval_pred(World::s, f, m));
}

namespace detail {

namespace {

void ground(const PredFormula& f, const Domain& d, Env& env, Program& out) {
    const auto n = static_cast<std::uint32_t>(d.size());
    switch (f.kind()) {
        case K::In: out.atom(static_cast<std::uint32_t>(resolve(f.terms()[0], d, env))); return;
        case K::R: {
            auto i = static_cast<std::uint32_t>(resolve(f.terms()[0], d, env));
            auto j = static_cast<std::uint32_t>(resolve(f.terms()[1], d, env));
            out.atom(n + i * n + j);
            return;
        }
        case K::Eq:
            out.constant(resolve(f.terms()[0], d, env) == resolve(f.terms()[1], d, env) ? ThreeVal::TT : ThreeVal::FF);
            return;
        case K::NConst: out.constant(ThreeVal::FT); return;
        case K::Top: out.constant(ThreeVal::TT); return;
        case K::Bot: out.constant(ThreeVal::FF); return;
        case K::Neg:
            ground(f.lhs(), d, env, out);
            out.op(Op::Neg);
            return;
        case K::And:
        case K::Or:
        case K::Imp:
            ground(f.lhs(), d, env, out);
            ground(f.rhs(), d, env, out);
            out.op(f.kind() == K::And ? Op::And : f.kind() == K::Or ? Op::Or : Op::Imp);
            return;
        case K::Forall:
        case K::Exists:
            for (std::size_t e = 0; e < d.size(); ++e) {
                env.emplace_back(f.var(), e);
                ground(f.body(), d, env, out);
                env.pop_back();
                if (e > 0) out.op(f.kind() == K::Forall ? Op::And : Op::Or);
            }
            return;
    }
}

}  // namespace

void compile_pred(const PredFormula& f, const Domain& d, Program& out) {
    Env env;
    ground(f, d, env, out);
}

}  // namespace detail

namespace {

std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t limit) {
    std::size_t acc = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (acc > limit / base) return limit + 1;
        acc *= base;
    }
    return acc;
}

}  // namespace

std::vector<PredInterp> enumerate_interps(const Domain& d, std::span<const PredFormula> theory, const InterpOptions& opts) {
    const std::size_t n = d.size();
    const std::size_t atoms = n + n * n;

    std::vector<detail::Program> r_only;
    std::vector<detail::Program> with_in;
    for (const auto& f : theory) {
        if (!is_closed(f)) throw ContractError("theory members must be closed formulas");
        detail::Program p;
        detail::compile_pred(f, d, p);
        (mentions_in(f) ? with_in : r_only).push_back(std::move(p));
    }

    auto pair_index = [&](const std::pair<std::string, std::string>& pr) {
        auto i = d.index_of(pr.first);
        auto j = d.index_of(pr.second);
        if (!i || !j) throw ContractError("R pair (" + pr.first + "," + pr.second + ") leaves the domain");
        return *i * n + *j;
    };

    std::vector<ThreeVal> vals(atoms, ThreeVal::FF);
    std::vector<std::size_t> free_pairs;
    bool decided = opts.r_decided;
    if (opts.fixed_r) {
        decided = true;
        for (const auto& pr : *opts.fixed_r) vals[n + pair_index(pr)] = ThreeVal::TT;
    } else if (opts.r_support) {
        std::set<std::size_t> support;
        for (const auto& pr : *opts.r_support) support.insert(pair_index(pr));
        free_pairs.assign(support.begin(), support.end());
    } else {
        for (std::size_t k = 0; k < n * n; ++k) free_pairs.push_back(k);
    }

    const std::vector<ThreeVal> r_domain =
        decided ? std::vector<ThreeVal>{ThreeVal::FF, ThreeVal::TT} : std::vector<ThreeVal>{kThreeVals.begin(), kThreeVals.end()};
    std::size_t r_count = checked_pow(r_domain.size(), free_pairs.size(), opts.max_candidates);
    std::size_t in_count = checked_pow(3, n, opts.max_candidates);
    if (r_count > opts.max_candidates || in_count > opts.max_candidates / r_count) {
        throw SearchSpaceError("interpretation search over " + std::to_string(n) + " elements and " +
                               std::to_string(free_pairs.size()) + " free R atoms exceeds " +
                               std::to_string(opts.max_candidates) + " candidates");
    }

    auto all_tt = [&](const std::vector<detail::Program>& ps) {
        return std::all_of(ps.begin(), ps.end(), [&](const detail::Program& p) { return p.run(vals.data()) == ThreeVal::TT; });
    };

    std::vector<PredInterp> out;
    std::vector<std::size_t> r_pos(free_pairs.size(), 0);
    for (std::size_t k : free_pairs) vals[n + k] = r_domain[0];
    while (true) {
        if (all_tt(r_only)) {
            for (std::size_t i = 0; i < n; ++i) vals[i] = ThreeVal::FF;
            while (true) {
                if (all_tt(with_in)) {
                    PredInterp m{d, {vals.begin(), vals.begin() + static_cast<std::ptrdiff_t>(n)},
                                 {vals.begin() + static_cast<std::ptrdiff_t>(n), vals.end()}, decided};
                    out.push_back(std::move(m));
                }
                std::size_t i = n;
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
                if (wrapped) break;
            }
        }
        std::size_t p = free_pairs.size();
        bool wrapped = true;
        while (p > 0) {
            --p;
            if (r_pos[p] + 1 < r_domain.size()) {
                vals[n + free_pairs[p]] = r_domain[++r_pos[p]];
                wrapped = false;
                break;
            }
            r_pos[p] = 0;
            vals[n + free_pairs[p]] = r_domain[0];
        }
        if (wrapped) return out;
    }
}

PredFormula build_meta(MetaKind kind, const std::vector<std::string>& args) {
    const std::size_t want = kind == MetaKind::J ? 2 : 1;
    if (args.size() != want) {
        throw ContractError("meta builder expects " + std::to_string(want) + " constant(s), got " +
                            std::to_string(args.size()));
    }
    const Term x = Term::var("X");
    const Term a = Term::constant(args[0]);
    switch (kind) {
        case MetaKind::W: return PredFormula::forall("X", PredFormula::imp(PredFormula::neq(x, a), PredFormula::r(a, x)));
        case MetaKind::WAttacked:
            return PredFormula::forall("X", PredFormula::imp(PredFormula::neq(x, a), PredFormula::r(x, a)));
        case MetaKind::J:
            return PredFormula::forall("X", PredFormula::iff(PredFormula::r(a, x), PredFormula::r(Term::constant(args[1]), x)));
        case MetaKind::JSelf: return PredFormula::forall("X", PredFormula::iff(PredFormula::r(a, x), PredFormula::r(x, x)));
    }
    throw ContractError("unknown meta builder");
}

}  // namespace g3af
