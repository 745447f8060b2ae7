#include "g3af/aaf.hpp"

#include <algorithm>

#include "g3af/error.hpp"

namespace g3af {

namespace {

using K = PredFormula::Kind;
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

bool classical(const PredFormula& f, const Domain& d, const std::vector<char>& r, Env& env) {
    const auto n = d.size();
    switch (f.kind()) {
        case K::In: throw ContractError("classical evaluation does not interpret In");
        case K::NConst: throw ContractError("classical evaluation does not interpret #n");
        case K::R: return r[resolve(f.terms()[0], d, env) * n + resolve(f.terms()[1], d, env)] != 0;
        case K::Eq: return resolve(f.terms()[0], d, env) == resolve(f.terms()[1], d, env);
        case K::Top: return true;
        case K::Bot: return false;
        case K::Neg: return !classical(f.lhs(), d, r, env);
        case K::And: return classical(f.lhs(), d, r, env) && classical(f.rhs(), d, r, env);
        case K::Or: return classical(f.lhs(), d, r, env) || classical(f.rhs(), d, r, env);
        case K::Imp: return !classical(f.lhs(), d, r, env) || classical(f.rhs(), d, r, env);
        case K::Forall:
        case K::Exists: {
            const bool universal = f.kind() == K::Forall;
            for (std::size_t e = 0; e < n; ++e) {
                env.emplace_back(f.var(), e);
                const bool v = classical(f.body(), d, r, env);
                env.pop_back();
                if (v != universal) return v;
            }
            return universal;
        }
    }
    return false;
}

void check_classical(const PredFormula& f) {
    if (mentions_in(f)) throw ContractError("classical constraint mentions In");
    if (mentions_nconst(f)) throw ContractError("classical constraint mentions #n");
    if (!is_closed(f)) throw ContractError("classical constraint is not closed");
}

std::vector<std::string> names_of(const std::vector<ArgumentId>& ids) {
    std::vector<std::string> out;
    for (const auto& a : ids) out.push_back(a.str());
    return out;
}

}  // namespace

bool classical_eval(const PredFormula& f, const Domain& d, const Relation& r) {
    check_classical(f);
    std::vector<char> bits(d.size() * d.size(), 0);
    for (const auto& [a, b] : r) {
        auto i = d.index_of(a);
        auto j = d.index_of(b);
        if (!i || !j) throw ContractError("relation pair (" + a + "," + b + ") leaves the domain");
        bits[*i * d.size() + *j] = 1;
    }
    Env env;
    return classical(f, d, bits, env);
}

AxiomaticFrame::AxiomaticFrame(std::vector<ArgumentId> s0_, PredFormula psi_) : s0(std::move(s0_)), psi(std::move(psi_)) {
    std::sort(s0.begin(), s0.end());
    const Domain d(names_of(s0));
    check_classical(psi);
    for (const auto& c : constants(psi)) {
        if (!d.index_of(c)) throw ContractError("constraint names '" + c + "', which is not an argument");
    }
}

std::vector<AafMember> aaf_extensions(const AxiomaticFrame& af, std::size_t max_pairs) {
    const Domain d(names_of(af.s0));
    const std::size_t n = d.size();
    const std::size_t k = n * n;
    if (k > max_pairs || k >= 63) {
        throw SearchSpaceError("relation search over " + std::to_string(n) + " arguments needs 2^" + std::to_string(k) +
                               " candidates; the bound is 2^" + std::to_string(max_pairs));
    }
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> accepted;
    std::vector<char> bits(k, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        for (std::size_t b = 0; b < k; ++b) bits[b] = static_cast<char>((mask >> b) & 1U);
        Env env;
        if (!classical(af.psi, d, bits, env)) continue;
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t b = 0; b < k; ++b) {
            if (bits[b]) pairs.emplace_back(b / n, b % n);
        }
        accepted.push_back(std::move(pairs));
    }
    std::sort(accepted.begin(), accepted.end());

    std::vector<AafMember> out;
    for (const auto& pairs : accepted) {
        Relation r;
        std::vector<Attack> atts;
        for (const auto& [i, j] : pairs) {
            r.emplace(d.element(i), d.element(j));
            atts.emplace_back(ArgumentId(d.element(i)), ArgumentId(d.element(j)));
        }
        Framework f(af.s0, atts);
        auto labs = enumerate_complete(f);
        out.push_back({std::move(r), std::move(f), std::move(labs)});
    }
    return out;
}

namespace {

void require_declared(const std::set<ArgumentId>& declared, const ArgumentId& a, const char* what) {
    if (!declared.contains(a)) throw ContractError(std::string(what) + " '" + a.str() + "' is not a declared argument");
}

}  // namespace

AxiomaticFrame encode_disjunctive(const DisjunctiveNet& dn) {
    const std::set<ArgumentId> declared(dn.s.begin(), dn.s.end());
    std::vector<PredFormula> groups;
    std::set<std::pair<ArgumentId, ArgumentId>> realisable;
    for (const auto& [z, ys] : dn.dattacks) {
        require_declared(declared, z, "disjunctive attacker");
        if (ys.empty()) throw ContractError("disjunctive attack by '" + z.str() + "' has no targets");
        std::vector<PredFormula> alts;
        for (const auto& y : ys) {
            require_declared(declared, y, "disjunctive target");
            alts.push_back(PredFormula::r(Term::constant(z.str()), Term::constant(y.str())));
            realisable.emplace(z, y);
        }
        groups.push_back(PredFormula::disj_all(std::move(alts)));
    }
    const auto x = Term::var("X");
    const auto y = Term::var("Y");
    std::vector<PredFormula> allowed;
    for (const auto& [a, b] : realisable) {
        allowed.push_back(PredFormula::conj(PredFormula::eq(x, Term::constant(a.str())),
                                            PredFormula::eq(y, Term::constant(b.str()))));
    }
    auto frame = PredFormula::forall(
        "X", PredFormula::forall("Y", PredFormula::imp(PredFormula::r(x, y), PredFormula::disj_all(std::move(allowed)))));
    return AxiomaticFrame(dn.s, PredFormula::conj(PredFormula::conj_all(std::move(groups)), std::move(frame)));
}

Labelling project(const Encoding& enc, const Labelling& lab) {
    if (lab.size() != enc.framework.size()) throw ContractError("labelling does not match the encoding");
    Labelling out;
    for (std::size_t i = 0; i < enc.framework.size(); ++i) {
        if (enc.projection.contains(enc.framework.argument(i))) out.labels.push_back(lab[i]);
    }
    return out;
}

namespace {

// Fresh, deterministic names that never clash with user arguments.
class AuxNames {
public:
    explicit AuxNames(const std::vector<ArgumentId>& user) : taken_(user.begin(), user.end()) {}

    ArgumentId make(std::string base) {
        while (taken_.contains(ArgumentId(base))) base += "_";
        ArgumentId id(base);
        taken_.insert(id);
        return id;
    }

private:
    std::set<ArgumentId> taken_;
};

std::string join(const std::set<ArgumentId>& ys) {
    std::string out;
    for (const auto& y : ys) out += (out.empty() ? "" : "_") + y.str();
    return out;
}

// y -> alpha(y) for each source, alpha(y) -> hub, hub -> target.
void lower_joint(const std::set<ArgumentId>& sources, const ArgumentId& target, const std::string& tag, AuxNames& names,
                 std::vector<ArgumentId>& args, std::vector<Attack>& atts, const std::string& hub_prefix) {
    const auto hub = names.make(hub_prefix + tag);
    args.push_back(hub);
    for (const auto& y : sources) {
        const auto alpha = names.make("_alpha_" + tag + "_" + y.str());
        args.push_back(alpha);
        atts.emplace_back(y, alpha);
        atts.emplace_back(alpha, hub);
    }
    atts.emplace_back(hub, target);
}

}  // namespace

Encoding encode_conjunctive(const ConjunctiveNet& cn) {
    const std::set<ArgumentId> declared(cn.s0.begin(), cn.s0.end());
    std::set<std::pair<std::set<ArgumentId>, ArgumentId>> seen;
    for (const auto& [ys, z] : cn.cattacks) {
        require_declared(declared, z, "conjunctive target");
        if (ys.empty()) throw ContractError("conjunctive attack on '" + z.str() + "' has no sources");
        for (const auto& y : ys) require_declared(declared, y, "conjunctive source");
        if (!seen.emplace(ys, z).second) throw ContractError("conjunctive attack on '" + z.str() + "' declared twice");
    }
    AuxNames names(cn.s0);
    std::vector<ArgumentId> args(cn.s0);
    std::vector<Attack> atts;
    for (const auto& [ys, z] : seen) {
        lower_joint(ys, z, join(ys) + "_" + z.str(), names, args, atts, "_beta_");
    }
    return {Framework(std::move(args), std::move(atts)), declared};
}

void check_adf(const AdfNet& adf) {
    const std::set<ArgumentId> declared(adf.s.begin(), adf.s.end());
    if (declared.size() != adf.s.size()) throw ContractError("ADF declares an argument twice");
    for (const auto& [x, cond] : adf.conditions) {
        require_declared(declared, x, "ADF argument");
        std::set<ArgumentId> parents;
        for (const auto& p : cond.parents) {
            require_declared(declared, p, "ADF parent");
            if (!parents.insert(p).second) throw ContractError("parent '" + p.str() + "' of '" + x.str() + "' listed twice");
        }
        std::set<std::vector<Lit>> seen;
        for (const auto& dj : cond.disjuncts) {
            if (dj.size() != cond.parents.size()) {
                throw ContractError("disjunct of '" + x.str() + "' does not have one literal per parent");
            }
            if (!seen.insert(dj).second) throw ContractError("duplicate disjunct in the condition of '" + x.str() + "'");
        }
    }
}

Encoding encode_adf(const AdfNet& adf) {
    check_adf(adf);
    AuxNames names(adf.s);
    std::vector<ArgumentId> args(adf.s);
    std::vector<Attack> atts;
    for (const auto& [x, cond] : adf.conditions) {
        const bool trivially_true = std::any_of(cond.disjuncts.begin(), cond.disjuncts.end(), [](const auto& dj) {
            return std::all_of(dj.begin(), dj.end(), [](Lit l) { return l == Lit::Absent; });
        });
        if (trivially_true) continue;
        const auto beta = names.make("_beta_" + x.str());
        args.push_back(beta);
        atts.emplace_back(beta, x);
        for (std::size_t k = 0; k < cond.disjuncts.size(); ++k) {
            const auto tag = x.str() + "_" + std::to_string(k);
            std::set<ArgumentId> sources;
            for (std::size_t p = 0; p < cond.parents.size(); ++p) {
                const auto& y = cond.parents[p];
                if (cond.disjuncts[k][p] == Lit::Pos) {
                    sources.insert(y);
                } else if (cond.disjuncts[k][p] == Lit::Neg) {
                    const auto delta = names.make("_delta_" + tag + "_" + y.str());
                    args.push_back(delta);
                    atts.emplace_back(y, delta);
                    sources.insert(delta);
                }
            }
            if (sources.size() == 1) {
                atts.emplace_back(*sources.begin(), beta);
            } else {
                lower_joint(sources, beta, tag, names, args, atts, "_gamma_");
            }
        }
    }
    const std::set<ArgumentId> base(adf.s.begin(), adf.s.end());
    return {Framework(std::move(args), std::move(atts)), base};
}

bool adf_condition_holds(const AdfNet& adf, const ArgumentId& x, const std::vector<bool>& assignment) {
    std::vector<ArgumentId> sorted(adf.s);
    std::sort(sorted.begin(), sorted.end());
    if (assignment.size() != sorted.size()) throw ContractError("assignment does not cover the ADF arguments");
    auto it = adf.conditions.find(x);
    if (it == adf.conditions.end()) return true;
    auto val = [&](const ArgumentId& y) {
        return assignment[static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), y) - sorted.begin())];
    };
    const auto& cond = it->second;
    return std::any_of(cond.disjuncts.begin(), cond.disjuncts.end(), [&](const std::vector<Lit>& dj) {
        for (std::size_t p = 0; p < cond.parents.size(); ++p) {
            if (dj[p] == Lit::Pos && !val(cond.parents[p])) return false;
            if (dj[p] == Lit::Neg && val(cond.parents[p])) return false;
        }
        return true;
    });
}

std::vector<std::vector<bool>> adf_two_valued_models(const AdfNet& adf) {
    check_adf(adf);
    std::vector<ArgumentId> sorted(adf.s);
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    if (n >= 31) throw SearchSpaceError("too many ADF arguments for brute force");
    std::vector<std::vector<bool>> out;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        std::vector<bool> a(n);
        for (std::size_t i = 0; i < n; ++i) a[i] = ((mask >> (n - 1 - i)) & 1U) != 0;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = a[i] == adf_condition_holds(adf, sorted[i], a);
        if (ok) out.push_back(std::move(a));
    }
    return out;
}

}  // namespace g3af
