#pragma once

// Predicate G3 over a finite constant domain with In, R and identity.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "g3af/three_val.hpp"

namespace g3af {

/// Variables start with an uppercase letter; constants with anything else.
struct Term {
    enum class Kind : std::uint8_t { Var, Const };
    Kind kind;
    std::string name;

    static Term var(std::string name);
    static Term constant(std::string name);
    bool is_var() const noexcept { return kind == Kind::Var; }

    friend auto operator<=>(const Term&, const Term&) = default;
    friend bool operator==(const Term&, const Term&) = default;
};

class PredFormula {
public:
    enum class Kind : std::uint8_t { In, R, Eq, NConst, Top, Bot, Neg, And, Or, Imp, Forall, Exists };

    static PredFormula in(Term t);
    static PredFormula r(Term a, Term b);
    static PredFormula eq(Term a, Term b);
    /// ~(a = b)
    static PredFormula neq(Term a, Term b);
    static PredFormula n();
    static PredFormula top();
    static PredFormula bot();
    static PredFormula neg(PredFormula f);
    static PredFormula conj(PredFormula a, PredFormula b);
    static PredFormula disj(PredFormula a, PredFormula b);
    static PredFormula imp(PredFormula a, PredFormula b);
    static PredFormula iff(PredFormula a, PredFormula b);
    static PredFormula conj_all(std::vector<PredFormula> fs);
    static PredFormula disj_all(std::vector<PredFormula> fs);
    /// Throws ContractError unless `var` is a variable name.
    static PredFormula forall(std::string var, PredFormula body);
    static PredFormula exists(std::string var, PredFormula body);

    Kind kind() const noexcept;
    /// Arguments of In (one) or R / Eq (two).
    const std::vector<Term>& terms() const;
    const std::string& var() const;
    const PredFormula& lhs() const;
    const PredFormula& rhs() const;
    /// Body of a quantifier (same as lhs()).
    const PredFormula& body() const { return lhs(); }

    friend bool operator==(const PredFormula& a, const PredFormula& b);

private:
    struct Node;
    explicit PredFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

std::set<std::string> free_vars(const PredFormula& f);
bool is_closed(const PredFormula& f);
std::set<std::string> constants(const PredFormula& f);
bool mentions_in(const PredFormula& f);
bool mentions_nconst(const PredFormula& f);

/// Replaces free occurrences of variable `var` by `t`.
PredFormula substitute_var(const PredFormula& f, const std::string& var, const Term& t);

/// Finite ordered set of element names, sorted.
class Domain {
public:
    /// Throws ContractError on an empty list, duplicates or names that are not
    /// valid constants.
    explicit Domain(std::vector<std::string> elements);

    std::size_t size() const noexcept { return elements_.size(); }
    std::span<const std::string> elements() const noexcept { return elements_; }
    const std::string& element(std::size_t i) const { return elements_.at(i); }
    std::optional<std::size_t> index_of(const std::string& name) const;

    friend bool operator==(const Domain&, const Domain&) = default;

private:
    std::vector<std::string> elements_;
};

/// Interpretation on a constant domain. r_val is row-major: r(i, j) = r_val[i * n + j].
struct PredInterp {
    Domain domain;
    std::vector<ThreeVal> in_val;
    std::vector<ThreeVal> r_val;
    bool r_decided = true;

    ThreeVal in(std::size_t i) const { return in_val.at(i); }
    ThreeVal r(std::size_t i, std::size_t j) const { return r_val.at(i * domain.size() + j); }
};

/// Variable name to element name.
using Valuation = std::map<std::string, std::string>;

/// Kripke satisfaction: the universal quantifier and implication range over
/// worlds >= w, the existential is read at w. Throws ContractError on an
/// unbound variable, a constant outside the domain or an inconsistent interp.
bool eval_pred(World w, const PredFormula& f, const PredInterp& m, const Valuation& v = {});

/// Throws ContractError if `f` is open.
ThreeVal pred_value(const PredFormula& f, const PredInterp& m);

struct InterpOptions {
    /// R values range over {FF, TT} instead of all three profiles.
    bool r_decided = true;
    /// Pins R to exactly these pairs (decided). Overrides r_support.
    std::optional<std::set<std::pair<std::string, std::string>>> fixed_r;
    /// Only these pairs vary; all other R atoms are FF.
    std::optional<std::set<std::pair<std::string, std::string>>> r_support;
    /// Refuses enumerations with more candidates than this.
    std::size_t max_candidates = std::size_t{1} << 28;
};

/// All interpretations satisfying every theory member at t. R is the outer
/// loop, In the inner one; both count FF < FT < TT with the last index fastest.
/// Throws SearchSpaceError beyond opts.max_candidates.
std::vector<PredInterp> enumerate_interps(const Domain& d, std::span<const PredFormula> theory,
                                          const InterpOptions& opts = {});

enum class MetaKind : std::uint8_t {
    W,          ///< forall X (X != a -> R(a,X))
    WAttacked,  ///< forall X (X != a -> R(X,a))
    J,          ///< forall X (R(a,X) <-> R(b,X))
    JSelf,      ///< forall X (R(a,X) <-> R(X,X))
};

/// Throws ContractError on the wrong number of constants.
PredFormula build_meta(MetaKind kind, const std::vector<std::string>& args);

}  // namespace g3af
