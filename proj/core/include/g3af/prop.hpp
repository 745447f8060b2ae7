#pragma once

// Propositional G3 over the two-world frame t < s.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "g3af/three_val.hpp"

namespace g3af {

class PropFormula {
public:
    enum class Kind : std::uint8_t { Atom, NConst, Top, Bot, Neg, And, Or, Imp };

    /// Throws ContractError unless `name` is an argument-style token.
    static PropFormula atom(std::string name);
    static PropFormula n();
    static PropFormula top();
    static PropFormula bot();
    static PropFormula neg(PropFormula f);
    static PropFormula conj(PropFormula a, PropFormula b);
    static PropFormula disj(PropFormula a, PropFormula b);
    static PropFormula imp(PropFormula a, PropFormula b);
    /// (a -> b) & (b -> a)
    static PropFormula iff(PropFormula a, PropFormula b);
    /// Left fold; the empty conjunction is Top.
    static PropFormula conj_all(std::vector<PropFormula> fs);
    /// Left fold; the empty disjunction is Bot.
    static PropFormula disj_all(std::vector<PropFormula> fs);

    Kind kind() const noexcept;
    const std::string& name() const;
    /// Operand of Neg, left operand of a binary connective.
    const PropFormula& lhs() const;
    const PropFormula& rhs() const;

    friend bool operator==(const PropFormula& a, const PropFormula& b);

private:
    struct Node;
    explicit PropFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

std::set<std::string> atoms(const PropFormula& f);
bool contains_nconst(const PropFormula& f);

/// Replaces atoms by formulas, simultaneously.
PropFormula substitute(const PropFormula& f, const std::map<std::string, PropFormula>& subst);

/// Atom name to truth profile. NConst is not an atom and is always FT.
using PropAssignment = std::map<std::string, ThreeVal>;

/// Kripke satisfaction at world w. Throws ContractError on an unassigned atom.
bool eval_world(World w, const PropFormula& f, const PropAssignment& h);

/// (eval_world at t, eval_world at s).
ThreeVal value(const PropFormula& f, const PropAssignment& h);

/// Every assignment over `atoms` (each value FF < FT < TT, last atom fastest)
/// satisfying every member of `theory` at t. Throws ContractError if the
/// theory mentions an atom outside `atoms` or `atoms` repeats a name.
std::vector<PropAssignment> enumerate_models(std::span<const PropFormula> theory,
                                             const std::vector<std::string>& atoms);

struct Validity {
    bool valid = false;
    std::optional<PropAssignment> countermodel;
};

/// Decides validity over the two-world frame. The countermodel is the first
/// falsifying assignment in enumeration order over the sorted atoms.
Validity is_valid(const PropFormula& f);

}  // namespace g3af
