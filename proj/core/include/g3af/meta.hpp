#pragma once

// Networks whose units are nodes and closed formulas over In and R, with
// attacks between any two units, read through the starred clauses.

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "g3af/pred.hpp"
#include "g3af/translate.hpp"

namespace g3af {

struct Unit {
    enum class Kind : std::uint8_t { Node, Wff };
    Kind kind;
    std::string name;
    /// In(name) for nodes; the formula for wffs.
    PredFormula formula;
};

/// Canonical unit name of the R atom between two nodes: "r(a,b)".
std::string r_unit_name(const std::string& from, const std::string& to);

class HigherNetwork {
public:
    /// Throws ContractError on an empty or invalid node list.
    explicit HigherNetwork(std::vector<std::string> nodes);

    /// Throws ContractError on a name clash, an open formula or a constant
    /// that is not a node.
    void add_wff(std::string name, PredFormula formula);
    /// Registers the R-atom unit between two nodes (idempotent) and returns its name.
    std::string add_r_atom(const std::string& from, const std::string& to);
    /// Both ends are unit names; "r(x,y)" names are registered on the fly.
    /// Throws ContractError on unknown units or a repeated attack.
    void add_attack(const std::string& from, const std::string& to);

    const Domain& domain() const noexcept { return domain_; }
    /// Nodes in domain order, then wffs in registration order.
    const std::vector<Unit>& units() const noexcept { return units_; }
    std::size_t node_count() const noexcept { return domain_.size(); }
    std::optional<std::size_t> unit_index(const std::string& name) const;
    /// Declared attacks as unit index pairs, in declaration order.
    const std::vector<std::pair<std::size_t, std::size_t>>& attacks() const noexcept { return attacks_; }

private:
    Domain domain_;
    std::vector<Unit> units_;
    std::vector<std::pair<std::size_t, std::size_t>> attacks_;
};

/// node->node: (In(x) & R(x,y)) -> ~In(y); otherwise attacker -> ~target,
/// with In(x) standing for a node x.
PredFormula attack_formula(const HigherNetwork& hn, std::size_t attacker, std::size_t target);

enum class StarScope : std::uint8_t {
    /// Every node y attacks every node x through In(y) & R(y,x).
    AllNodes,
    /// Only declared attacks count; R atoms the theory never mentions are FF.
    DeclaredOnly,
};

/// Clauses a1[u], a2[u], b1[u], b2[u] for every unit u:
///   a1: u in -> n | /\ Y out       a2: /\ Y out -> n | u in
///   b1: u out -> n | \/ Y in       b2: \/ Y in -> n | u out
/// A node y attacking node x is in as In(y) & R(y,x) and out as
/// ~In(y) | ~R(y,x); a node attacking a wff is In(y) / ~In(y); a wff is
/// itself / its negation.
PredTheory star_theory(const HigherNetwork& hn, StarScope scope = StarScope::AllNodes);

struct GeneralizedModel {
    PredInterp interp;
    /// Wff unit name and its profile under interp, in unit order.
    std::vector<std::pair<std::string, ThreeVal>> statuses;
};

struct SolveOptions {
    StarScope scope = StarScope::AllNodes;
    /// Pins R to exactly these node pairs, decided.
    std::optional<std::set<std::pair<std::string, std::string>>> pin_r;
    /// Nodes + free R atoms + wffs.
    std::size_t max_unknowns = 14;
};

/// Number of three-valued unknowns solve_higher would enumerate.
std::size_t count_unknowns(const HigherNetwork& hn, const SolveOptions& opts = {});

/// Models of star_theory with R free (three-valued) unless pinned. Throws
/// SearchSpaceError when count_unknowns exceeds opts.max_unknowns.
std::vector<GeneralizedModel> solve_higher(const HigherNetwork& hn, const SolveOptions& opts = {});

}  // namespace g3af
