#pragma once

// Axiomatic frames (arguments plus a classical constraint on R) and the
// lowering of disjunctive, conjunctive and ADF networks.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "g3af/framework.hpp"
#include "g3af/pred.hpp"

namespace g3af {

using Relation = std::set<std::pair<std::string, std::string>>;

/// Single-world evaluation over domain d with R = r and = as identity.
/// Throws ContractError if f mentions In or n, or is open.
bool classical_eval(const PredFormula& f, const Domain& d, const Relation& r);

struct AxiomaticFrame {
    std::vector<ArgumentId> s0;
    PredFormula psi;

    /// Throws ContractError if psi is open, mentions In or n, or names a
    /// constant outside s0.
    AxiomaticFrame(std::vector<ArgumentId> s0, PredFormula psi);
};

struct AafMember {
    Relation r;
    Framework framework;
    std::vector<Labelling> labellings;
};

/// Every r over s0 satisfying psi, with the complete labellings of (s0, r).
/// Relations are ordered as sorted pair lists. Throws SearchSpaceError when
/// |s0|^2 exceeds max_pairs.
std::vector<AafMember> aaf_extensions(const AxiomaticFrame& af, std::size_t max_pairs = 20);

struct DisjunctiveNet {
    std::vector<ArgumentId> s;
    /// z attacks at least one member of Y.
    std::vector<std::pair<ArgumentId, std::set<ArgumentId>>> dattacks;
};

/// psi = /\ over (z, Y) of \/ y in Y R(z,y), conjoined with
/// forall X Y (R(X,Y) -> \/ (X = z & Y = y)) over the pairs some dattack can
/// realise. Throws ContractError on undeclared names or an empty Y.
AxiomaticFrame encode_disjunctive(const DisjunctiveNet& dn);

struct ConjunctiveNet {
    std::vector<ArgumentId> s0;
    /// All of Y together attack z.
    std::vector<std::pair<std::set<ArgumentId>, ArgumentId>> cattacks;
};

struct Encoding {
    Framework framework;
    std::set<ArgumentId> projection;
};

/// Restricts a labelling of enc.framework to the projection, in the order of
/// restrict(enc.framework, enc.projection).
Labelling project(const Encoding& enc, const Labelling& lab);

/// Per cattack (Y, z): y -> alpha(y) for y in Y, alpha(y) -> beta, beta -> z.
/// Throws ContractError on undeclared names, an empty Y or a repeated cattack.
Encoding encode_conjunctive(const ConjunctiveNet& cn);

enum class Lit : std::uint8_t { Absent, Pos, Neg };

struct AdfCondition {
    std::vector<ArgumentId> parents;
    /// Disjunctive normal form; each disjunct has one literal per parent.
    std::vector<std::vector<Lit>> disjuncts;
};

struct AdfNet {
    std::vector<ArgumentId> s;
    /// Arguments without an entry have the condition true.
    std::map<ArgumentId, AdfCondition> conditions;
};

/// Throws ContractError on undeclared names, mis-sized or duplicate disjuncts.
void check_adf(const AdfNet& adf);

/// beta(x) -> x; each disjunct is a joint attack on beta(x) by its positive
/// parents and by one delta per negative parent y, with y -> delta. Joint
/// attacks go through gamma and alpha points as in encode_conjunctive; a
/// single attacker attacks beta(x) directly. No disjuncts leave beta(x)
/// unattacked; a disjunct without literals drops beta(x).
Encoding encode_adf(const AdfNet& adf);

/// Value of the acceptance condition of x under a two-valued assignment
/// aligned with sorted adf.s.
bool adf_condition_holds(const AdfNet& adf, const ArgumentId& x, const std::vector<bool>& assignment);

/// Assignments over sorted adf.s with x <-> F(x) for every x, in binary
/// counting order (false before true, last argument fastest).
std::vector<std::vector<bool>> adf_two_valued_models(const AdfNet& adf);

}  // namespace g3af
