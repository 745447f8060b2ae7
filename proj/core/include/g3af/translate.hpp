#pragma once

// Frameworks as G3 theories, and checks that the translations agree with
// the labelling semantics.

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "g3af/framework.hpp"
#include "g3af/pred.hpp"
#include "g3af/prop.hpp"

namespace g3af {

enum class TheoryKind : std::uint8_t { DeltaProp, Theta0, Theta1, Instantiated, DeltaPred, OA, Star };

std::string_view to_string(TheoryKind kind) noexcept;

/// Named formulas of one kind, in insertion order.
template <class F>
class Theory {
public:
    explicit Theory(TheoryKind kind) : kind_(kind) {}

    TheoryKind kind() const noexcept { return kind_; }

    /// Throws ContractError on a repeated name.
    void add(std::string name, F formula);

    const std::vector<std::pair<std::string, F>>& entries() const noexcept { return entries_; }
    std::vector<F> formulas() const;
    const F* find(std::string_view name) const;
    std::size_t size() const noexcept { return entries_.size(); }

private:
    TheoryKind kind_;
    std::vector<std::pair<std::string, F>> entries_;
};

using PropTheory = Theory<PropFormula>;
using PredTheory = Theory<PredFormula>;

/// One "name: formula" line per entry.
std::string to_text(const PropTheory& theory);
std::string to_text(const PredTheory& theory);

/// Clauses a1[x], a2[x], b1[x], b2[x] for every argument x:
///   a1: x -> n | /\ ~y      a2: /\ ~y -> n | x
///   b1: ~x -> n | \/ y      b2: \/ y -> ~x | n
/// with y ranging over the attackers of x.
PropTheory delta_prop(const Framework& f);

/// in -> TT, out -> FF, und -> FT, keyed by argument name.
PropAssignment labelling_to_assignment(const Framework& f, const Labelling& lab);
/// Throws ContractError unless h assigns every argument.
Labelling assignment_to_labelling(const Framework& f, const PropAssignment& h);

struct CorrespondenceReport {
    std::string framework;
    std::size_t model_count = 0;
    std::size_t labelling_count = 0;
    std::vector<Labelling> matched;
    std::vector<Labelling> only_models;
    std::vector<Labelling> only_labellings;

    bool ok() const noexcept { return only_models.empty() && only_labellings.empty(); }
};

/// Compares two labelling sets, given their raw sizes before deduplication.
CorrespondenceReport compare_labellings(std::string framework, std::vector<Labelling> from_models,
                                        std::vector<Labelling> labellings);

/// Models of delta_prop(f), read as labellings, against enumerate_complete(f).
CorrespondenceReport verify_thm2(const Framework& f);

/// /\x (x | ~x)
PropFormula defined_n(const Framework& f);

struct ThetaTheories {
    PropTheory theta0{TheoryKind::Theta0};  ///< x <-> /\ ~y per argument
    PropTheory theta1{TheoryKind::Theta1};  ///< delta_prop with n := defined_n
};

ThetaTheories theta(const Framework& f);

struct ThetaReport {
    CorrespondenceReport stable;      ///< two-valued theta0 models vs stable labellings
    CorrespondenceReport non_stable;  ///< theta1 models with defined n at FT vs the rest
    CorrespondenceReport combined;    ///< union of both routes vs all complete labellings

    bool ok() const noexcept { return stable.ok() && non_stable.ok() && combined.ok(); }
};

ThetaReport verify_theta(const Framework& f);

/// delta_prop(f) with each mapped argument replaced by its formula. Throws
/// ContractError when a formula for x mentions an argument other than x.
PropTheory instantiate(const Framework& f, const std::map<ArgumentId, PropFormula>& subst);

/// Labellings read off the models of instantiate(f, subst): each argument x
/// gets the profile of subst(x) (or of x itself) under the model. Sorted, unique.
std::vector<Labelling> instantiation_patterns(const Framework& f, const std::map<ArgumentId, PropFormula>& subst);

/// A1, A2, B1, B2 over In and R, plus DEC = forall X Y (R(X,Y) | ~R(X,Y)).
PredTheory delta_pred(const Framework& f);

/// Labelling from the In values of a predicate interpretation whose domain
/// is the framework's argument set.
Labelling interp_to_labelling(const PredInterp& m);

/// delta_pred(f) models with R pinned to f's attacks against enumerate_complete(f).
CorrespondenceReport verify_thm42(const Framework& f);

/// DEC & exists X1..Xn (distinct & forall Y (Y = X1 | ... | Y = Xn) & P),
/// where P is the conjunction of R(Xi,Xj) over the attacks (i, j).
PredFormula o_a(const Framework& f);

struct OAReport {
    std::size_t relations_checked = 0;  ///< R values with at least one model
    std::size_t model_count = 0;
    /// Models whose R contains no renamed copy of f's attacks.
    std::size_t not_covering = 0;
    /// Models whose labelling is not complete for its own R.
    std::size_t not_complete = 0;
    /// Models whose R is exactly a renamed copy of f's attacks, mapped back.
    CorrespondenceReport exact;

    bool ok() const noexcept { return not_covering == 0 && not_complete == 0 && exact.ok(); }
};

/// Models of delta_pred(f) + o_a(f) on f's arguments with R free but decided.
OAReport verify_oa(const Framework& f);

}  // namespace g3af
