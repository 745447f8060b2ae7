#pragma once

// Concrete syntax for formulas.
//
//   ~ f    f & g    f | g    f -> g    f <-> g    #n    true    false
//
// Binding strength decreases left to right; & and | associate to the left,
// -> and <-> to the right. <-> is read as (f -> g) & (g -> f).
//
// Predicate formulas add In(t), R(t,t), t = t, t != t and the binders
// "forall X Y (body)" / "exists X (body)", which bind like ~. Terms starting
// with an uppercase letter are variables, all other tokens are constants.

#include <string>
#include <string_view>

#include "g3af/pred.hpp"
#include "g3af/prop.hpp"

namespace g3af {

/// Throws ParseError with a line:column position.
PropFormula parse_prop(std::string_view text);
PredFormula parse_pred(std::string_view text);

/// Minimal-parenthesis rendering; parse_prop(to_text(f)) == f.
std::string to_text(const PropFormula& f);
std::string to_text(const PredFormula& f);

}  // namespace g3af
