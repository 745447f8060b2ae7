#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>

#include "compiled.hpp"
#include "g3af/pred.hpp"
#include "g3af/prop.hpp"

namespace g3af::detail {

/// Throws ContractError on an atom missing from `index`.
void compile_prop(const PropFormula& f, const std::unordered_map<std::string, std::uint32_t>& index, Program& out);

/// Grounds a closed formula over a domain of n elements: In(i) is atom i and
/// R(i, j) is atom n + i * n + j. Quantifiers become finite conjunctions and
/// disjunctions, which is exact on a constant domain.
void compile_pred(const PredFormula& f, const Domain& d, Program& out);

}  // namespace g3af::detail
