#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "g3af/pred.hpp"
#include "g3af/prop.hpp"

namespace oracle {

/// Random formula over `atoms` with #n, true and false as extra leaves.
g3af::PropFormula random_prop(std::mt19937& gen, int depth, const std::vector<std::string>& atoms);

/// Random closed formula over In, R and = with constants from `domain` and
/// quantified variables X, Y.
g3af::PredFormula random_pred(std::mt19937& gen, int depth, const std::vector<std::string>& domain);

/// Truth-table value in {0 = FF, 1 = FT, 2 = TT}, computed recursively with
/// Goedel operations.
int godel_value(const g3af::PropFormula& f, const std::map<std::string, int>& h);

}  // namespace oracle
