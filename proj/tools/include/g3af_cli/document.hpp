#pragma once

// Fact files:
//
//   arg(a).  att(a,b).  att(a, r(c,d)).  wff(phi, "exists X (~R(X,X))").
//   inst(x, "p | ~p").  datt(z, [y1,y2]).  catt([y1,y2], z).
//   acc(x, "a & ~b | c").  psi "forall X (~R(X,X))".
//
// Facts end with '.', several may share a line, '#' starts a comment outside
// strings, and strings accept \" and \\ escapes.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "g3af/aaf.hpp"
#include "g3af/framework.hpp"
#include "g3af/meta.hpp"
#include "g3af/prop.hpp"

namespace g3af::cli {

struct Fact {
    enum class Kind : std::uint8_t { Arg, Att, Wff, Inst, Datt, Catt, Acc, Psi };
    Kind kind;
    /// Identifiers in source order; an r(x,y) unit is kept as "r(x,y)".
    std::vector<std::string> names;
    /// Target list of datt / source list of catt.
    std::vector<std::string> group;
    /// Formula text of wff, inst, acc and psi.
    std::string text;
    std::size_t line = 0;
    std::size_t column = 0;

    /// Positions are not part of a fact's identity.
    friend bool operator==(const Fact& a, const Fact& b) {
        return a.kind == b.kind && a.names == b.names && a.group == b.group && a.text == b.text;
    }
};

std::string_view to_string(Fact::Kind kind) noexcept;

enum class Species : std::uint8_t { Plain, Higher, Axiomatic, Disjunctive, Conjunctive, Adf };

std::string_view to_string(Species s) noexcept;

struct InputDocument {
    std::vector<Fact> facts;

    friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

/// Throws ParseError (line:column) on syntax errors, undeclared references
/// and documents that mix network species.
InputDocument parse_document(std::string_view text);

/// One fact per line; parse_document(serialize(d)) == d.
std::string serialize(const InputDocument& doc);

Species detect_species(const InputDocument& doc);

/// Builders; each throws ParseError naming the first fact that does not
/// belong to the requested species.
Framework to_framework(const InputDocument& doc);
std::map<ArgumentId, PropFormula> to_instantiation(const InputDocument& doc);
HigherNetwork to_higher(const InputDocument& doc);
AxiomaticFrame to_axiomatic(const InputDocument& doc);
DisjunctiveNet to_disjunctive(const InputDocument& doc);
ConjunctiveNet to_conjunctive(const InputDocument& doc);
AdfNet to_adf(const InputDocument& doc);

/// Reads a DNF such as "a & ~b | c", "true" or "false" into a condition over
/// the sorted atoms. Throws ContractError on anything but a DNF of literals.
AdfCondition parse_condition(std::string_view text);

}  // namespace g3af::cli
