#pragma once

// Abstract argumentation frameworks and their Caminada labellings.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace g3af {

/// Name of an argument: a nonempty token over [a-zA-Z0-9_].
class ArgumentId {
public:
    /// Throws ContractError if `name` is not a valid token.
    explicit ArgumentId(std::string name);

    static bool is_valid(std::string_view name) noexcept;

    const std::string& str() const noexcept { return name_; }

    friend auto operator<=>(const ArgumentId&, const ArgumentId&) = default;
    friend bool operator==(const ArgumentId&, const ArgumentId&) = default;

private:
    std::string name_;
};

using Attack = std::pair<ArgumentId, ArgumentId>;

/// A finite attack graph (S, R). Arguments are kept sorted by name and
/// addressed by their position in that order.
class Framework {
public:
    /// Throws ContractError on an empty argument set, duplicate arguments,
    /// undeclared attack endpoints or duplicate attack pairs.
    Framework(std::vector<ArgumentId> arguments, std::vector<Attack> attacks);

    std::size_t size() const noexcept { return arguments_.size(); }
    std::span<const ArgumentId> arguments() const noexcept { return arguments_; }
    const ArgumentId& argument(std::size_t i) const { return arguments_.at(i); }
    std::optional<std::size_t> index_of(const ArgumentId& id) const;
    std::size_t index_of_or_throw(const ArgumentId& id) const;

    /// Attack pairs as (attacker, target) indices, sorted.
    std::span<const std::pair<std::size_t, std::size_t>> attacks() const noexcept { return attacks_; }
    std::span<const std::size_t> attackers(std::size_t target) const { return attackers_.at(target); }
    bool attacks(std::size_t from, std::size_t to) const;

    std::vector<Attack> attack_pairs() const;

    /// Compact rendering such as "{a,b}:{a>b,b>a}".
    std::string describe() const;

    friend bool operator==(const Framework& a, const Framework& b) {
        return a.arguments_ == b.arguments_ && a.attacks_ == b.attacks_;
    }

private:
    std::vector<ArgumentId> arguments_;
    std::vector<std::pair<std::size_t, std::size_t>> attacks_;
    std::vector<std::vector<std::size_t>> attackers_;
};

/// Builds a framework from plain names: make_framework({"a","b"}, {{"a","b"}}).
Framework make_framework(const std::vector<std::string>& arguments,
                         const std::vector<std::pair<std::string, std::string>>& attacks);

enum class Label : std::uint8_t { In = 0, Out = 1, Und = 2 };

std::string_view to_string(Label label) noexcept;

/// A total labelling, positionally aligned with Framework::arguments().
/// Ordering is lexicographic with In < Out < Und.
struct Labelling {
    std::vector<Label> labels;

    Label operator[](std::size_t i) const { return labels.at(i); }
    std::size_t size() const noexcept { return labels.size(); }
    bool is_two_valued() const noexcept;

    friend auto operator<=>(const Labelling&, const Labelling&) = default;
    friend bool operator==(const Labelling&, const Labelling&) = default;
};

/// Builds a labelling from names; throws ContractError unless it covers
/// exactly the framework's arguments.
Labelling make_labelling(const Framework& f, const std::vector<std::pair<std::string, Label>>& entries);

/// The extension {x : lab(x) = In}, as argument indices.
std::vector<std::size_t> in_set(const Labelling& lab);

/// "a:in b:out".
std::string format_labelling(const Framework& f, const Labelling& lab);

enum class Condition : std::uint8_t { C1, C2, C3, C4 };

std::string_view to_string(Condition c) noexcept;

struct Violation {
    std::size_t argument;
    Condition condition;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct CompletenessCheck {
    bool complete = false;
    std::vector<Violation> violations;
};

/// Checks C1-C3 at every argument. A C1 failure at an unattacked argument is
/// reported as C4. Throws ContractError if the labelling is not total over f.
CompletenessCheck check_complete(const Framework& f, const Labelling& lab);

/// All complete labellings, sorted. Backtracking with label propagation; the
/// result is identical to enumerate_complete_exhaustive.
std::vector<Labelling> enumerate_complete(const Framework& f);

/// Complete labellings without und (the stable ones), by the same search
/// restricted to in and out.
std::vector<Labelling> enumerate_stable(const Framework& f);

/// All complete labellings by testing each of the 3^|S| candidates.
std::vector<Labelling> enumerate_complete_exhaustive(const Framework& f);

struct Classification {
    std::vector<Labelling> stable;
    Labelling grounded;
    std::vector<Labelling> preferred;
};

/// Splits the complete labellings of one framework into stable, grounded
/// (unique minimal In-set) and preferred (maximal In-sets) members.
/// Throws ContractError on an empty input or when no minimal member exists.
Classification classify(std::span<const Labelling> complete);

/// (subset, attacks restricted to subset). Throws ContractError on an empty or
/// foreign subset.
Framework restrict(const Framework& f, const std::set<ArgumentId>& subset);

}  // namespace g3af
