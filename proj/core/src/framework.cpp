#include "g3af/framework.hpp"

#include <algorithm>
#include <sstream>

#include "g3af/error.hpp"

namespace g3af {

ArgumentId::ArgumentId(std::string name) : name_(std::move(name)) {
    if (!is_valid(name_)) {
        throw ContractError("invalid argument name '" + name_ + "'");
    }
}

bool ArgumentId::is_valid(std::string_view name) noexcept {
    if (name.empty()) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    });
}

Framework::Framework(std::vector<ArgumentId> arguments, std::vector<Attack> attacks)
    : arguments_(std::move(arguments)) {
    if (arguments_.empty()) throw ContractError("a framework needs at least one argument");
    std::sort(arguments_.begin(), arguments_.end());
    if (auto dup = std::adjacent_find(arguments_.begin(), arguments_.end()); dup != arguments_.end()) {
        throw ContractError("duplicate argument '" + dup->str() + "'");
    }
    attackers_.resize(arguments_.size());
    attacks_.reserve(attacks.size());
    for (const auto& [from, to] : attacks) {
        auto fi = index_of(from);
        auto ti = index_of(to);
        if (!fi) throw ContractError("attack source '" + from.str() + "' is not a declared argument");
        if (!ti) throw ContractError("attack target '" + to.str() + "' is not a declared argument");
        attacks_.emplace_back(*fi, *ti);
    }
    std::sort(attacks_.begin(), attacks_.end());
    if (auto dup = std::adjacent_find(attacks_.begin(), attacks_.end()); dup != attacks_.end()) {
        throw ContractError("duplicate attack " + arguments_[dup->first].str() + " -> " +
                            arguments_[dup->second].str());
    }
    for (const auto& [from, to] : attacks_) attackers_[to].push_back(from);
}

std::optional<std::size_t> Framework::index_of(const ArgumentId& id) const {
    auto it = std::lower_bound(arguments_.begin(), arguments_.end(), id);
    if (it == arguments_.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - arguments_.begin());
}

std::size_t Framework::index_of_or_throw(const ArgumentId& id) const {
    if (auto i = index_of(id)) return *i;
    throw ContractError("'" + id.str() + "' is not an argument of " + describe());
}

bool Framework::attacks(std::size_t from, std::size_t to) const {
    return std::binary_search(attacks_.begin(), attacks_.end(), std::pair{from, to});
}

std::vector<Attack> Framework::attack_pairs() const {
    std::vector<Attack> out;
    out.reserve(attacks_.size());
    for (const auto& [from, to] : attacks_) out.emplace_back(arguments_[from], arguments_[to]);
    return out;
}

std::string Framework::describe() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < arguments_.size(); ++i) os << (i ? "," : "") << arguments_[i].str();
    os << "}:{";
    for (std::size_t i = 0; i < attacks_.size(); ++i) {
        os << (i ? "," : "") << arguments_[attacks_[i].first].str() << '>' << arguments_[attacks_[i].second].str();
    }
    os << '}';
    return os.str();
}

Framework make_framework(const std::vector<std::string>& arguments,
                         const std::vector<std::pair<std::string, std::string>>& attacks) {
    std::vector<ArgumentId> args;
    args.reserve(arguments.size());
    for (const auto& a : arguments) args.emplace_back(a);
    std::vector<Attack> atts;
    atts.reserve(attacks.size());
    for (const auto& [from, to] : attacks) atts.emplace_back(ArgumentId(from), ArgumentId(to));
    return Framework(std::move(args), std::move(atts));
}

std::string_view to_string(Label label) noexcept {
    switch (label) {
        case Label::In: return "in";
        case Label::Out: return "out";
        case Label::Und: return "und";
    }
    return "?";
}

bool Labelling::is_two_valued() const noexcept {
    return std::none_of(labels.begin(), labels.end(), [](Label l) { return l == Label::Und; });
}

Labelling make_labelling(const Framework& f, const std::vector<std::pair<std::string, Label>>& entries) {
    std::vector<std::optional<Label>> slots(f.size());
    for (const auto& [name, label] : entries) {
        auto i = f.index_of_or_throw(ArgumentId(name));
        if (slots[i]) throw ContractError("argument '" + name + "' labelled twice");
        slots[i] = label;
    }
    Labelling lab;
    lab.labels.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!slots[i]) throw ContractError("labelling misses argument '" + f.argument(i).str() + "'");
        lab.labels.push_back(*slots[i]);
    }
    return lab;
}

std::vector<std::size_t> in_set(const Labelling& lab) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < lab.size(); ++i) {
        if (lab[i] == Label::In) out.push_back(i);
    }
    return out;
}

std::string format_labelling(const Framework& f, const Labelling& lab) {
    std::string out;
    for (std::size_t i = 0; i < lab.size(); ++i) {
        if (i) out += ' ';
        out += f.argument(i).str();
        out += ':';
        out += to_string(lab[i]);
    }
    return out;
}

std::string_view to_string(Condition c) noexcept {
    switch (c) {
        case Condition::C1: return "C1";
        case Condition::C2: return "C2";
        case Condition::C3: return "C3";
        case Condition::C4: return "C4";
    }
    return "?";
}

CompletenessCheck check_complete(const Framework& f, const Labelling& lab) {
    if (lab.size() != f.size()) {
        throw ContractError("labelling covers " + std::to_string(lab.size()) + " arguments, framework has " +
                            std::to_string(f.size()));
    }
    CompletenessCheck result;
    for (std::size_t x = 0; x < f.size(); ++x) {
        bool all_out = true;
        bool some_in = false;
        bool some_und = false;
        for (auto y : f.attackers(x)) {
            all_out = all_out && lab[y] == Label::Out;
            some_in = some_in || lab[y] == Label::In;
            some_und = some_und || lab[y] == Label::Und;
        }
        if ((lab[x] == Label::In) != all_out) {
            result.violations.push_back({x, f.attackers(x).empty() ? Condition::C4 : Condition::C1});
        }
        if ((lab[x] == Label::Out) != some_in) result.violations.push_back({x, Condition::C2});
        if ((lab[x] == Label::Und) != (!some_in && some_und)) result.violations.push_back({x, Condition::C3});
    }
    result.complete = result.violations.empty();
    return result;
}

namespace {

constexpr std::int8_t kUnassigned = -1;

class CompleteSearch {
public:
    CompleteSearch(const Framework& f, bool two_valued) : f_(f), two_valued_(two_valued) {}

    std::vector<Labelling> run() {
        std::vector<std::int8_t> state(f_.size(), kUnassigned);
        search(state);
        std::sort(found_.begin(), found_.end());
        return std::move(found_);
    }

private:
    // Applies forced labels until nothing changes; false on conflict.
    bool propagate(std::vector<std::int8_t>& st) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t x = 0; x < f_.size(); ++x) {
                std::size_t n_in = 0, n_und = 0, n_open = 0;
                std::size_t open_attacker = 0;
                for (auto y : f_.attackers(x)) {
                    switch (st[y]) {
                        case kUnassigned: ++n_open; open_attacker = y; break;
                        case static_cast<std::int8_t>(Label::In): ++n_in; break;
                        case static_cast<std::int8_t>(Label::Und): ++n_und; break;
                        default: break;
                    }
                }
                auto set = [&](std::size_t i, Label l) {
                    st[i] = static_cast<std::int8_t>(l);
                    changed = true;
                };
                if (st[x] == kUnassigned) {
                    if (n_in > 0) {
                        set(x, Label::Out);
                    } else if (n_open == 0) {
                        set(x, n_und > 0 ? Label::Und : Label::In);
                    }
                    continue;
                }
                switch (static_cast<Label>(st[x])) {
                    case Label::In:
                        if (n_in > 0 || n_und > 0) return false;
                        if (n_open > 0) {
                            for (auto y : f_.attackers(x)) {
                                if (st[y] == kUnassigned) set(y, Label::Out);
                            }
                        }
                        break;
                    case Label::Out:
                        if (n_in == 0) {
                            if (n_open == 0) return false;
                            if (n_open == 1) set(open_attacker, Label::In);
                        }
                        break;
                    case Label::Und:
                        if (n_in > 0) return false;
                        if (n_und == 0) {
                            if (n_open == 0) return false;
                            if (n_open == 1) set(open_attacker, Label::Und);
                        }
                        break;
                }
            }
        }
        return true;
    }

    void search(std::vector<std::int8_t> st) {
        if (!propagate(st)) return;
        auto open = std::find(st.begin(), st.end(), kUnassigned);
        if (open == st.end()) {
            Labelling lab;
            lab.labels.reserve(st.size());
            for (auto v : st) lab.labels.push_back(static_cast<Label>(v));
            if (check_complete(f_, lab).complete) found_.push_back(std::move(lab));
            return;
        }
        for (Label l : {Label::In, Label::Out, Label::Und}) {
            if (two_valued_ && l == Label::Und) break;
            auto next = st;
            next[static_cast<std::size_t>(open - st.begin())] = static_cast<std::int8_t>(l);
            search(std::move(next));
        }
    }

    const Framework& f_;
    bool two_valued_;
    std::vector<Labelling> found_;
};

}  // namespace

std::vector<Labelling> enumerate_complete(const Framework& f) { return CompleteSearch(f, false).run(); }

std::vector<Labelling> enumerate_stable(const Framework& f) { return CompleteSearch(f, true).run(); }

std::vector<Labelling> enumerate_complete_exhaustive(const Framework& f) {
    std::vector<Labelling> out;
    Labelling lab;
    lab.labels.assign(f.size(), Label::In);
    // Odometer over {In, Out, Und}^n, last argument fastest, so output is sorted.
    while (true) {
        if (check_complete(f, lab).complete) out.push_back(lab);
        std::size_t i = f.size();
        while (i > 0) {
            --i;
            if (lab.labels[i] != Label::Und) {
                lab.labels[i] = static_cast<Label>(static_cast<int>(lab.labels[i]) + 1);
                break;
            }
            lab.labels[i] = Label::In;
            if (i == 0) return out;
        }
    }
}

namespace {

bool in_subset(const Labelling& a, const Labelling& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == Label::In && b[i] != Label::In) return false;
    }
    return true;
}

}  // namespace

Classification classify(std::span<const Labelling> complete) {
    if (complete.empty()) throw ContractError("complete semantics never yields an empty labelling set");
    Classification out;
    std::optional<Labelling> grounded;
    for (const auto& lab : complete) {
        if (lab.is_two_valued()) out.stable.push_back(lab);
        bool minimal = std::all_of(complete.begin(), complete.end(),
                                   [&](const Labelling& other) { return in_subset(lab, other); });
        if (minimal && !grounded) grounded = lab;
        bool maximal = std::none_of(complete.begin(), complete.end(), [&](const Labelling& other) {
            return in_subset(lab, other) && !in_subset(other, lab);
        });
        if (maximal) out.preferred.push_back(lab);
    }
    if (!grounded) throw ContractError("labelling set has no least In-set; not the complete set of one framework");
    out.grounded = *grounded;
    std::sort(out.stable.begin(), out.stable.end());
    std::sort(out.preferred.begin(), out.preferred.end());
    out.preferred.erase(std::unique(out.preferred.begin(), out.preferred.end()), out.preferred.end());
    return out;
}

Framework restrict(const Framework& f, const std::set<ArgumentId>& subset) {
    if (subset.empty()) throw ContractError("cannot restrict to an empty argument set");
    for (const auto& id : subset) f.index_of_or_throw(id);
    std::vector<ArgumentId> args(subset.begin(), subset.end());
    std::vector<Attack> atts;
    for (const auto& [from, to] : f.attack_pairs()) {
        if (subset.contains(from) && subset.contains(to)) atts.emplace_back(from, to);
    }
    return Framework(std::move(args), std::move(atts));
}

}  // namespace g3af
