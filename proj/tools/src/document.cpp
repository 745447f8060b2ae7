#include "g3af_cli/document.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "g3af/error.hpp"
#include "g3af/formula_text.hpp"

namespace g3af::cli {

std::string_view to_string(Fact::Kind kind) noexcept {
    switch (kind) {
        case Fact::Kind::Arg: return "arg";
        case Fact::Kind::Att: return "att";
        case Fact::Kind::Wff: return "wff";
        case Fact::Kind::Inst: return "inst";
        case Fact::Kind::Datt: return "datt";
        case Fact::Kind::Catt: return "catt";
        case Fact::Kind::Acc: return "acc";
        case Fact::Kind::Psi: return "psi";
    }
    return "?";
}

std::string_view to_string(Species s) noexcept {
    switch (s) {
        case Species::Plain: return "plain";
        case Species::Higher: return "higher";
        case Species::Axiomatic: return "axiomatic";
        case Species::Disjunctive: return "disjunctive";
        case Species::Conjunctive: return "conjunctive";
        case Species::Adf: return "adf";
    }
    return "?";
}

namespace {

enum class Tok { Ident, String, LParen, RParen, LBracket, RBracket, Comma, Dot, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t col;
};

std::string show(const Token& t) {
    switch (t.kind) {
        case Tok::Ident: return "'" + t.text + "'";
        case Tok::String: return "string";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::Comma: return "','";
        case Tok::Dot: return "'.'";
        case Tok::End: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto bump = [&]() {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            bump();
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') bump();
            continue;
        }
        const std::size_t l = line, cl = col;
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                word += text[i];
                bump();
            }
            out.push_back({Tok::Ident, std::move(word), l, cl});
            continue;
        }
        if (c == '"') {
            bump();
            std::string s;
            while (true) {
                if (i >= text.size()) throw ParseError("unterminated string", l, cl);
                if (text[i] == '"') {
                    bump();
                    break;
                }
                if (text[i] == '\\') {
                    bump();
                    if (i >= text.size() || (text[i] != '"' && text[i] != '\\')) {
                        throw ParseError("unknown escape in string", line, col);
                    }
                }
                s += text[i];
                bump();
            }
            out.push_back({Tok::String, std::move(s), l, cl});
            continue;
        }
        Tok t;
        switch (c) {
            case '(': t = Tok::LParen; break;
            case ')': t = Tok::RParen; break;
            case '[': t = Tok::LBracket; break;
            case ']': t = Tok::RBracket; break;
            case ',': t = Tok::Comma; break;
            case '.': t = Tok::Dot; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
        }
        out.push_back({t, std::string(1, c), l, cl});
        bump();
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class FactParser {
public:
    explicit FactParser(std::string_view text) : toks_(lex(text)) {}

    std::vector<Fact> run() {
        std::vector<Fact> facts;
        while (peek().kind != Tok::End) facts.push_back(fact());
        return facts;
    }

private:
    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    const Token& expect(Tok t, std::string_view what) {
        if (peek().kind != t) {
            throw ParseError("expected " + std::string(what) + ", found " + show(peek()), peek().line, peek().col);
        }
        return next();
    }
    std::string ident(std::string_view what) {
        const auto& t = expect(Tok::Ident, what);
        if (!ArgumentId::is_valid(t.text)) throw ParseError("invalid name '" + t.text + "'", t.line, t.col);
        return t.text;
    }
    std::string unit() {
        if (peek().kind == Tok::Ident && peek().text == "r" && peek(1).kind == Tok::LParen) {
            next();
            next();
            auto a = ident("argument name");
            expect(Tok::Comma, "','");
            auto b = ident("argument name");
            expect(Tok::RParen, "')'");
            return r_unit_name(a, b);
        }
        return ident("unit name");
    }
    std::vector<std::string> list() {
        expect(Tok::LBracket, "'['");
        std::vector<std::string> out{ident("argument name")};
        while (peek().kind == Tok::Comma) {
            next();
            out.push_back(ident("argument name"));
        }
        expect(Tok::RBracket, "']'");
        return out;
    }

    Fact fact() {
        const Token& head = expect(Tok::Ident, "a fact");
        Fact f{Fact::Kind::Arg, {}, {}, {}, head.line, head.col};
        const std::string& h = head.text;
        if (h == "psi") {
            f.kind = Fact::Kind::Psi;
            f.text = expect(Tok::String, "a quoted formula").text;
            expect(Tok::Dot, "'.'");
            return f;
        }
        expect(Tok::LParen, "'('");
        if (h == "arg") {
            f.names.push_back(ident("argument name"));
        } else if (h == "att") {
            f.kind = Fact::Kind::Att;
            f.names.push_back(unit());
            expect(Tok::Comma, "','");
            f.names.push_back(unit());
        } else if (h == "wff" || h == "inst" || h == "acc") {
            f.kind = h == "wff" ? Fact::Kind::Wff : h == "inst" ? Fact::Kind::Inst : Fact::Kind::Acc;
            f.names.push_back(ident("name"));
            expect(Tok::Comma, "','");
            f.text = expect(Tok::String, "a quoted formula").text;
        } else if (h == "datt") {
            f.kind = Fact::Kind::Datt;
            f.names.push_back(ident("argument name"));
            expect(Tok::Comma, "','");
            f.group = list();
        } else if (h == "catt") {
            f.kind = Fact::Kind::Catt;
            f.group = list();
            expect(Tok::Comma, "','");
            f.names.push_back(ident("argument name"));
        } else {
            throw ParseError("unknown fact '" + h + "'", head.line, head.col);
        }
        expect(Tok::RParen, "')'");
        expect(Tok::Dot, "'.'");
        return f;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

[[noreturn]] void fail(const Fact& f, const std::string& msg) {
    throw ParseError(std::string(to_string(f.kind)) + " fact: " + msg, f.line, f.column);
}

struct Names {
    std::set<std::string> args;
    std::set<std::string> wffs;
};

Names declarations(const InputDocument& doc) {
    Names n;
    for (const auto& f : doc.facts) {
        if (f.kind == Fact::Kind::Arg && !n.args.insert(f.names[0]).second) fail(f, "argument '" + f.names[0] + "' declared twice");
    }
    for (const auto& f : doc.facts) {
        if (f.kind != Fact::Kind::Wff) continue;
        if (n.args.contains(f.names[0])) fail(f, "wff name '" + f.names[0] + "' is already an argument");
        if (!n.wffs.insert(f.names[0]).second) fail(f, "wff '" + f.names[0] + "' declared twice");
    }
    return n;
}

std::optional<std::pair<std::string, std::string>> r_unit_parts(const std::string& name) {
    if (name.rfind("r(", 0) != 0) return std::nullopt;
    const auto comma = name.find(',');
    return std::pair{name.substr(2, comma - 2), name.substr(comma + 1, name.size() - comma - 2)};
}

bool is_higher_endpoint(const std::string& unit, const Names& n) {
    return r_unit_parts(unit).has_value() || n.wffs.contains(unit);
}

// The species a fact commits the document to, if any.
std::optional<Species> vote(const Fact& f, const Names& n) {
    switch (f.kind) {
        case Fact::Kind::Arg:
        case Fact::Kind::Inst: return std::nullopt;
        case Fact::Kind::Att:
            if (is_higher_endpoint(f.names[0], n) || is_higher_endpoint(f.names[1], n)) return Species::Higher;
            return std::nullopt;
        case Fact::Kind::Wff: return Species::Higher;
        case Fact::Kind::Datt: return Species::Disjunctive;
        case Fact::Kind::Catt: return Species::Conjunctive;
        case Fact::Kind::Acc: return Species::Adf;
        case Fact::Kind::Psi: return Species::Axiomatic;
    }
    return std::nullopt;
}

bool allowed_in(const Fact& f, const Names& n, Species s) {
    switch (f.kind) {
        case Fact::Kind::Arg: return true;
        case Fact::Kind::Att: return s == Species::Plain || s == Species::Higher;
        case Fact::Kind::Inst: return s == Species::Plain;
        default: return vote(f, n) == s;
    }
}

void check_references(const InputDocument& doc, const Names& n) {
    auto need_arg = [&](const Fact& f, const std::string& a) {
        if (!n.args.contains(a)) fail(f, "'" + a + "' is not a declared argument");
    };
    std::set<std::string> inst_seen, acc_seen;
    std::set<std::pair<std::string, std::string>> att_seen;
    bool psi_seen = false;
    for (const auto& f : doc.facts) {
        switch (f.kind) {
            case Fact::Kind::Arg: break;
            case Fact::Kind::Att:
                for (const auto& u : f.names) {
                    if (auto parts = r_unit_parts(u)) {
                        need_arg(f, parts->first);
                        need_arg(f, parts->second);
                    } else if (!n.args.contains(u) && !n.wffs.contains(u)) {
                        fail(f, "'" + u + "' is not a declared argument or wff");
                    }
                }
                if (!att_seen.emplace(f.names[0], f.names[1]).second) {
                    fail(f, "attack " + f.names[0] + " -> " + f.names[1] + " declared twice");
                }
                break;
            case Fact::Kind::Wff:
                try {
                    auto phi = parse_pred(f.text);
                    if (!is_closed(phi)) fail(f, "formula of '" + f.names[0] + "' has free variables");
                    for (const auto& c : constants(phi)) need_arg(f, c);
                } catch (const ParseError& e) {
                    fail(f, std::string("formula: ") + e.what());
                }
                break;
            case Fact::Kind::Inst:
                need_arg(f, f.names[0]);
                if (!inst_seen.insert(f.names[0]).second) fail(f, "'" + f.names[0] + "' instantiated twice");
                try {
                    parse_prop(f.text);
                } catch (const ParseError& e) {
                    fail(f, std::string("formula: ") + e.what());
                }
                break;
            case Fact::Kind::Datt:
            case Fact::Kind::Catt:
                need_arg(f, f.names[0]);
                for (const auto& a : f.group) need_arg(f, a);
                break;
            case Fact::Kind::Acc:
                need_arg(f, f.names[0]);
                if (!acc_seen.insert(f.names[0]).second) fail(f, "'" + f.names[0] + "' has two acceptance conditions");
                try {
                    for (const auto& p : parse_condition(f.text).parents) need_arg(f, p.str());
                } catch (const Error& e) {
                    fail(f, std::string("condition: ") + e.what());
                }
                break;
            case Fact::Kind::Psi:
                if (psi_seen) fail(f, "only one psi fact is allowed");
                psi_seen = true;
                try {
                    auto psi = parse_pred(f.text);
                    if (!is_closed(psi)) fail(f, "constraint has free variables");
                    if (mentions_in(psi) || mentions_nconst(psi)) fail(f, "constraint may only use R and =");
                    for (const auto& c : constants(psi)) need_arg(f, c);
                } catch (const ParseError& e) {
                    fail(f, std::string("formula: ") + e.what());
                }
                break;
        }
    }
}

Species species_of(const InputDocument& doc, const Names& n) {
    std::optional<Species> s;
    const Fact* decided_by = nullptr;
    for (const auto& f : doc.facts) {
        auto v = vote(f, n);
        if (!v) continue;
        if (!s) {
            s = v;
            decided_by = &f;
        } else if (*s != *v) {
            fail(f, "mixes a " + std::string(to_string(*v)) + " network into a " + std::string(to_string(*s)) +
                        " one (see line " + std::to_string(decided_by->line) + ")");
        }
    }
    const Species result = s.value_or(Species::Plain);
    for (const auto& f : doc.facts) {
        if (!allowed_in(f, n, result)) fail(f, "not allowed in a " + std::string(to_string(result)) + " network");
    }
    if (result == Species::Adf) {
        std::set<std::string> with_acc;
        for (const auto& f : doc.facts) {
            if (f.kind == Fact::Kind::Acc) with_acc.insert(f.names[0]);
        }
        for (const auto& f : doc.facts) {
            if (f.kind == Fact::Kind::Arg && !with_acc.contains(f.names[0])) {
                fail(f, "argument '" + f.names[0] + "' has no acceptance condition");
            }
        }
    }
    return result;
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string list_text(const std::vector<std::string>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i];
    return out + "]";
}

std::vector<ArgumentId> arguments_of(const InputDocument& doc) {
    std::vector<ArgumentId> out;
    for (const auto& f : doc.facts) {
        if (f.kind == Fact::Kind::Arg) out.emplace_back(f.names[0]);
    }
    return out;
}

void require_only(const InputDocument& doc, std::initializer_list<Fact::Kind> kinds, std::string_view species) {
    for (const auto& f : doc.facts) {
        if (std::find(kinds.begin(), kinds.end(), f.kind) == kinds.end()) {
            fail(f, "not allowed in a " + std::string(species) + " network");
        }
    }
}

std::set<ArgumentId> id_set(const std::vector<std::string>& xs) {
    std::set<ArgumentId> out;
    for (const auto& x : xs) out.emplace(x);
    return out;
}

}  // namespace

InputDocument parse_document(std::string_view text) {
    InputDocument doc{FactParser(text).run()};
    const auto names = declarations(doc);
    check_references(doc, names);
    species_of(doc, names);
    return doc;
}

std::string serialize(const InputDocument& doc) {
    std::string out;
    for (const auto& f : doc.facts) {
        switch (f.kind) {
            case Fact::Kind::Arg: out += "arg(" + f.names[0] + ")."; break;
            case Fact::Kind::Att: out += "att(" + f.names[0] + "," + f.names[1] + ")."; break;
            case Fact::Kind::Wff:
            case Fact::Kind::Inst:
            case Fact::Kind::Acc:
                out += std::string(to_string(f.kind)) + "(" + f.names[0] + "," + quote(f.text) + ").";
                break;
            case Fact::Kind::Datt: out += "datt(" + f.names[0] + "," + list_text(f.group) + ")."; break;
            case Fact::Kind::Catt: out += "catt(" + list_text(f.group) + "," + f.names[0] + ")."; break;
            case Fact::Kind::Psi: out += "psi " + quote(f.text) + "."; break;
        }
        out += '\n';
    }
    return out;
}

Species detect_species(const InputDocument& doc) { return species_of(doc, declarations(doc)); }

Framework to_framework(const InputDocument& doc) {
    require_only(doc, {Fact::Kind::Arg, Fact::Kind::Att, Fact::Kind::Inst}, "plain");
    std::vector<Attack> atts;
    for (const auto& f : doc.facts) {
        if (f.kind != Fact::Kind::Att) continue;
        if (r_unit_parts(f.names[0]) || r_unit_parts(f.names[1])) fail(f, "R-atom units need a higher network");
        atts.emplace_back(ArgumentId(f.names[0]), ArgumentId(f.names[1]));
    }
    return Framework(arguments_of(doc), std::move(atts));
}

std::map<ArgumentId, PropFormula> to_instantiation(const InputDocument& doc) {
    std::map<ArgumentId, PropFormula> out;
    for (const auto& f : doc.facts) {
        if (f.kind == Fact::Kind::Inst) out.emplace(ArgumentId(f.names[0]), parse_prop(f.text));
    }
    return out;
}

HigherNetwork to_higher(const InputDocument& doc) {
    require_only(doc, {Fact::Kind::Arg, Fact::Kind::Att, Fact::Kind::Wff}, "higher");
    std::vector<std::string> nodes;
    for (const auto& a : arguments_of(doc)) nodes.push_back(a.str());
    HigherNetwork hn(std::move(nodes));
    for (const auto& f : doc.facts) {
        if (f.kind == Fact::Kind::Wff) hn.add_wff(f.names[0], parse_pred(f.text));
    }
    for (const auto& f : doc.facts) {
        if (f.kind == Fact::Kind::Att) hn.add_attack(f.names[0], f.names[1]);
    }
    return hn;
}

AxiomaticFrame to_axiomatic(const InputDocument& doc) {
    require_only(doc, {Fact::Kind::Arg, Fact::Kind::Psi}, "axiomatic");
    PredFormula psi = PredFormula::top();
    for (const auto& f : doc.facts) {
        if (f.kind == Fact::Kind::Psi) psi = parse_pred(f.text);
    }
    return AxiomaticFrame(arguments_of(doc), psi);
}

DisjunctiveNet to_disjunctive(const InputDocument& doc) {
    require_only(doc, {Fact::Kind::Arg, Fact::Kind::Datt}, "disjunctive");
    DisjunctiveNet dn{arguments_of(doc), {}};
    for (const auto& f : doc.facts) {
        if (f.kind == Fact::Kind::Datt) dn.dattacks.emplace_back(ArgumentId(f.names[0]), id_set(f.group));
    }
    return dn;
}

ConjunctiveNet to_conjunctive(const InputDocument& doc) {
    require_only(doc, {Fact::Kind::Arg, Fact::Kind::Catt}, "conjunctive");
    ConjunctiveNet cn{arguments_of(doc), {}};
    for (const auto& f : doc.facts) {
        if (f.kind == Fact::Kind::Catt) cn.cattacks.emplace_back(id_set(f.group), ArgumentId(f.names[0]));
    }
    return cn;
}

AdfNet to_adf(const InputDocument& doc) {
    require_only(doc, {Fact::Kind::Arg, Fact::Kind::Acc}, "adf");
    AdfNet adf{arguments_of(doc), {}};
    for (const auto& f : doc.facts) {
        if (f.kind == Fact::Kind::Acc) adf.conditions.emplace(ArgumentId(f.names[0]), parse_condition(f.text));
    }
    check_adf(adf);
    return adf;
}

namespace {

void flatten(const PropFormula& f, PropFormula::Kind op, std::vector<PropFormula>& out) {
    if (f.kind() == op) {
        flatten(f.lhs(), op, out);
        flatten(f.rhs(), op, out);
    } else {
        out.push_back(f);
    }
}

}  // namespace

AdfCondition parse_condition(std::string_view text) {
    const auto f = parse_prop(text);
    AdfCondition cond;
    if (f.kind() == PropFormula::Kind::Top) {
        cond.disjuncts.emplace_back();
        return cond;
    }
    if (f.kind() == PropFormula::Kind::Bot) return cond;
    if (contains_nconst(f)) throw ContractError("acceptance conditions cannot use #n");
    const auto names = atoms(f);
    for (const auto& a : names) cond.parents.emplace_back(a);
    std::vector<PropFormula> disjuncts;
    flatten(f, PropFormula::Kind::Or, disjuncts);
    std::set<std::vector<Lit>> seen;
    for (const auto& d : disjuncts) {
        std::vector<PropFormula> lits;
        flatten(d, PropFormula::Kind::And, lits);
        std::vector<Lit> row(cond.parents.size(), Lit::Absent);
        bool contradictory = false;
        for (const auto& lit : lits) {
            const bool negative = lit.kind() == PropFormula::Kind::Neg;
            const auto& atom = negative ? lit.lhs() : lit;
            if (atom.kind() != PropFormula::Kind::Atom) {
                throw ContractError("acceptance condition is not a disjunction of conjunctions of literals");
            }
            const auto p = static_cast<std::size_t>(std::distance(names.begin(), names.find(atom.name())));
            const Lit want = negative ? Lit::Neg : Lit::Pos;
            if (row[p] != Lit::Absent && row[p] != want) contradictory = true;
            row[p] = want;
        }
        if (!contradictory && seen.insert(row).second) cond.disjuncts.push_back(std::move(row));
    }
    return cond;
}

}  // namespace g3af::cli
