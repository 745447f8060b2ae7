#include "g3af/formula_text.hpp"

#include <cctype>
#include <optional>

#include "g3af/error.hpp"

namespace g3af {

namespace {

enum class Tok { Ident, Not, And, Or, Imp, Iff, NConst, LParen, RParen, Comma, Eq, Neq, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t col;
};

std::string_view describe(Tok t) {
    switch (t) {
        case Tok::Ident: return "identifier";
        case Tok::Not: return "'~'";
        case Tok::And: return "'&'";
        case Tok::Or: return "'|'";
        case Tok::Imp: return "'->'";
        case Tok::Iff: return "'<->'";
        case Tok::NConst: return "'#n'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Comma: return "','";
        case Tok::Eq: return "'='";
        case Tok::Neq: return "'!='";
        case Tok::End: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    auto starts = [&](std::string_view s) { return text.substr(i, s.size()) == s; };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const std::size_t l = line, cl = col;
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), l, cl});
            advance(j - i);
            continue;
        }
        struct Sym {
            std::string_view s;
            Tok t;
        };
        static constexpr Sym kSyms[] = {{"<->", Tok::Iff}, {"->", Tok::Imp}, {"!=", Tok::Neq}, {"#n", Tok::NConst},
                                        {"~", Tok::Not},   {"&", Tok::And},  {"|", Tok::Or},   {"(", Tok::LParen},
                                        {")", Tok::RParen}, {",", Tok::Comma}, {"=", Tok::Eq}};
        bool matched = false;
        for (const auto& sym : kSyms) {
            if (starts(sym.s)) {
                out.push_back({sym.t, std::string(sym.s), l, cl});
                advance(sym.s.size());
                matched = true;
                break;
            }
        }
        if (!matched) throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

bool is_upper(const std::string& s) { return !s.empty() && s.front() >= 'A' && s.front() <= 'Z'; }

// Shared recursive descent; F is PropFormula or PredFormula.
template <class F>
class Parser {
public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    F parse() {
        F f = iff();
        if (peek().kind != Tok::End) fail("expected end of input, found " + show(peek()));
        return f;
    }

private:
    static constexpr bool kPred = std::is_same_v<F, PredFormula>;

    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool accept(Tok t) {
        if (peek().kind != t) return false;
        ++pos_;
        return true;
    }
    const Token& expect(Tok t) {
        if (peek().kind != t) fail("expected " + std::string(describe(t)) + ", found " + show(peek()));
        return next();
    }
    static std::string show(const Token& t) {
        return t.kind == Tok::Ident ? "'" + t.text + "'" : std::string(describe(t.kind));
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().col); }
    [[noreturn]] void fail_at(const Token& t, const std::string& msg) const { throw ParseError(msg, t.line, t.col); }

    F iff() {
        F a = imp();
        if (accept(Tok::Iff)) return F::iff(a, iff());
        return a;
    }
    F imp() {
        F a = disj();
        if (accept(Tok::Imp)) return F::imp(a, imp());
        return a;
    }
    F disj() {
        F a = conj();
        while (accept(Tok::Or)) a = F::disj(a, conj());
        return a;
    }
    F conj() {
        F a = unary();
        while (accept(Tok::And)) a = F::conj(a, unary());
        return a;
    }
    F unary() {
        if (accept(Tok::Not)) return F::neg(unary());
        if constexpr (kPred) {
            if (peek().kind == Tok::Ident && (peek().text == "forall" || peek().text == "exists")) {
                const bool universal = next().text == "forall";
                std::vector<std::string> vars;
                while (peek().kind == Tok::Ident) {
                    const Token& v = next();
                    if (!is_upper(v.text)) fail_at(v, "quantified variable '" + v.text + "' must start with an uppercase letter");
                    vars.push_back(v.text);
                }
                if (vars.empty()) fail("expected a variable after the quantifier");
                expect(Tok::LParen);
                F body = iff();
                expect(Tok::RParen);
                for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
                    body = universal ? PredFormula::forall(*it, body) : PredFormula::exists(*it, body);
                }
                return body;
            }
        }
        return primary();
    }
    F primary() {
        if (accept(Tok::LParen)) {
            F f = iff();
            expect(Tok::RParen);
            return f;
        }
        if (accept(Tok::NConst)) return F::n();
        if (peek().kind != Tok::Ident) fail("expected a formula, found " + show(peek()));
        if (peek().text == "true") {
            next();
            return F::top();
        }
        if (peek().text == "false") {
            next();
            return F::bot();
        }
        if constexpr (kPred) {
            return pred_atom();
        } else {
            const Token& t = next();
            try {
                return PropFormula::atom(t.text);
            } catch (const ContractError& e) {
                fail_at(t, e.what());
            }
        }
    }

    Term term() {
        const Token& t = expect(Tok::Ident);
        try {
            return is_upper(t.text) ? Term::var(t.text) : Term::constant(t.text);
        } catch (const ContractError& e) {
            fail_at(t, e.what());
        }
    }

    PredFormula pred_atom() {
        if (peek(1).kind == Tok::LParen && (peek().text == "In" || peek().text == "R")) {
            const bool is_in = next().text == "In";
            expect(Tok::LParen);
            Term a = term();
            if (is_in) {
                expect(Tok::RParen);
                return PredFormula::in(a);
            }
            expect(Tok::Comma);
            Term b = term();
            expect(Tok::RParen);
            return PredFormula::r(a, b);
        }
        Term a = term();
        if (accept(Tok::Eq)) return PredFormula::eq(a, term());
        if (accept(Tok::Neq)) return PredFormula::neq(a, term());
        fail("expected '=' or '!=' after term '" + a.name + "'");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

int prec_of(PropFormula::Kind k) {
    switch (k) {
        case PropFormula::Kind::Imp: return 1;
        case PropFormula::Kind::Or: return 2;
        case PropFormula::Kind::And: return 3;
        default: return 4;
    }
}

int prec_of(PredFormula::Kind k) {
    switch (k) {
        case PredFormula::Kind::Imp: return 1;
        case PredFormula::Kind::Or: return 2;
        case PredFormula::Kind::And: return 3;
        default: return 4;
    }
}

std::string wrap(const std::string& s, bool paren) { return paren ? "(" + s + ")" : s; }

std::string render(const PropFormula& f) {
    using K = PropFormula::Kind;
    switch (f.kind()) {
        case K::Atom: return f.name();
        case K::NConst: return "#n";
        case K::Top: return "true";
        case K::Bot: return "false";
        case K::Neg: return "~" + wrap(render(f.lhs()), prec_of(f.lhs().kind()) < 4);
        default: break;
    }
    const int p = prec_of(f.kind());
    const bool right_assoc = f.kind() == K::Imp;
    const int lp = prec_of(f.lhs().kind());
    const int rp = prec_of(f.rhs().kind());
    std::string_view op = f.kind() == K::And ? " & " : f.kind() == K::Or ? " | " : " -> ";
    return wrap(render(f.lhs()), right_assoc ? lp <= p : lp < p) + std::string(op) +
           wrap(render(f.rhs()), right_assoc ? rp < p : rp <= p);
}

std::string render(const PredFormula& f) {
    using K = PredFormula::Kind;
    switch (f.kind()) {
        case K::In: return "In(" + f.terms()[0].name + ")";
        case K::R: return "R(" + f.terms()[0].name + "," + f.terms()[1].name + ")";
        case K::Eq: return f.terms()[0].name + " = " + f.terms()[1].name;
        case K::NConst: return "#n";
        case K::Top: return "true";
        case K::Bot: return "false";
        case K::Neg:
            if (f.lhs().kind() == K::Eq) return f.lhs().terms()[0].name + " != " + f.lhs().terms()[1].name;
            return "~" + wrap(render(f.lhs()), prec_of(f.lhs().kind()) < 4 || f.lhs().kind() == K::Eq);
        case K::Forall:
        case K::Exists:
            return std::string(f.kind() == K::Forall ? "forall " : "exists ") + f.var() + " (" + render(f.body()) + ")";
        default: break;
    }
    const int p = prec_of(f.kind());
    const bool right_assoc = f.kind() == K::Imp;
    const int lp = prec_of(f.lhs().kind());
    const int rp = prec_of(f.rhs().kind());
    std::string_view op = f.kind() == K::And ? " & " : f.kind() == K::Or ? " | " : " -> ";
    return wrap(render(f.lhs()), right_assoc ? lp <= p : lp < p) + std::string(op) +
           wrap(render(f.rhs()), right_assoc ? rp < p : rp <= p);
}

}  // namespace

PropFormula parse_prop(std::string_view text) { return Parser<PropFormula>(text).parse(); }
PredFormula parse_pred(std::string_view text) { return Parser<PredFormula>(text).parse(); }

std::string to_text(const PropFormula& f) { return render(f); }
std::string to_text(const PredFormula& f) { return render(f); }

}  // namespace g3af
