#include <gtest/gtest.h>

#include <random>

#include "g3af/error.hpp"
#include "g3af_cli/document.hpp"

using namespace g3af;
using namespace g3af::cli;

namespace {

ParseError parse_error(std::string_view text) {
    try {
        parse_document(text);
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "no error for: " << text;
    return ParseError("", 0, 0);
}

TEST(Document, ReadsEveryFactKind) {
    const auto doc = parse_document(
        "arg(a). arg(b). # two args\n"
        "att(a, b).\n"
        "inst(b, \"p | q\").");
    ASSERT_EQ(doc.facts.size(), 4u);
    EXPECT_EQ(doc.facts[2].kind, Fact::Kind::Att);
    EXPECT_EQ(doc.facts[2].names, (std::vector<std::string>{"a", "b"}));
    EXPECT_EQ(doc.facts[2].line, 2u);
    EXPECT_EQ(doc.facts[3].text, "p | q");
}

TEST(Document, SpeciesDetection) {
    EXPECT_EQ(detect_species(parse_document("arg(a). att(a,a).")), Species::Plain);
    EXPECT_EQ(detect_species(parse_document("arg(a). att(a, r(a,a)).")), Species::Higher);
    EXPECT_EQ(detect_species(parse_document("arg(a). wff(w, \"R(a,a)\").")), Species::Higher);
    EXPECT_EQ(detect_species(parse_document("arg(a). psi \"R(a,a)\".")), Species::Axiomatic);
    EXPECT_EQ(detect_species(parse_document("arg(a). datt(a,[a]).")), Species::Disjunctive);
    EXPECT_EQ(detect_species(parse_document("arg(a). catt([a],a).")), Species::Conjunctive);
    EXPECT_EQ(detect_species(parse_document("arg(a). acc(a, \"~a\").")), Species::Adf);
}

TEST(Document, ErrorsPointAtTheFact) {
    auto e = parse_error("arg(a).\natt(a, b).");
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 1u);
    EXPECT_NE(std::string(e.what()).find("att"), std::string::npos);

    e = parse_error("arg(a).\narg(b)\narg(c).");
    EXPECT_EQ(e.line(), 3u);

    e = parse_error("arg(a). arg(b).\ndatt(a,[b]).\ncatt([a],b).");
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("mixes"), std::string::npos);

    EXPECT_THROW(parse_document("arg(a). arg(a)."), ParseError);
    EXPECT_THROW(parse_document("arg(a). wff(a, \"R(a,a)\")."), ParseError);
    EXPECT_THROW(parse_document("arg(a). wff(w, \"R(X,a)\")."), ParseError);
    EXPECT_THROW(parse_document("arg(a). inst(a, \"p &\")."), ParseError);
    EXPECT_THROW(parse_document("arg(a). arg(b). acc(a, \"b\")."), ParseError);
    EXPECT_THROW(parse_document("arg(a). psi \"In(a)\"."), ParseError);
    EXPECT_THROW(parse_document("arg(a). psi \"true\". psi \"true\"."), ParseError);
    EXPECT_THROW(parse_document("arg(a). att(a,a). att(a,a)."), ParseError);
    EXPECT_THROW(parse_document("arg(a). \"x\"."), ParseError);
    EXPECT_THROW(parse_document("arg(a). inst(a, \"p\")"), ParseError);
}

TEST(Document, BuildersRejectForeignFacts) {
    const auto doc = parse_document("arg(a). arg(b). att(a,b). inst(b, \"p\").");
    EXPECT_EQ(to_framework(doc).describe(), "{a,b}:{a>b}");
    EXPECT_EQ(to_instantiation(doc).size(), 1u);
    EXPECT_THROW(to_conjunctive(doc), ParseError);
    const auto hn = to_higher(parse_document("arg(a). arg(b). wff(w, \"R(a,b)\"). att(w, b). att(a, r(a,b))."));
    EXPECT_EQ(hn.units().size(), 4u);
    EXPECT_EQ(hn.attacks().size(), 2u);
}

TEST(Document, SerializeRoundTrips) {
    std::mt19937 gen(3);
    const std::vector<std::string> names{"a", "b", "c"};
    for (int i = 0; i < 200; ++i) {
        std::string text = "arg(a). arg(b). arg(c).\n";
        std::set<std::pair<std::string, std::string>> seen;
        const int k = static_cast<int>(gen() % 6);
        for (int j = 0; j < k; ++j) {
            const auto& x = names[gen() % 3];
            const auto& y = names[gen() % 3];
            if (seen.emplace(x, y).second) text += "att(" + x + "," + y + ").  ";
        }
        if (gen() % 2) text += "inst(a, \"p -> ~q\").";
        const auto doc = parse_document(text);
        ASSERT_EQ(parse_document(serialize(doc)), doc) << text;
    }
    const auto higher = parse_document("arg(a). arg(b). wff(w, \"exists X (~R(X,X))\"). att(a, r(b,a)). att(w, a).");
    EXPECT_EQ(parse_document(serialize(higher)), higher);
    const auto adf = parse_document("arg(a). arg(b). acc(a, \"~b\"). acc(b, \"a | ~b\").");
    EXPECT_EQ(parse_document(serialize(adf)), adf);
}

TEST(Condition, DisjunctiveNormalForm) {
    const auto c = parse_condition("a & ~b | c");
    EXPECT_EQ(c.parents.size(), 3u);
    EXPECT_EQ(c.disjuncts, (std::vector<std::vector<Lit>>{{Lit::Pos, Lit::Neg, Lit::Absent}, {Lit::Absent, Lit::Absent, Lit::Pos}}));
    EXPECT_EQ(parse_condition("true").disjuncts.size(), 1u);
    EXPECT_TRUE(parse_condition("false").disjuncts.empty());
    EXPECT_TRUE(parse_condition("a & ~a").disjuncts.empty());
    EXPECT_EQ(parse_condition("a | a").disjuncts.size(), 1u);
    EXPECT_THROW(parse_condition("a -> b"), ContractError);
    EXPECT_THROW(parse_condition("~(a | b)"), ContractError);
    EXPECT_THROW(parse_condition("#n"), ContractError);
}

}  // namespace
