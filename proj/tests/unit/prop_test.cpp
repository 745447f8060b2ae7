#include <gtest/gtest.h>

#include <random>

#include "g3af/error.hpp"
#include "g3af/formula_text.hpp"
#include "g3af/prop.hpp"
#include "generators.hpp"

using namespace g3af;

namespace {

PropAssignment assign(const std::vector<std::string>& atoms, const std::vector<int>& vals) {
    PropAssignment h;
    for (std::size_t i = 0; i < atoms.size(); ++i) h[atoms[i]] = kThreeVals[vals[i]];
    return h;
}

TEST(ThreeVal, ProfilesAndWorlds) {
    EXPECT_EQ(profile(ThreeVal::FF), "(f,f)");
    EXPECT_EQ(profile(ThreeVal::FT), "(f,t)");
    EXPECT_EQ(profile(ThreeVal::TT), "(t,t)");
    EXPECT_FALSE(holds_at(ThreeVal::FT, World::t));
    EXPECT_TRUE(holds_at(ThreeVal::FT, World::s));
    bool ok = true;
    from_worlds(true, false, &ok);
    EXPECT_FALSE(ok);
}

TEST(PropFormula, FactoriesRejectBadAtoms) {
    EXPECT_THROW(PropFormula::atom("true"), ContractError);
    EXPECT_THROW(PropFormula::atom("a b"), ContractError);
    EXPECT_EQ(PropFormula::conj_all({}), PropFormula::top());
    EXPECT_EQ(PropFormula::disj_all({}), PropFormula::bot());
}

TEST(Kripke, NegationAndImplicationLookAtLaterWorlds) {
    const auto x = PropFormula::atom("x");
    const PropAssignment und{{"x", ThreeVal::FT}};
    EXPECT_EQ(value(PropFormula::neg(x), und), ThreeVal::FF);
    EXPECT_EQ(value(PropFormula::disj(x, PropFormula::neg(x)), und), ThreeVal::FT);
    EXPECT_EQ(value(PropFormula::n(), {}), ThreeVal::FT);
    EXPECT_EQ(value(parse_prop("~~x -> x"), und), ThreeVal::FT);
    EXPECT_THROW(value(x, {}), ContractError);
}

TEST(Kripke, AgreesWithGoedelTruthTables) {
    std::mt19937 gen(42);
    const std::vector<std::string> atoms{"p", "q", "r"};
    for (int i = 0; i < 400; ++i) {
        const auto f = oracle::random_prop(gen, 5, atoms);
        for (int code = 0; code < 27; ++code) {
            const std::vector<int> vals{code / 9, code / 3 % 3, code % 3};
            std::map<std::string, int> h;
            for (std::size_t k = 0; k < atoms.size(); ++k) h[atoms[k]] = vals[k];
            ASSERT_EQ(static_cast<int>(value(f, assign(atoms, vals))), oracle::godel_value(f, h)) << to_text(f);
        }
    }
}

TEST(Kripke, TruthPersists) {
    std::mt19937 gen(5);
    const std::vector<std::string> atoms{"p", "q"};
    for (int i = 0; i < 300; ++i) {
        const auto f = oracle::random_prop(gen, 5, atoms);
        for (int code = 0; code < 9; ++code) {
            const auto h = assign(atoms, {code / 3, code % 3});
            if (eval_world(World::t, f, h)) ASSERT_TRUE(eval_world(World::s, f, h)) << to_text(f);
        }
    }
}

TEST(Models, CompiledEnumerationMatchesKripke) {
    std::mt19937 gen(9);
    const std::vector<std::string> atoms{"p", "q", "r"};
    for (int i = 0; i < 200; ++i) {
        const std::vector<PropFormula> theory{oracle::random_prop(gen, 4, atoms), oracle::random_prop(gen, 4, atoms)};
        std::vector<PropAssignment> expected;
        for (int code = 0; code < 27; ++code) {
            const auto h = assign(atoms, {code / 9, code / 3 % 3, code % 3});
            if (eval_world(World::t, theory[0], h) && eval_world(World::t, theory[1], h)) expected.push_back(h);
        }
        ASSERT_EQ(enumerate_models(theory, atoms), expected);
    }
}

TEST(Models, OnlyUndecidedFalsifiesExcludedMiddle) {
    // q = (f,t) makes q | ~q fail at t, but it still holds at s, so its
    // negation has no model at all.
    const std::vector<PropFormula> theory{parse_prop("q | ~q -> false")};
    EXPECT_TRUE(enumerate_models(theory, {"q"}).empty());
    const auto lem = is_valid(parse_prop("q | ~q"));
    ASSERT_TRUE(lem.countermodel.has_value());
    EXPECT_EQ(*lem.countermodel, (PropAssignment{{"q", ThreeVal::FT}}));
}

TEST(Models, RejectsMissingOrRepeatedAtoms) {
    const std::vector<PropFormula> theory{parse_prop("p & q")};
    EXPECT_THROW(enumerate_models(theory, {"p"}), ContractError);
    EXPECT_THROW(enumerate_models(theory, {"p", "q", "p"}), ContractError);
}

TEST(Validity, AxiomsAndCountermodels) {
    EXPECT_TRUE(is_valid(parse_prop("(x -> y) | (y -> x)")).valid);
    EXPECT_TRUE(is_valid(parse_prop("x | (~y | (x -> y))")).valid);
    const auto lem = is_valid(parse_prop("x | ~x"));
    ASSERT_FALSE(lem.valid);
    EXPECT_EQ(*lem.countermodel, (PropAssignment{{"x", ThreeVal::FT}}));
    EXPECT_FALSE(is_valid(parse_prop("#n | ~#n")).valid);
    EXPECT_TRUE(is_valid(parse_prop("~x | ~~x")).valid);
    EXPECT_TRUE(is_valid(parse_prop("((x -> (((y -> z) -> y) -> y)) -> x) -> x")).valid);
    EXPECT_FALSE(is_valid(parse_prop("((x -> y) -> x) -> x")).valid);
}

TEST(Substitute, IsSimultaneous) {
    const auto f = parse_prop("x -> y");
    const auto g = substitute(f, {{"x", parse_prop("y")}, {"y", parse_prop("x")}});
    EXPECT_EQ(to_text(g), "y -> x");
    EXPECT_EQ(atoms(parse_prop("a & (b | #n)")), (std::set<std::string>{"a", "b"}));
    EXPECT_TRUE(contains_nconst(parse_prop("a & (b | #n)")));
}

}  // namespace
