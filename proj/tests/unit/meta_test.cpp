#include <gtest/gtest.h>

#include "g3af/error.hpp"
#include "g3af/formula_text.hpp"
#include "g3af/meta.hpp"
#include "oracles.hpp"

using namespace g3af;

namespace {

HigherNetwork fig4() {
    HigherNetwork hn({"a", "b", "c", "d"});
    hn.add_r_atom("a", "b");
    hn.add_r_atom("a", "c");
    hn.add_r_atom("c", "d");
    hn.add_attack("a", "b");
    hn.add_attack("a", "c");
    hn.add_attack("c", "d");
    hn.add_attack("a", "r(c,d)");
    hn.add_attack("r(a,b)", "d");
    return hn;
}

TEST(HigherNetwork, UnitsAndErrors) {
    HigherNetwork hn({"b", "a"});
    hn.add_wff("phi", parse_pred("exists X (~R(X,X))"));
    hn.add_attack("a", "r(b,a)");
    ASSERT_EQ(hn.units().size(), 4u);
    EXPECT_EQ(hn.units()[0].name, "a");
    EXPECT_EQ(hn.units()[2].name, "phi");
    EXPECT_EQ(hn.units()[3].name, "r(b,a)");
    EXPECT_THROW(hn.add_wff("phi", parse_pred("In(a)")), ContractError);
    EXPECT_THROW(hn.add_wff("psi", parse_pred("In(X)")), ContractError);
    EXPECT_THROW(hn.add_wff("psi", parse_pred("In(z)")), ContractError);
    EXPECT_THROW(hn.add_attack("a", "nope"), ContractError);
    EXPECT_THROW(hn.add_attack("a", "r(b,a)"), ContractError);
    EXPECT_EQ(hn.add_r_atom("b", "a"), "r(b,a)");
}

TEST(HigherNetwork, AttackFormulas) {
    const auto hn = fig4();
    EXPECT_EQ(to_text(attack_formula(hn, 0, 1)), "In(a) & R(a,b) -> ~In(b)");
    EXPECT_EQ(to_text(attack_formula(hn, 0, *hn.unit_index("r(c,d)"))), "In(a) -> ~R(c,d)");
    EXPECT_EQ(to_text(attack_formula(hn, *hn.unit_index("r(a,b)"), 3)), "R(a,b) -> ~In(d)");
}

TEST(Star, DeclaredClausesForFourNodeNetwork) {
    const auto t = star_theory(fig4(), StarScope::DeclaredOnly);
    EXPECT_EQ(t.size(), 4u * 7u);
    EXPECT_EQ(to_text(*t.find("a1[d]")), "In(d) -> #n | (~In(c) | ~R(c,d)) & ~R(a,b)");
    EXPECT_EQ(to_text(*t.find("b2[d]")), "In(c) & R(c,d) | R(a,b) -> #n | ~In(d)");
    EXPECT_EQ(to_text(*t.find("a2[r(c,d)]")), "~In(a) -> #n | R(c,d)");
}

TEST(Star, AllNodesAddsJointAttacksFromEveryNode) {
    HigherNetwork hn({"a", "b"});
    const auto t = star_theory(hn);
    EXPECT_EQ(to_text(*t.find("a2[a]")), "(~In(a) | ~R(a,a)) & (~In(b) | ~R(b,a)) -> #n | In(a)");
}

TEST(Solve, FourNodeNetworkHasOneDeclaredModel) {
    const auto models = solve_higher(fig4(), {StarScope::DeclaredOnly, std::nullopt, 14});
    ASSERT_EQ(models.size(), 1u);
    const auto& m = models[0];
    // a in, so b, c and cRd are out; aRb is in and attacks d.
    EXPECT_EQ(m.interp.in_val, (std::vector<ThreeVal>{ThreeVal::TT, ThreeVal::FF, ThreeVal::FF, ThreeVal::FF}));
    EXPECT_EQ(m.interp.r(0, 1), ThreeVal::TT);
    EXPECT_EQ(m.interp.r(2, 3), ThreeVal::FF);
}

TEST(Solve, AaRaFixtureMatchesHandEnumeration) {
    HigherNetwork hn({"a"});
    hn.add_r_atom("a", "a");
    const auto models = solve_higher(hn);
    const auto hand = oracle::ara_models();
    ASSERT_EQ(hand, (std::vector<std::pair<int, int>>{{1, 2}}));
    ASSERT_EQ(models.size(), 1u);
    EXPECT_EQ(models[0].interp.in(0), ThreeVal::FT);
    EXPECT_EQ(models[0].interp.r(0, 0), ThreeVal::TT);
    EXPECT_EQ(models[0].statuses, (std::vector<std::pair<std::string, ThreeVal>>{{"r(a,a)", ThreeVal::TT}}));
}

TEST(Solve, AAttacksPhiHasNoModels) {
    HigherNetwork hn({"a"});
    hn.add_wff("phi", parse_pred("exists X (~R(X,X))"));
    hn.add_attack("a", "phi");
    EXPECT_TRUE(oracle::a_attacks_phi_models().empty());
    EXPECT_TRUE(solve_higher(hn).empty());
    // Reading only the declared attack, a is in and phi is out.
    const auto declared = solve_higher(hn, {StarScope::DeclaredOnly, std::nullopt, 14});
    ASSERT_EQ(declared.size(), 2u);
    for (const auto& m : declared) {
        EXPECT_EQ(m.interp.in(0), ThreeVal::TT);
        EXPECT_EQ(m.statuses[0].second, ThreeVal::FF);
    }
}

TEST(Solve, PinnedPlainNetworksGiveCompleteLabellings) {
    for (unsigned mask = 0; mask < 512; ++mask) {
        const auto f = oracle::to_framework(oracle::graph_from_mask(3, mask));
        HigherNetwork hn({"a", "b", "c"});
        std::set<std::pair<std::string, std::string>> pin;
        for (const auto& [x, y] : f.attack_pairs()) pin.emplace(x.str(), y.str());
        std::vector<Labelling> got;
        for (const auto& m : solve_higher(hn, {StarScope::AllNodes, pin, 14})) {
            Labelling l;
            for (auto v : m.interp.in_val) l.labels.push_back(v == ThreeVal::TT ? Label::In : v == ThreeVal::FF ? Label::Out : Label::Und);
            got.push_back(l);
        }
        std::sort(got.begin(), got.end());
        ASSERT_EQ(got, enumerate_complete(f)) << f.describe();
    }
}

TEST(Solve, GuardCountsUnknowns) {
    HigherNetwork hn({"a", "b", "c", "d"});
    EXPECT_EQ(count_unknowns(hn), 4u + 16u);
    EXPECT_EQ(count_unknowns(hn, {StarScope::AllNodes, std::set<std::pair<std::string, std::string>>{}, 14}), 4u);
    EXPECT_EQ(count_unknowns(fig4(), {StarScope::DeclaredOnly, std::nullopt, 14}), 4u + 3u + 3u);
    EXPECT_THROW(solve_higher(hn), SearchSpaceError);
}

}  // namespace
