#include <gtest/gtest.h>

#include <random>

#include "g3af/aaf.hpp"
#include "g3af/error.hpp"
#include "g3af/formula_text.hpp"
#include "oracles.hpp"

using namespace g3af;

namespace {

std::vector<ArgumentId> ids(std::initializer_list<const char*> names) {
    std::vector<ArgumentId> out;
    for (const auto* n : names) out.emplace_back(n);
    return out;
}

std::vector<Labelling> projected(const Encoding& enc, const std::vector<Labelling>& labs) {
    std::vector<Labelling> out;
    for (const auto& l : labs) out.push_back(project(enc, l));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

TEST(Classical, EqualityAndRelation) {
    const Domain d({"a", "b"});
    const Relation r{{"a", "b"}};
    EXPECT_TRUE(classical_eval(parse_pred("R(a,b) & ~R(b,a)"), d, r));
    EXPECT_TRUE(classical_eval(parse_pred("exists X (forall Y (~R(Y,X)))"), d, r));
    EXPECT_FALSE(classical_eval(parse_pred("forall X (exists Y (R(X,Y)))"), d, r));
    // Classical: excluded middle holds.
    EXPECT_TRUE(classical_eval(parse_pred("forall X Y (R(X,Y) | ~R(X,Y))"), d, r));
    EXPECT_THROW(classical_eval(parse_pred("In(a)"), d, r), ContractError);
    EXPECT_THROW(classical_eval(parse_pred("R(a,a) | #n"), d, r), ContractError);
}

TEST(Axiomatic, ConstructionChecks) {
    EXPECT_THROW(AxiomaticFrame(ids({"a"}), parse_pred("R(a,b)")), ContractError);
    EXPECT_THROW(AxiomaticFrame(ids({"a"}), parse_pred("R(X,a)")), ContractError);
    EXPECT_NO_THROW(AxiomaticFrame(ids({"a"}), parse_pred("true")));
}

TEST(Axiomatic, TwoArgumentsWithAnUnattackedOne) {
    const AxiomaticFrame af(ids({"a", "b"}),
                            parse_pred("exists X (forall Y (~R(Y,X))) & ~R(a,a) & ~R(b,b)"));
    const auto ms = aaf_extensions(af);
    ASSERT_EQ(ms.size(), 3u);
    EXPECT_TRUE(ms[0].r.empty());
    EXPECT_EQ(ms[0].labellings.size(), 1u);
    EXPECT_EQ(ms[1].r, (Relation{{"a", "b"}}));
    EXPECT_EQ(format_labelling(ms[1].framework, ms[1].labellings.at(0)), "a:in b:out");
    EXPECT_EQ(ms[2].r, (Relation{{"b", "a"}}));
}

TEST(Axiomatic, TrueAdmitsEveryRelation) {
    const AxiomaticFrame af(ids({"a", "b"}), parse_pred("true"));
    const auto ms = aaf_extensions(af);
    ASSERT_EQ(ms.size(), 16u);
    for (const auto& m : ms) EXPECT_EQ(m.labellings, enumerate_complete(m.framework));
    const AxiomaticFrame big(ids({"a", "b", "c", "d", "e"}), parse_pred("true"));
    EXPECT_THROW(aaf_extensions(big), SearchSpaceError);
}

TEST(Disjunctive, EncodesOneOfTheTargets) {
    const DisjunctiveNet dn{ids({"a", "b", "c"}), {{ArgumentId("a"), {ArgumentId("b"), ArgumentId("c")}}}};
    const auto ms = aaf_extensions(encode_disjunctive(dn));
    ASSERT_EQ(ms.size(), 3u);
    EXPECT_EQ(ms[0].r, (Relation{{"a", "b"}}));
    EXPECT_EQ(ms[1].r, (Relation{{"a", "b"}, {"a", "c"}}));
    EXPECT_EQ(ms[2].r, (Relation{{"a", "c"}}));
    EXPECT_THROW(encode_disjunctive({ids({"a"}), {{ArgumentId("a"), {}}}}), ContractError);
    EXPECT_THROW(encode_disjunctive({ids({"a"}), {{ArgumentId("a"), {ArgumentId("q")}}}}), ContractError);
}

TEST(Conjunctive, JointAttackNeedsEveryAttacker) {
    const ConjunctiveNet cn{ids({"a", "b", "c"}), {{{ArgumentId("a"), ArgumentId("b")}, ArgumentId("c")}}};
    const auto enc = encode_conjunctive(cn);
    EXPECT_EQ(enc.projection, (std::set<ArgumentId>{ArgumentId("a"), ArgumentId("b"), ArgumentId("c")}));
    EXPECT_GT(enc.framework.arguments().size(), 3u);
    const auto labs = projected(enc, enumerate_complete(enc.framework));
    ASSERT_EQ(labs.size(), 1u);
    const auto sub = restrict(enc.framework, enc.projection);
    EXPECT_EQ(format_labelling(sub, labs[0]), "a:in b:in c:out");

    // With a attacked by itself, the joint attack cannot put c out.
    const ConjunctiveNet cn2{ids({"a", "b", "c"}),
                             {{{ArgumentId("a")}, ArgumentId("a")},
                              {{ArgumentId("a"), ArgumentId("b")}, ArgumentId("c")}}};
    const auto enc2 = encode_conjunctive(cn2);
    const auto labs2 = projected(enc2, enumerate_complete(enc2.framework));
    ASSERT_EQ(labs2.size(), 1u);
    EXPECT_EQ(format_labelling(restrict(enc2.framework, enc2.projection), labs2[0]), "a:und b:in c:und");
    EXPECT_THROW(encode_conjunctive({ids({"a"}), {{{ArgumentId("a")}, ArgumentId("a")}, {{ArgumentId("a")}, ArgumentId("a")}}}),
                 ContractError);
}

AdfNet fig12() {
    AdfNet adf{ids({"a", "b", "c", "x"}), {}};
    adf.conditions[ArgumentId("x")] =
        AdfCondition{ids({"a", "b", "c"}), {{Lit::Pos, Lit::Neg, Lit::Absent}, {Lit::Absent, Lit::Absent, Lit::Pos}}};
    return adf;
}

std::vector<std::vector<bool>> stable_as_bools(const AdfNet& adf) {
    const auto enc = encode_adf(adf);
    std::vector<std::vector<bool>> out;
    for (const auto& l : projected(enc, enumerate_stable(enc.framework))) {
        std::vector<bool> row;
        for (auto v : l.labels) row.push_back(v == Label::In);
        out.push_back(row);
    }
    std::sort(out.begin(), out.end());
    return out;
}

TEST(Adf, MixedConditionInstance) {
    const auto adf = fig12();
    EXPECT_TRUE(adf_condition_holds(adf, ArgumentId("x"), {true, false, false, false}));
    EXPECT_FALSE(adf_condition_holds(adf, ArgumentId("x"), {true, true, false, false}));
    const auto models = adf_two_valued_models(adf);
    ASSERT_EQ(models, (std::vector<std::vector<bool>>{{true, true, true, true}}));
    EXPECT_EQ(stable_as_bools(adf), models);
}

TEST(Adf, RandomNetworksOverThreeArguments) {
    std::mt19937 gen(77);
    const auto s = ids({"a", "b", "c"});
    for (int i = 0; i < 300; ++i) {
        AdfNet adf{s, {}};
        for (const auto& x : s) {
            AdfCondition c{s, {}};
            const int k = static_cast<int>(gen() % 3);
            for (int j = 0; j < k; ++j) {
                std::vector<Lit> row;
                for (std::size_t p = 0; p < s.size(); ++p) row.push_back(static_cast<Lit>(gen() % 3));
                if (std::find(c.disjuncts.begin(), c.disjuncts.end(), row) == c.disjuncts.end()) c.disjuncts.push_back(row);
            }
            adf.conditions[x] = c;
        }
        auto models = adf_two_valued_models(adf);
        std::sort(models.begin(), models.end());
        ASSERT_EQ(stable_as_bools(adf), models) << "sample " << i;
    }
}

TEST(Adf, Checks) {
    AdfNet bad{ids({"a"}), {}};
    bad.conditions[ArgumentId("a")] = AdfCondition{ids({"a"}), {{Lit::Pos, Lit::Neg}}};
    EXPECT_THROW(check_adf(bad), ContractError);
    bad.conditions[ArgumentId("a")] = AdfCondition{ids({"q"}), {{Lit::Pos}}};
    EXPECT_THROW(check_adf(bad), ContractError);
    bad.conditions[ArgumentId("a")] = AdfCondition{ids({"a"}), {{Lit::Pos}, {Lit::Pos}}};
    EXPECT_THROW(check_adf(bad), ContractError);
}

}  // namespace
