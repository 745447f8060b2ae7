#include <gtest/gtest.h>

#include <random>

#include "g3af/error.hpp"
#include "g3af/formula_text.hpp"
#include "g3af/pred.hpp"
#include "generators.hpp"

using namespace g3af;

namespace {

std::vector<ThreeVal> decode(std::size_t code, std::size_t len) {
    std::vector<ThreeVal> out(len);
    for (std::size_t i = len; i-- > 0; code /= 3) out[i] = kThreeVals[code % 3];
    return out;
}

std::size_t pow3(std::size_t k) {
    std::size_t p = 1;
    while (k--) p *= 3;
    return p;
}

TEST(Term, NamingRules) {
    EXPECT_THROW(Term::var("x"), ContractError);
    EXPECT_THROW(Term::constant("X"), ContractError);
    EXPECT_THROW(Term::constant("forall"), ContractError);
    EXPECT_NO_THROW(Term::constant("a1"));
}

TEST(Domain, SortedAndValidated) {
    const Domain d({"b", "a"});
    EXPECT_EQ(d.element(0), "a");
    EXPECT_EQ(d.index_of("b"), 1u);
    EXPECT_THROW(Domain({}), ContractError);
    EXPECT_THROW(Domain({"a", "a"}), ContractError);
    EXPECT_THROW(Domain({"A"}), ContractError);
}

TEST(Quantifiers, UniversalLooksAheadExistentialStays) {
    const PredInterp m{Domain({"a", "b"}), {ThreeVal::TT, ThreeVal::FT}, std::vector<ThreeVal>(4, ThreeVal::FF)};
    EXPECT_EQ(pred_value(parse_pred("forall X (In(X))"), m), ThreeVal::FT);
    EXPECT_EQ(pred_value(parse_pred("exists X (In(X))"), m), ThreeVal::TT);
    EXPECT_EQ(pred_value(parse_pred("exists X (~In(X))"), m), ThreeVal::FF);
    EXPECT_EQ(pred_value(parse_pred("forall X (X = a | X = b)"), m), ThreeVal::TT);
    EXPECT_EQ(pred_value(parse_pred("a != b"), m), ThreeVal::TT);
    EXPECT_THROW(pred_value(parse_pred("In(X)"), m), ContractError);
    EXPECT_THROW(pred_value(parse_pred("In(c)"), m), ContractError);
}

TEST(Quantifiers, NoSelfAttackerOverOneElementIsNeverUndecided) {
    const auto phi = parse_pred("exists X (~R(X,X))");
    for (auto r : kThreeVals) {
        const PredInterp m{Domain({"a"}), {ThreeVal::FT}, {r}, false};
        EXPECT_NE(pred_value(phi, m), ThreeVal::FT);
    }
    const PredInterp und{Domain({"a"}), {ThreeVal::FT}, {ThreeVal::FT}, false};
    EXPECT_EQ(pred_value(phi, und), ThreeVal::FF);
}

TEST(Interps, CompiledEnumerationMatchesKripke) {
    std::mt19937 gen(17);
    const Domain d({"a", "b"});
    InterpOptions opts;
    opts.r_decided = false;
    for (int i = 0; i < 60; ++i) {
        const auto f = oracle::random_pred(gen, 4, {"a", "b"});
        std::vector<PredInterp> expected;
        for (std::size_t rc = 0; rc < pow3(4); ++rc) {
            for (std::size_t ic = 0; ic < pow3(2); ++ic) {
                PredInterp m{d, decode(ic, 2), decode(rc, 4), false};
                if (eval_pred(World::t, f, m)) expected.push_back(std::move(m));
            }
        }
        const std::vector<PredFormula> theory{f};
        const auto got = enumerate_interps(d, theory, opts);
        ASSERT_EQ(got.size(), expected.size()) << to_text(f);
        for (std::size_t k = 0; k < got.size(); ++k) {
            ASSERT_EQ(got[k].in_val, expected[k].in_val) << to_text(f);
            ASSERT_EQ(got[k].r_val, expected[k].r_val) << to_text(f);
        }
    }
}

TEST(Interps, TruthPersists) {
    std::mt19937 gen(23);
    const Domain d({"a", "b"});
    for (int i = 0; i < 100; ++i) {
        const auto f = oracle::random_pred(gen, 4, {"a", "b"});
        for (std::size_t rc = 0; rc < pow3(4); rc += 7) {
            for (std::size_t ic = 0; ic < pow3(2); ++ic) {
                const PredInterp m{d, decode(ic, 2), decode(rc, 4), false};
                if (eval_pred(World::t, f, m)) ASSERT_TRUE(eval_pred(World::s, f, m)) << to_text(f);
            }
        }
    }
}

TEST(Interps, PinnedAndSupportedRelations) {
    const Domain d({"a", "b"});
    const std::vector<PredFormula> theory{parse_pred("forall X (In(X) | ~In(X))")};
    InterpOptions pinned;
    pinned.fixed_r = std::set<std::pair<std::string, std::string>>{{"a", "b"}};
    const auto ms = enumerate_interps(d, theory, pinned);
    ASSERT_EQ(ms.size(), 4u);
    for (const auto& m : ms) {
        EXPECT_EQ(m.r(0, 1), ThreeVal::TT);
        EXPECT_EQ(m.r(1, 0), ThreeVal::FF);
    }
    InterpOptions support;
    support.r_decided = false;
    support.r_support = std::set<std::pair<std::string, std::string>>{{"b", "b"}};
    EXPECT_EQ(enumerate_interps(d, theory, support).size(), 12u);
    InterpOptions tiny;
    tiny.max_candidates = 10;
    EXPECT_THROW(enumerate_interps(d, theory, tiny), SearchSpaceError);
}

TEST(Meta, BuildersProduceTheDocumentedShapes) {
    EXPECT_EQ(to_text(build_meta(MetaKind::W, {"a"})), "forall X (X != a -> R(a,X))");
    EXPECT_EQ(to_text(build_meta(MetaKind::WAttacked, {"a"})), "forall X (X != a -> R(X,a))");
    EXPECT_EQ(to_text(build_meta(MetaKind::JSelf, {"a"})),
              "forall X ((R(a,X) -> R(X,X)) & (R(X,X) -> R(a,X)))");
    EXPECT_THROW(build_meta(MetaKind::J, {"a"}), ContractError);
}

TEST(Meta, AnnihilatorAttacksEverythingElse) {
    const Domain d({"a", "b", "c"});
    std::vector<ThreeVal> r(9, ThreeVal::FF);
    r[0 * 3 + 1] = r[0 * 3 + 2] = ThreeVal::TT;
    const PredInterp m{d, std::vector<ThreeVal>(3, ThreeVal::FF), r};
    EXPECT_EQ(pred_value(build_meta(MetaKind::W, {"a"}), m), ThreeVal::TT);
    EXPECT_EQ(pred_value(build_meta(MetaKind::W, {"b"}), m), ThreeVal::FF);
}

}  // namespace
