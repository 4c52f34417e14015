#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "homcount/enumerate.hpp"
#include "homcount/model.hpp"
#include "oracles.hpp"

namespace homcount {
namespace {

MulticoloredModel model(unsigned k, Adjacency adj, std::vector<Point> points) {
  return {k, adj, std::move(points)};
}

TEST(ColorSet, Basics) {
  ColorSet s{3, 1};
  EXPECT_TRUE(s.contains(1));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.to_vector(), (std::vector<int>{1, 3}));
  EXPECT_EQ(s.max(), 3);
  EXPECT_TRUE(s.disjoint(ColorSet{2}));
  EXPECT_FALSE(s.disjoint(ColorSet{3, 4}));
  EXPECT_EQ(ColorSet::first(3), (ColorSet{1, 2, 3}));
  EXPECT_EQ(ColorSet::first(64).size(), 64u);
  EXPECT_THROW(ColorSet{0}, usage_error);
  EXPECT_THROW(ColorSet{65}, usage_error);
}

TEST(ColorSet, OrdersBySortedList) {
  EXPECT_LT((ColorSet{1}), (ColorSet{1, 2}));
  EXPECT_LT((ColorSet{1, 2}), (ColorSet{1, 3}));
  EXPECT_LT((ColorSet{1, 3}), (ColorSet{2}));
  EXPECT_LT((ColorSet{}), (ColorSet{1}));
}

TEST(ValidateModel, EmptyIsValid) {
  EXPECT_TRUE(validate_model(model(1, Adjacency::constrained, {})).ok());
  EXPECT_TRUE(validate_model(model(0, Adjacency::constrained, {})).ok());
}

TEST(ValidateModel, ConsecutiveRPoints) {
  const auto m = model(2, Adjacency::constrained, {RPoint{1}, RPoint{2}});
  const auto report = validate_model(m);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].axiom, "Tprime.3b");
  EXPECT_EQ(report.violations[0].positions, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(report.violations[0].message, "consecutive R-points at 0,1");
}

TEST(ValidateModel, UnconstrainedAllowsAdjacentR) {
  EXPECT_TRUE(validate_model(model(2, Adjacency::unconstrained, {RPoint{1}, RPoint{2}})).ok());
}

TEST(ValidateModel, ColorReuseAxioms) {
  EXPECT_TRUE(validate_model(model(2, Adjacency::unconstrained, {RPoint{1}, RPoint{1}})).has("Tprime.5"));
  EXPECT_TRUE(validate_model(model(2, Adjacency::constrained, {SPoint{{1}}, SPoint{{1, 2}}})).has("Tprime.6"));
  EXPECT_TRUE(validate_model(model(2, Adjacency::constrained, {RPoint{2}, SPoint{{1, 2}}})).has("Tprime.7"));
  EXPECT_TRUE(validate_model(model(2, Adjacency::constrained, {SPoint{{1, 2}}, RPoint{2}})).has("Tprime.7"));
}

TEST(ValidateModel, LanguageAndEmptyShuffle) {
  EXPECT_TRUE(validate_model(model(2, Adjacency::constrained, {RPoint{3}})).has("Tprime.lang"));
  EXPECT_TRUE(validate_model(model(2, Adjacency::constrained, {RPoint{0}})).has("Tprime.lang"));
  EXPECT_TRUE(validate_model(model(2, Adjacency::constrained, {SPoint{{}}})).has("Tprime.2"));
  EXPECT_TRUE(validate_model(model(2, Adjacency::constrained, {SPoint{{3}}})).has("Tprime.lang"));
}

TEST(ValidateModel, AgreesWithDirectCheckerOnSmallModels) {
  for (unsigned k = 0; k <= 3; ++k) {
    for (auto adj : {Adjacency::constrained, Adjacency::unconstrained}) {
      std::size_t checked = 0;
      oracle::for_each_sequence(
          k, 3,
          [&](const MulticoloredModel& m) {
            ++checked;
            ASSERT_EQ(validate_model(m).ok(), oracle::model_is_valid(m));
          },
          adj);
      EXPECT_GT(checked, 0u);
    }
  }
}

TEST(CanonicalCompare, Examples) {
  const auto empty = model(1, Adjacency::constrained, {});
  const auto r1 = model(1, Adjacency::constrained, {RPoint{1}});
  const auto s1 = model(1, Adjacency::constrained, {SPoint{{1}}});
  EXPECT_EQ(canonical_compare(empty, r1), std::strong_ordering::less);
  EXPECT_EQ(canonical_compare(r1, s1), std::strong_ordering::less);
  EXPECT_EQ(canonical_compare(s1, s1), std::strong_ordering::equal);
  EXPECT_EQ(canonical_compare(s1, r1), std::strong_ordering::greater);
}

TEST(CanonicalCompare, MismatchedKIsUsageError) {
  EXPECT_THROW(canonical_compare(model(1, Adjacency::constrained, {}), model(2, Adjacency::constrained, {})),
               usage_error);
}

TEST(CanonicalCompare, IsATotalOrderOnEnumeratedModels) {
  for (unsigned k = 0; k <= 3; ++k) {
    const auto ms = collect_models(k, Adjacency::unconstrained);
    for (const auto& a : ms) {
      for (const auto& b : ms) {
        const auto ab = canonical_compare(a, b);
        const auto ba = canonical_compare(b, a);
        ASSERT_EQ(ab == 0, a == b);
        ASSERT_EQ(ab < 0, ba > 0);
      }
    }
    // transitivity via sortedness: a strict total order sorts consistently
    auto sorted = ms;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return canonical_compare(a, b) < 0; });
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
      for (std::size_t j = i + 1; j < sorted.size(); ++j)
        ASSERT_TRUE(canonical_compare(sorted[i], sorted[j]) < 0);
  }
}

OrderingDescription desc(std::vector<Segment> segs) { return {std::move(segs)}; }

TEST(ValidateDescription, AdjacentFiniteBlocks) {
  const auto r = validate_description(
      desc({SingletonBlock{BlockKind::finite(1)}, SingletonBlock{BlockKind::finite(2)}}));
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violations[0].axiom, "T.4");
  EXPECT_EQ(r.violations[0].message, "adjacent finite blocks at 0,1");
}

TEST(ValidateDescription, OmegaStarBeforeOmega) {
  const auto r = validate_description(
      desc({SingletonBlock{BlockKind::omega_star()}, SingletonBlock{BlockKind::omega()}}));
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].axiom, "T.7");
}

TEST(ValidateDescription, OtherAdjacencyAxioms) {
  EXPECT_TRUE(validate_description(desc({SingletonBlock{BlockKind::finite(1)}, SingletonBlock{BlockKind::omega()}}))
                  .has("T.5"));
  EXPECT_TRUE(validate_description(desc({SingletonBlock{BlockKind::omega_star()}, SingletonBlock{BlockKind::finite(1)}}))
                  .has("T.6"));
  // omega then omega* is fine: the two blocks are separated by a gap
  EXPECT_TRUE(validate_description(desc({SingletonBlock{BlockKind::omega()}, SingletonBlock{BlockKind::omega_star()}}))
                  .ok());
  EXPECT_TRUE(validate_description(desc({SingletonBlock{BlockKind::zeta()}, SingletonBlock{BlockKind::finite(3)}}))
                  .ok());
}

TEST(ValidateDescription, ShuffleThenBlockIsFine) {
  EXPECT_TRUE(validate_description(desc({Shuffle{{BlockKind::finite(1), BlockKind::finite(3)}},
                                          SingletonBlock{BlockKind::finite(2)}}))
                  .ok());
}

TEST(ValidateDescription, KindsAreDisjoint) {
  EXPECT_TRUE(validate_description(desc({Shuffle{{BlockKind::finite(1)}}, SingletonBlock{BlockKind::finite(1)}}))
                  .has("T.disjoint"));
  EXPECT_TRUE(validate_description(desc({Shuffle{{BlockKind::omega()}}, Shuffle{{BlockKind::omega()}}}))
                  .has("T.disjoint"));
}

TEST(ValidateDescription, DegenerateSegments) {
  EXPECT_TRUE(validate_description(desc({Shuffle{}})).has("T.2"));
  EXPECT_TRUE(validate_description(desc({SingletonBlock{BlockKind::finite(0)}})).has("T.kind"));
  EXPECT_TRUE(validate_description(desc({})).ok());
}

TEST(ValidateColored, UniqueColorsNoAdjacencyRule) {
  EXPECT_TRUE(validate_colored({{ColorPoint{1}, ColorPoint{2}}}, 2).ok());
  EXPECT_TRUE(validate_colored({{ColorPoint{1}, ColorShuffle{{1, 2}}}}, 2).has("Tprime.unique"));
  EXPECT_TRUE(validate_colored({{ColorShuffle{}}}, 2).has("Tprime.2"));
  EXPECT_TRUE(validate_colored({{ColorPoint{3}}}, 2).has("Tprime.lang"));
}

}  // namespace
}  // namespace homcount
