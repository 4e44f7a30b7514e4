#include <gtest/gtest.h>

#include "support.hpp"

using namespace opplab;
using namespace opplab::testing;

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation({1, 1, 2}), InputError);
  EXPECT_THROW(Permutation({0, 1}), InputError);
  EXPECT_THROW(Permutation(std::vector<int>{}), InputError);
  EXPECT_THROW(parse_permutation("12a"), InputError);
}

TEST(Permutation, ParsesBothSyntaxes) {
  EXPECT_EQ(perm("2413").image(), (std::vector<int>{2, 4, 1, 3}));
  EXPECT_EQ(parse_permutation("10,9,8,7,6,5,4,3,2,1"), longest_element(10));
  EXPECT_EQ(longest_element(10).to_string(), "10,9,8,7,6,5,4,3,2,1");
}

TEST(Permutation, ComposesRightToLeft) {
  // w * s_i swaps positions i and i+1 of w.
  EXPECT_EQ(perm("231") * Permutation::simple(1, 3), perm("321"));
  EXPECT_EQ(Permutation::simple(1, 3) * perm("231"), perm("132"));
  EXPECT_THROW(perm("12") * perm("123"), InputError);
}

TEST(Length, Examples) {
  EXPECT_EQ(length(Permutation::identity(3)), 0);
  EXPECT_EQ(length(perm("321")), 3);
  EXPECT_EQ(length(perm("2413")), 3);
}

TEST(BruhatLeq, Examples) {
  EXPECT_TRUE(bruhat_leq(perm("213"), perm("231")));
  for (const auto& w : all_permutations(4)) EXPECT_TRUE(bruhat_leq(Permutation::identity(4), w));
  EXPECT_TRUE(bruhat_leq(perm("2413"), perm("3412")));
  EXPECT_FALSE(bruhat_leq(perm("213"), perm("132")));
  EXPECT_THROW(bruhat_leq(perm("12"), perm("123")), InputError);
}

TEST(BruhatLeq, MatchesSubwordOracleExhaustivelyOnS3AndS4) {
  for (int n : {3, 4}) {
    const auto perms = all_permutations(n);
    for (const auto& v : perms)
      for (const auto& w : perms) EXPECT_EQ(bruhat_leq(v, w), subword_bruhat_leq(v, w)) << v.to_string() << " " << w.to_string();
  }
}

TEST(BruhatLeq, MatchesSubwordOracleOnRandomS5Pairs) {
  Rng rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto v = rng.permutation(5);
    const auto w = rng.permutation(5);
    EXPECT_EQ(bruhat_leq(v, w), subword_bruhat_leq(v, w)) << v.to_string() << " " << w.to_string();
  }
}

TEST(BruhatInterval, RejectsEmptyIntervals) {
  EXPECT_THROW(iv("231", "132"), InputError);
  EXPECT_THROW(BruhatInterval(perm("12"), perm("123")), InputError);
}

TEST(IntervalElements, Examples) {
  const std::vector<Permutation> expected{perm("2314"), perm("2413"), perm("3214"), perm("3412")};
  EXPECT_EQ(interval_elements(iv("2314", "3412")), expected);
  EXPECT_EQ(interval_elements(iv("231", "231")), std::vector<Permutation>{perm("231")});
  EXPECT_EQ(interval_elements(iv("132", "231")), (std::vector<Permutation>{perm("132"), perm("231")}));
}

TEST(IntervalElements, MembershipIsTwoComparisonsOnS4) {
  const auto perms = all_permutations(4);
  for (const auto& i : all_intervals(4)) {
    const auto elements = interval_elements(i);
    for (const auto& x : perms) {
      const bool listed = std::find(elements.begin(), elements.end(), x) != elements.end();
      EXPECT_EQ(listed, bruhat_leq(i.v(), x) && bruhat_leq(x, i.w()));
    }
  }
}

TEST(IntervalsIntersect, Examples) {
  EXPECT_FALSE(intervals_intersect(iv("132", "231"), iv("213", "312")));
  for (const auto& i : all_intervals(3)) {
    EXPECT_TRUE(intervals_intersect(i, i));
    EXPECT_TRUE(intervals_intersect(iv("123", "321"), i));
  }
}

TEST(IntervalContains, Examples) {
  for (const auto& i : all_intervals(3)) {
    EXPECT_TRUE(interval_contains(iv("123", "321"), i));
    EXPECT_TRUE(interval_contains(i, i));
  }
  EXPECT_FALSE(interval_contains(iv("132", "231"), iv("213", "312")));
}

TEST(IntervalContains, MatchesElementSubsetOnS3) {
  const auto intervals = all_intervals(3);
  for (const auto& a : intervals)
    for (const auto& b : intervals) {
      const auto ea = interval_elements(a);
      const auto eb = interval_elements(b);
      const bool subset = std::includes(ea.begin(), ea.end(), eb.begin(), eb.end());
      EXPECT_EQ(interval_contains(a, b), subset);
    }
}

TEST(IntervalPerp, Examples) {
  EXPECT_EQ(interval_perp(iv("132", "312")), iv("213", "231"));
  EXPECT_EQ(interval_perp(iv("123", "321")), iv("123", "321"));
  const auto w0 = longest_element(3);
  EXPECT_EQ(interval_perp(iv("231", "231")), BruhatInterval(perm("231") * w0, perm("231") * w0));
}

TEST(IntervalPerp, IsAnInvolutionOnS4) {
  for (const auto& i : all_intervals(4)) EXPECT_EQ(interval_perp(interval_perp(i)), i);
}

TEST(DemazureProduct, Examples) {
  for (const auto& w : all_permutations(3)) EXPECT_EQ(demazure_product(Permutation::identity(3), w), w);
  const auto s1 = Permutation::simple(1, 3);
  EXPECT_EQ(demazure_product(s1, s1), s1);
  EXPECT_EQ(demazure_product(perm("231"), perm("312")), perm("321"));
  EXPECT_EQ(brute_demazure(perm("231"), perm("312")), perm("321"));
}

TEST(DemazureProduct, MatchesBruteForceOnS3) {
  const auto perms = all_permutations(3);
  for (const auto& v : perms)
    for (const auto& w : perms) EXPECT_EQ(demazure_product(v, w), brute_demazure(v, w));
}

TEST(DemazureProduct, AssociativeAndAboveBothFactorsOnS3) {
  const auto perms = all_permutations(3);
  for (const auto& a : perms)
    for (const auto& b : perms) {
      const auto ab = demazure_product(a, b);
      EXPECT_TRUE(bruhat_leq(a, ab));
      EXPECT_TRUE(bruhat_leq(b, ab));
      for (const auto& c : perms) EXPECT_EQ(demazure_product(ab, c), demazure_product(a, demazure_product(b, c)));
    }
}

TEST(LongestElement, Examples) {
  EXPECT_EQ(longest_element(3), perm("321"));
  EXPECT_EQ(longest_element(1), perm("1"));
  EXPECT_EQ(star_involution(1, 4), 3);
  EXPECT_THROW(star_involution(4, 4), InputError);
  EXPECT_THROW(longest_element(0), InputError);
}

TEST(ReducedWord, Examples) {
  EXPECT_TRUE(reduced_word(Permutation::identity(3)).empty());
  EXPECT_EQ(reduced_word(perm("321")), (std::vector<int>{1, 2, 1}));
  for (int i = 1; i < 4; ++i) EXPECT_EQ(reduced_word(Permutation::simple(i, 4)), std::vector<int>{i});
}

TEST(ReducedWord, IsReducedAndMultipliesBackOnS4AndS5) {
  for (int n : {4, 5})
    for (const auto& w : all_permutations(n)) {
      const auto word = reduced_word(w);
      EXPECT_EQ(static_cast<int>(word.size()), length(w));
      EXPECT_EQ(word_product(word, n), w);
    }
}
