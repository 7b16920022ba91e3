#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "skewpat/core.hpp"
#include "skewpat/enumerate.hpp"

using namespace skewpat;

TEST(Permutation, RejectsNonPermutations) {
  EXPECT_THROW(Permutation({1, 1}), DomainError);
  EXPECT_THROW(Permutation({0, 1}), DomainError);
  EXPECT_NO_THROW(Permutation({}));
}

TEST(Permutation, Operations) {
  Permutation w{4, 8, 3, 5, 1, 7, 2, 6};
  EXPECT_EQ(w.inverse().inverse(), w);
  EXPECT_EQ(w.reverse(), (Permutation{6, 2, 7, 1, 5, 3, 8, 4}));
  EXPECT_EQ(w.complement(), (Permutation{5, 1, 6, 4, 8, 2, 7, 3}));
  EXPECT_EQ(Permutation::standardize(std::vector<int>{40, 10, 25}), (Permutation{3, 1, 2}));
  EXPECT_EQ(w.to_string(), "48351726");
  EXPECT_EQ(Permutation::identity(10).to_string(), "1,2,3,4,5,6,7,8,9,10");
}

TEST(Containment, KnownExamples) {
  EXPECT_FALSE(contains_pattern(Permutation{4, 8, 9, 2, 6, 7, 1, 3, 5}, Permutation{1, 2, 3, 4}));
  EXPECT_TRUE(contains_pattern(Permutation{1}, Permutation{1}));
  Permutation w{4, 8, 3, 5, 1, 7, 2, 6};
  EXPECT_FALSE(contains_pattern(w, Permutation{1, 2, 3, 4}));
  EXPECT_TRUE(contains_pattern(w, Permutation{1, 2, 3}));
  EXPECT_TRUE(avoids(w, Permutation{1, 2, 3, 4}));
}

TEST(Containment, AgreesWithSubsequenceOracleOnS6) {
  std::vector<std::vector<int>> pats;
  for (int m = 1; m <= 4; ++m) {
    for (auto& p : oracle::permutations(m)) pats.push_back(p);
  }
  for (int n = 0; n <= 6; ++n) {
    for (auto& w : oracle::permutations(n)) {
      for (auto& p : pats) {
        ASSERT_EQ(contains_pattern(Permutation(w), Permutation(p)), oracle::contains(w, p));
      }
    }
  }
}

TEST(Statistics, LisAndDescents) {
  Permutation w{4, 8, 3, 5, 1, 7, 2, 6};
  EXPECT_EQ(lis_length(w), 3);
  EXPECT_EQ(lis_length(Permutation::identity(7)), 7);
  EXPECT_EQ(lis_length(Permutation{4, 8, 9, 2, 6, 7, 1, 3, 5}), 3);
  EXPECT_EQ(descent_set(Permutation{6, 8, 4, 7, 2, 5, 1, 3}), (std::vector<int>{2, 4, 6}));
  EXPECT_EQ(descent_set(w), (std::vector<int>{2, 4, 6}));
  EXPECT_TRUE(descent_set(Permutation{1, 2, 3}).empty());
  for (int n = 0; n <= 7; ++n) {
    for (auto& v : oracle::permutations(n)) {
      ASSERT_EQ(lis_length(Permutation(v)), oracle::lis(v));
    }
  }
}

TEST(Partition, Basics) {
  EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
  EXPECT_EQ(Partition({1}).conjugate(), Partition({1}));
  EXPECT_TRUE(Partition({2}).contains(Partition({1})));
  EXPECT_FALSE(Partition({2, 1}).contains(Partition({2, 2})));
  EXPECT_THROW(Partition({1, 2}), DomainError);
  EXPECT_EQ(Partition({3, 0, 0}), Partition({3}));
}

TEST(SkewShape, ValidatesContainment) {
  EXPECT_THROW(SkewShape(Partition{2}, Partition{3}), DomainError);
  SkewShape s(Partition{3, 2}, Partition{2});
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(s.to_string(), "3,2/2");
}

TEST(SkewTableau, RejectsNonStandardFillings) {
  SkewShape s(Partition{2, 2});
  EXPECT_THROW(SkewTableau(s, {{1, 3}, {2, 2}}), DomainError);
  EXPECT_THROW(SkewTableau(s, {{2, 1}, {3, 4}}), DomainError);
  EXPECT_THROW(SkewTableau(s, {{1, 4}, {2, 3}}), DomainError);
  EXPECT_NO_THROW(SkewTableau(s, {{1, 3}, {2, 4}}));
}

TEST(ReadingWord, WorkedExamples) {
  SkewTableau t = SkewTableau::straight({{1, 3, 5}, {2, 6, 7}, {4, 8, 9}});
  EXPECT_EQ(reading_word(t).to_string(), "489267135");
  SkewShape big = class_shape(ClassSpec(5, 3, 0));
  EXPECT_EQ(big, SkewShape(Partition{7, 6, 5, 4, 3}, Partition{4, 3, 2, 1}));
  SkewTableau t1(big, {{2, 3, 6}, {1, 5, 9}, {4, 11, 12}, {8, 13, 15}, {7, 10, 14}});
  EXPECT_EQ(reading_word(t1), (Permutation{7, 10, 14, 8, 13, 15, 4, 11, 12, 1, 5, 9, 2, 3, 6}));
  EXPECT_EQ(reading_word(SkewTableau::straight({{1}})), Permutation{1});
}

TEST(Symmetries, ConjugateAndRotateComplement) {
  SkewTableau single = SkewTableau::straight({{1}});
  EXPECT_EQ(rotate_complement(single), single);
  SkewTableau row = SkewTableau::straight({{1, 2}});
  EXPECT_EQ(rotate_complement(row).rows(), (Rows{{1, 2}}));
  for (int b = 1; b <= 6; ++b) {
    for (const SkewShape& s : basic_shapes(b)) {
      for (const auto& t : all_syt(s)) {
        Permutation w = reading_word(t);
        ASSERT_EQ(reading_word(rotate_complement(t)), w.reverse().complement());
        ASSERT_EQ(rotate_complement(rotate_complement(t)), t);
        ASSERT_EQ(conjugate(conjugate(t)), t);
        if (!s.has_square()) {
          ASSERT_EQ(reading_word(conjugate(t)), w.reverse()) << s.to_string();
        }
      }
    }
  }
}

TEST(ClassMembership, Examples) {
  Permutation big{7, 10, 14, 8, 13, 15, 4, 11, 12, 1, 5, 9, 2, 3, 6};
  EXPECT_TRUE(is_member(big, ClassSpec(5, 3, 0)));
  EXPECT_TRUE(is_member(Permutation::identity(4), ClassSpec(1, 4, 0)));
  EXPECT_TRUE(is_member(Permutation{2, 1, 3}, ClassSpec(1, 2, 1)));
  EXPECT_FALSE(is_member(Permutation{1, 2, 3}, ClassSpec(1, 2, 1)));
  EXPECT_THROW(ClassSpec(1, 2, 2), DomainError);
  EXPECT_THROW(is_member(Permutation{1, 2}, ClassSpec(1, 3, 0)), DomainError);
}

TEST(ClassMembership, MatchesDefinitionAndShape) {
  for (int k = 1; k <= 7; ++k) {
    for (int n = 1; n * k <= 7; ++n) {
      for (int r = 0; r < k && n * k + r <= 7; ++r) {
        ClassSpec c(n, k, r);
        std::set<std::vector<int>> direct;
        for (auto& w : oracle::permutations(c.length())) {
          bool member = oracle::in_class(w, n, k, r);
          ASSERT_EQ(is_member(Permutation(w), c), member) << c.to_string();
          if (member) direct.insert(w);
        }
        std::set<std::vector<int>> from_shape;
        for (auto& w : oracle::syt_words(class_shape(c))) from_shape.insert(w);
        ASSERT_EQ(direct, from_shape) << c.to_string();
      }
    }
  }
}

TEST(ClassMembership, AlternatingCases) {
  // (2,2,1): down-up words of length 5.
  std::set<std::vector<int>> expect;
  for (auto& w : oracle::permutations(5)) {
    if (w[0] > w[1] && w[1] < w[2] && w[2] > w[3] && w[3] < w[4]) expect.insert(w);
  }
  auto words = oracle::syt_words(class_shape(ClassSpec(2, 2, 1)));
  EXPECT_EQ(std::set<std::vector<int>>(words.begin(), words.end()), expect);
  EXPECT_EQ(expect.size(), 16u);
}

// Membership plus 1..k+2 avoidance is the same as avoidance plus descents
// only at multiples of k.
TEST(ClassMembership, DescentDescription) {
  for (int k = 1; k <= 4; ++k) {
    for (int n = 1; n * k <= 7; ++n) {
      ClassSpec c(n, k, 0);
      for (auto& v : oracle::permutations(n * k)) {
        if (oracle::contains(v, oracle::increasing(k + 2))) continue;
        bool desc = true;
        for (int d : descent_set(Permutation(v))) desc = desc && d % k == 0;
        ASSERT_EQ(desc, is_member(Permutation(v), c));
      }
    }
  }
}

TEST(Normalize, ExampleAndIdempotence) {
  SkewShape s(Partition{5, 2, 2, 1}, Partition{3, 2, 1});
  EXPECT_FALSE(s.is_basic());
  EXPECT_EQ(normalize_shape(s), SkewShape(Partition{4, 2, 1}, Partition{2, 1}));
  for (int b = 1; b <= 7; ++b) {
    for (const SkewShape& t : basic_shapes(b)) {
      ASSERT_TRUE(t.is_basic());
      ASSERT_EQ(normalize_shape(t), t);
      ASSERT_TRUE(t.rotated().is_basic()) << t.to_string();
      ASSERT_TRUE(t.conjugate().is_basic()) << t.to_string();
    }
  }
}

TEST(Normalize, KeepsReadingWords) {
  for (int a = 1; a <= 5; ++a) {
    for (int b = 0; b <= a; ++b) {
      for (int c = 0; c <= b; ++c) {
        for (int x = 0; x <= a; ++x) {
          for (int y = 0; y <= std::min(x, b); ++y) {
            for (int z = 0; z <= std::min(y, c); ++z) {
              SkewShape s(Partition{a, b, c}, Partition{x, y, z});
              if (s.empty() || s.size() > 7) continue;
              SkewShape ns = normalize_shape(s);
              ASSERT_TRUE(ns.is_basic());
              ASSERT_EQ(oracle::syt_words(s), oracle::syt_words(ns)) << s.to_string();
            }
          }
        }
      }
    }
  }
}

TEST(Involutions, S3) {
  std::vector<Permutation> s3;
  for (auto& v : oracle::permutations(3)) s3.emplace_back(v);
  auto inv = involutions_in(s3);
  EXPECT_EQ(inv.size(), 4u);
  EXPECT_EQ(involutions_in(std::vector<Permutation>{Permutation::identity(3)}).size(), 1u);
}
