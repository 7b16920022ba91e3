#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "oracles.hpp"
#include "skewpat/counting.hpp"
#include "skewpat/enumerate.hpp"

using namespace skewpat;

namespace {

std::vector<std::vector<int>> words_of(const SkewShape& s) {
  std::vector<std::vector<int>> out;
  for_each_syt_word(s, [&](std::span<const int> w) { out.emplace_back(w.begin(), w.end()); }, 64);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Syt, SmallShapes) {
  auto one = all_syt(SkewShape(Partition{2}));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].rows(), (Rows{{1, 2}}));
  SkewShape s(Partition{3, 2}, Partition{2});
  auto words = words_of(s);
  EXPECT_EQ(words, (std::vector<std::vector<int>>{{1, 2, 3}, {1, 3, 2}, {2, 3, 1}}));
  EXPECT_EQ(all_syt(SkewShape(Partition{2, 2})).size(), 2u);
}

TEST(Syt, LexicographicOrder) {
  auto tabs = all_syt(SkewShape(Partition{3, 2, 1}));
  EXPECT_EQ(tabs.size(), 16u);
  for (std::size_t i = 1; i < tabs.size(); ++i) EXPECT_LT(tabs[i - 1].rows(), tabs[i].rows());
}

TEST(Syt, AgreesWithFillingOracle) {
  for (int b = 1; b <= 7; ++b) {
    for (const SkewShape& s : basic_shapes(b)) {
      ASSERT_EQ(words_of(s), oracle::syt_words(s)) << s.to_string();
    }
  }
}

TEST(Syt, BoundIsEnforced) {
  SkewShape big(Partition{9, 9});
  EXPECT_THROW(all_syt(big), BoundExceeded);
  EXPECT_THROW(all_syt(SkewShape(Partition{3, 3}), 5), BoundExceeded);
  EXPECT_NO_THROW(all_syt(SkewShape(Partition{3, 3}), 6));
}

TEST(Syt, EnvironmentBound) {
  ::setenv("SKEWPAT_MAX_BOXES", "5", 1);
  EXPECT_EQ(max_boxes_from_env(), 5);
  ::setenv("SKEWPAT_MAX_BOXES", "x", 1);
  EXPECT_THROW(max_boxes_from_env(), DomainError);
  ::unsetenv("SKEWPAT_MAX_BOXES");
  EXPECT_EQ(max_boxes_from_env(), kDefaultMaxBoxes);
}

TEST(Classes, Examples) {
  EXPECT_EQ(all_class(ClassSpec(1, 2, 0)), (std::vector<Permutation>{{1, 2}}));
  auto a4 = all_class(ClassSpec(2, 2, 0));
  std::sort(a4.begin(), a4.end());
  EXPECT_EQ(a4, (std::vector<Permutation>{
                    {1, 3, 2, 4}, {1, 4, 2, 3}, {2, 3, 1, 4}, {2, 4, 1, 3}, {3, 4, 1, 2}}));
  auto a3 = all_class(ClassSpec(1, 2, 1));
  std::sort(a3.begin(), a3.end());
  EXPECT_EQ(a3, (std::vector<Permutation>{{2, 1, 3}, {3, 1, 2}}));
}

TEST(Classes, ShapeWordsEqualFilter) {
  for (int k = 1; k <= 8; ++k) {
    for (int n = 1; n * k <= 8; ++n) {
      for (int r = 0; r < k && n * k + r <= 8; ++r) {
        ClassSpec c(n, k, r);
        auto a = all_class(c), b = filter_class(c);
        std::sort(a.begin(), a.end());
        ASSERT_EQ(a, b) << c.to_string();
      }
    }
  }
}

TEST(Subpartitions, Counts) {
  EXPECT_EQ(subpartitions(Partition{}).size(), 1u);
  EXPECT_EQ(subpartitions(Partition{2, 1}).size(), 5u);
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> stair;
    for (int i = n - 1; i >= 1; --i) stair.push_back(i);
    auto subs = subpartitions(Partition(stair));
    EXPECT_EQ(BigCount(subs.size()), catalan(n));
    std::set<Partition> distinct(subs.begin(), subs.end());
    EXPECT_EQ(distinct.size(), subs.size());
  }
}

TEST(BasicShapes, AllBasicAndDistinct) {
  for (int b = 1; b <= 7; ++b) {
    auto shapes = basic_shapes(b);
    std::set<SkewShape> distinct(shapes.begin(), shapes.end());
    EXPECT_EQ(distinct.size(), shapes.size());
    for (const auto& s : shapes) {
      EXPECT_TRUE(s.is_basic());
      EXPECT_EQ(s.size(), b);
    }
  }
  // Rows of lengths (1) or (2); (1,1) with overlap 0 or 1.
  EXPECT_EQ(basic_shapes(2).size(), 3u);
}

TEST(CountAvoiders, Examples) {
  SkewShape s(Partition{3, 2}, Partition{2});
  EXPECT_EQ(count_avoiders(s, Permutation{2, 1, 3}), 3);
  EXPECT_EQ(count_avoiders(s, Permutation{1}), 0);
  EXPECT_EQ(count_avoiders(SkewShape(Partition{3, 3, 3}), Permutation{2, 1, 3}), 1);
  EXPECT_EQ(count_class_avoiders(ClassSpec(2, 2, 0), Permutation{1, 2, 3, 4}), 5);
  EXPECT_EQ(count_class_avoiders(ClassSpec(3, 2, 0), Permutation{1, 2, 3, 4}), 42);
  for (int k = 1; k <= 4; ++k) {
    for (int n = 1; n * k <= 8; ++n) {
      EXPECT_EQ(count_class_avoiders(ClassSpec(n, k, 0), Permutation::identity(k)), 0);
    }
  }
}
