#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "skewpat/bijections.hpp"
#include "skewpat/counting.hpp"
#include "skewpat/enumerate.hpp"

using namespace skewpat;

namespace {

std::vector<Permutation> avoiders(const ClassSpec& c, int len) {
  std::vector<Permutation> out;
  for (auto& v : oracle::permutations(c.length())) {
    if (oracle::in_class(v, c.n, c.k, c.r) && !oracle::contains(v, oracle::increasing(len))) {
      out.emplace_back(v);
    }
  }
  return out;
}

template <class F>
void for_classes(int max_len, F&& f) {
  for (int k = 1; k <= max_len; ++k) {
    for (int n = 1; n * k <= max_len; ++n) {
      for (int r = 0; r < k && n * k + r <= max_len; ++r) f(ClassSpec(n, k, r));
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Rectangles
// ---------------------------------------------------------------------------

TEST(Rect, Examples) {
  EXPECT_EQ(rect_bijection(Permutation{4, 8, 9, 2, 6, 7, 1, 3, 5}, ClassSpec(3, 3, 0)).rows(),
            (Rows{{1, 3, 5}, {2, 6, 7}, {4, 8, 9}}));
  EXPECT_EQ(rect_bijection(Permutation{6, 8, 4, 7, 2, 5, 1, 3}, ClassSpec(4, 2, 0)).rows(),
            (Rows{{1, 3}, {2, 5}, {4, 7}, {6, 8}}));
  EXPECT_EQ(rect_bijection(Permutation{1, 2, 3}, ClassSpec(1, 3, 0)).rows(), (Rows{{1, 2, 3}}));
  EXPECT_THROW(rect_bijection(Permutation{1, 3, 2, 4}, ClassSpec(2, 2, 0)), PatternError);
}

TEST(Rect, RoundTripsBothWays) {
  for_classes(8, [](const ClassSpec& c) {
    std::set<Rows> images;
    auto ws = avoiders(c, c.k + 1);
    for (const auto& w : ws) {
      SkewTableau t = rect_bijection(w, c);
      ASSERT_EQ(rect_inverse(t, c), w);
      images.insert(t.rows());
    }
    auto tabs = all_syt(SkewShape(rect_target_shape(c)));
    EXPECT_EQ(images.size(), tabs.size()) << c.to_string();
    for (const auto& t : tabs) ASSERT_EQ(rect_bijection(rect_inverse(t, c), c), t);
  });
}

// ---------------------------------------------------------------------------
// Good tableaux
// ---------------------------------------------------------------------------

TEST(Good, WorkedExample) {
  Permutation w{4, 8, 3, 5, 1, 7, 2, 6};
  ClassSpec c(4, 2, 0);
  GoodTableau g = good_of_perm(w, c);
  EXPECT_EQ(g.rows, (Rows{{1, 2, 6}, {1, 4, 5}, {1, 3, 5}, {1, 2, 3}}));
  EXPECT_TRUE(is_good(g, 2));
  EXPECT_EQ(perm_of_good(g, c), w);
  SkewTableau t = SkewTableau::straight({{1, 2, 6}, {3, 7, 8}, {4, 9, 11}, {5, 10, 12}});
  EXPECT_EQ(syt_to_good(t), g);
  EXPECT_EQ(good_to_syt(g), t);
  EXPECT_EQ(k2_bijection(w, c), t);
  EXPECT_EQ(k2_inverse(t, c), w);
}

TEST(Good, SingleBlock) {
  for (int k = 1; k <= 5; ++k) {
    ClassSpec c(1, k, 0);
    Permutation id = Permutation::identity(k);
    GoodTableau g = good_of_perm(id, c);
    Permutation top = Permutation::identity(k + 1);
    EXPECT_EQ(g.rows, (Rows{std::vector<int>(top.begin(), top.end())}));
    EXPECT_EQ(perm_of_good(g, c), id);
    EXPECT_EQ(good_to_syt(g).rows(), g.rows);
    EXPECT_EQ(syt_to_good(SkewTableau::straight(g.rows)), g);
  }
}

TEST(Good, Violations) {
  GoodTableau bad{{{1, 2}, {1, 3}}};
  EXPECT_FALSE(is_good(bad, 1));  // last row exceeds its bound
  EXPECT_FALSE(is_good(GoodTableau{{{1, 4}, {1, 2}, {1, 2}}}, 1));  // too large for the entry below
  GoodTableau ok{{{1, 2}, {1, 2}}};
  EXPECT_TRUE(is_good(ok, 1));
  EXPECT_THROW(perm_of_good(bad, ClassSpec(2, 1, 0)), DomainError);
  EXPECT_THROW(good_of_perm(Permutation{1, 2, 3}, ClassSpec(3, 1, 0)), PatternError);
}

TEST(Good, RoundTripsAndAxioms) {
  for_classes(8, [](const ClassSpec& c) {
    std::set<Rows> images;
    for (const auto& w : avoiders(c, c.k + 2)) {
      GoodTableau g = good_of_perm(w, c);
      if (c.r == 0) {
        ASSERT_TRUE(is_good(g, c.k)) << w.to_string();
      }
      ASSERT_EQ(perm_of_good(g, c), w) << w.to_string() << " in " << c.to_string();
      images.insert(g.rows);
    }
    EXPECT_EQ(BigCount(images.size()), count_class_monotone(c, c.k + 2)) << c.to_string();
    // Every standard tableau of the target shape comes back.
    for (const auto& t : all_syt(SkewShape(k2_target_shape(c)))) {
      GoodTableau g = syt_to_good(t);
      ASSERT_EQ(good_of_perm(perm_of_good(g, c), c), g) << c.to_string();
      ASSERT_EQ(k2_bijection(k2_inverse(t, c), c), t);
    }
  });
}

TEST(Good, SytConversionOnStraightShapes) {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 0; b <= a; ++b) {
      for (int c = 0; c <= b; ++c) {
        SkewShape s(Partition{a, b, c});
        for (const auto& t : all_syt(s)) {
          GoodTableau g = syt_to_good(t);
          ASSERT_EQ(good_to_syt(g), t);
          ASSERT_TRUE(is_generalized_good(g));
        }
      }
    }
  }
  EXPECT_FALSE(is_generalized_good(GoodTableau{{{1, 2}, {3, 1}}}));
}

TEST(Good, TraceRecordsOmissions) {
  GoodTrace tr;
  GoodTableau g{{{1, 2, 6}, {1, 4, 5}, {1, 3, 5}, {1, 2, 3}}};
  perm_of_good(g, ClassSpec(4, 2, 0), &tr);
  ASSERT_EQ(tr.omitted.size(), 4u);
  EXPECT_EQ(tr.omitted[3], 2);
  for (std::size_t i = 0; i < tr.omitted.size(); ++i) {
    int zeros = 0;
    for (int v : tr.image[i]) zeros += v == 0;
    EXPECT_EQ(zeros, 1);
  }
}

// ---------------------------------------------------------------------------
// 213 family
// ---------------------------------------------------------------------------

TEST(Avoid213, SmallShape) {
  SkewShape s(Partition{3, 2}, Partition{2});
  std::set<Partition> taus;
  for (const auto& t : all_syt(s)) {
    if (contains_pattern(reading_word(t), Permutation{2, 1, 3})) continue;
    taus.insert(map_213(t));
  }
  EXPECT_EQ(taus, (std::set<Partition>{Partition{}, Partition{1}, Partition{2}}));
  SkewTableau one = build_213(s, Partition{1});
  EXPECT_EQ(one.rows(), (Rows{{2}, {1, 3}}));
  EXPECT_EQ(reading_word(one), (Permutation{1, 3, 2}));
  EXPECT_EQ(map_213(one), Partition{1});
}

TEST(Avoid213, StraightShapes) {
  SkewShape s(Partition{3, 2});
  SkewTableau t = build_213(s, Partition{});
  EXPECT_EQ(t.rows(), (Rows{{1, 2, 3}, {4, 5}}));
  EXPECT_EQ(map_213(t), Partition{});
}

TEST(Avoid213, Errors) {
  SkewShape s(Partition{3, 2}, Partition{2});
  EXPECT_THROW(build_213(s, Partition{3}), DomainError);
  EXPECT_THROW(build_213(SkewShape(Partition{3, 1}, Partition{2}), Partition{}), DomainError);
  SkewTableau bad(SkewShape(Partition{2, 1}), {{1, 3}, {2}});
  EXPECT_THROW(map_213(bad), PatternError);  // word 213
  EXPECT_THROW(build_312(SkewShape(Partition{2, 2}), Partition{}), DomainError);
  EXPECT_THROW(build_231(SkewShape(Partition{2, 2}), Partition{}), DomainError);
}

TEST(Avoid213, SingleColumn) {
  SkewShape col(Partition{1, 1, 1, 1});
  for (auto* build : {&build_132, &build_312, &build_231}) {
    SkewTableau t = (*build)(col, Partition{});
    EXPECT_EQ(t.rows(), (Rows{{1}, {2}, {3}, {4}}));
  }
  EXPECT_EQ(build_213(col, Partition{}).rows(), (Rows{{1}, {2}, {3}, {4}}));
}

TEST(Avoid213, AllFamiliesAreBijections) {
  struct Family {
    std::vector<int> p;
    std::function<Partition(const SkewTableau&)> fwd;
    std::function<SkewTableau(const SkewShape&, const Partition&)> inv;
    std::function<Partition(const SkewShape&)> bound;
    bool ribbon;
  };
  std::vector<Family> fams{
      {{2, 1, 3}, [](const SkewTableau& t) { return map_213(t); },
       [](const SkewShape& s, const Partition& p) { return build_213(s, p); }, tau_bound_213, false},
      {{1, 3, 2}, map_132, build_132, tau_bound_132, false},
      {{3, 1, 2}, map_312, build_312, tau_bound_312, true},
      {{2, 3, 1}, map_231, build_231, tau_bound_231, true},
  };
  for (int b = 1; b <= 7; ++b) {
    for (const SkewShape& s : basic_shapes(b)) {
      for (const auto& f : fams) {
        if (f.ribbon && s.has_square()) continue;
        std::set<Partition> seen;
        for (const auto& t : all_syt(s)) {
          auto w = reading_word(t);
          if (oracle::contains({w.begin(), w.end()}, f.p)) continue;
          Partition tau = f.fwd(t);
          ASSERT_TRUE(f.bound(s).contains(tau));
          ASSERT_TRUE(seen.insert(tau).second) << s.to_string();
          ASSERT_EQ(f.inv(s, tau), t);
        }
        ASSERT_EQ(seen.size(), subpartitions(f.bound(s)).size()) << s.to_string();
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Slides
// ---------------------------------------------------------------------------

TEST(Slide, MovesAndErrors) {
  SkewShape s(Partition{3, 2}, Partition{1});
  SkewShape moved = slide_move(s, 0, SlideKind::through_row);
  EXPECT_EQ(moved, SkewShape(Partition{4, 2}, Partition{2}));
  EXPECT_EQ(slide_move(moved, 0, SlideKind::through_row, -1), s);
  EXPECT_THROW(slide_move(SkewShape(Partition{3}), 0, SlideKind::through_row), DomainError);
  EXPECT_THROW(slide_move(SkewShape(Partition{2, 1}), 1, SlideKind::through_row), DomainError);
}

TEST(Slide, PreservesAvoiderCounts) {
  for (int b = 1; b <= 7; ++b) {
    for (const SkewShape& s : basic_shapes(b)) {
      if (s.max_row_length() > 2) continue;
      long before = 0;
      for (auto& w : oracle::syt_words(s)) before += !oracle::contains(w, {1, 2, 3});
      for (int row = 0; row < s.rows(); ++row) {
        if (s.row_length(row) != 2) continue;
        for (SlideKind kind : {SlideKind::through_row, SlideKind::above_row}) {
          if (kind == SlideKind::above_row && row == 0) continue;
          SkewShape m = slide_move(s, row, kind);
          long after = 0;
          for (auto& w : oracle::syt_words(m)) after += !oracle::contains(w, {1, 2, 3});
          ASSERT_EQ(before, after) << s.to_string() << " -> " << m.to_string();
        }
        for (const auto& t : all_syt(s)) {
          if (contains_pattern(reading_word(t), Permutation{1, 2, 3})) continue;
          SkewTableau moved = transport(t, row, SlideKind::through_row);
          ASSERT_EQ(reading_word(moved), reading_word(t));
        }
      }
    }
  }
}
