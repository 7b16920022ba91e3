#include <gtest/gtest.h>

#include "skewpat/io.hpp"

using namespace skewpat;

TEST(Literals, Shapes) {
  EXPECT_EQ(parse_shape("3,2/2"), SkewShape(Partition{3, 2}, Partition{2}));
  EXPECT_EQ(parse_shape("4,2,1"), SkewShape(Partition{4, 2, 1}));
  EXPECT_EQ(parse_shape(" 3, 2 / 2 "), SkewShape(Partition{3, 2}, Partition{2}));
  EXPECT_THROW(parse_shape("3,x"), DomainError);
  EXPECT_THROW(parse_shape("2/3"), DomainError);
  EXPECT_THROW(parse_shape("1,2"), DomainError);
}

TEST(Literals, Patterns) {
  EXPECT_EQ(parse_permutation("2413"), (Permutation{2, 4, 1, 3}));
  EXPECT_EQ(parse_permutation("1,2,3,4,5,6,7,8,9,10"), Permutation::identity(10));
  EXPECT_THROW(parse_permutation("1224"), DomainError);
  EXPECT_THROW(parse_permutation("12a"), DomainError);
  Permutation big = Permutation::identity(11);
  EXPECT_EQ(parse_permutation(big.to_string()), big);
}

TEST(Literals, Classes) {
  EXPECT_EQ(parse_class("n=2,k=2,r=0"), ClassSpec(2, 2, 0));
  EXPECT_EQ(parse_class("k=3,n=1"), ClassSpec(1, 3, 0));
  EXPECT_THROW(parse_class("n=2"), DomainError);
  EXPECT_THROW(parse_class("n=2,k=2,r=2"), DomainError);
  EXPECT_THROW(parse_class("n=2,k=2,q=1"), DomainError);
}

TEST(Json, RoundTrips) {
  SkewTableau t(SkewShape(Partition{3, 2}, Partition{2}), {{2}, {1, 3}});
  Json j = t;
  EXPECT_EQ(j.dump(), R"({"rows":[[2],[1,3]],"shape":{"inner":[2],"outer":[3,2]}})");
  EXPECT_EQ(j.get<SkewTableau>(), t);
  Json w = Permutation{3, 1, 2};
  EXPECT_EQ(w.dump(), "[3,1,2]");
  EXPECT_EQ(w.get<Permutation>(), (Permutation{3, 1, 2}));
  Json straight = Json::parse(R"({"rows":[[1,2],[3]]})");
  EXPECT_EQ(straight.get<SkewTableau>(), SkewTableau::straight({{1, 2}, {3}}));
  GoodTableau g{{{1, 2}, {1, 2}}};
  EXPECT_EQ(Json(g).get<GoodTableau>(), g);
  EXPECT_EQ(Json::parse("[[1,2],[1,2]]").get<GoodTableau>(), g);
  TableauPair pr{SkewTableau::straight({{1, 2}}), PairedTableau{{}, {{1}}}};
  TableauPair back = Json(pr).get<TableauPair>();
  EXPECT_EQ(back.P, pr.P);
  EXPECT_EQ(back.R, pr.R);
}

TEST(Json, RejectsNonStandard) {
  EXPECT_THROW(Json::parse(R"({"rows":[[2,1]]})").get<SkewTableau>(), DomainError);
}

TEST(Render, FirstRowOnTop) {
  SkewTableau t(SkewShape(Partition{3, 2}, Partition{2}), {{2}, {1, 3}});
  EXPECT_EQ(render(t), ". . 2\n1 3\n");
  EXPECT_EQ(render(SkewShape(Partition{3, 2}, Partition{2})), ". . #\n# #\n");
  SkewTableau wide = SkewTableau::straight({{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}});
  EXPECT_EQ(render(wide), " 1  2  3  4  5  6  7  8  9 10\n");
  EXPECT_EQ(render(Rows{{1, 2}, {1}}), "1 2\n1\n");
}
