#include <gtest/gtest.h>

#include <sgut/families.hpp>
#include <sgut/steiner.hpp>

#include "oracle.hpp"

using namespace sgut;

TEST(Steiner, PathDistances) {
  const Graph p5 = generate({Family::Path, 5});
  const SteinerTable t = steiner_all_subsets(p5);
  EXPECT_EQ(t[VertexSet::of({0, 4})], 4u);
  EXPECT_EQ(t[VertexSet::of({1, 2, 3})], 2u);
  EXPECT_EQ(t[VertexSet::of({0, 2})], 2u);
  EXPECT_EQ(t[VertexSet::of({2})], 0u);
}

TEST(Steiner, StarAndCycle) {
  const Graph s5 = generate({Family::Star, 5});
  EXPECT_EQ(steiner_single(s5, VertexSet::of({1, 2, 3})), 3u);
  EXPECT_EQ(steiner_oracle(s5, VertexSet::of({0, 1})), 1u);
  const Graph c6 = generate({Family::Cycle, 6});
  EXPECT_EQ(steiner_single(c6, VertexSet::of({0, 2, 4})), 4u);
  EXPECT_EQ(steiner_all_subsets(c6)[VertexSet::of({0, 3})], 3u);
}

TEST(Steiner, DisconnectedIsUnreachable) {
  const Graph g = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  const SteinerTable t = steiner_all_subsets(g);
  EXPECT_EQ(t[VertexSet::of({0, 2})], kUnreachable);
  EXPECT_EQ(t[VertexSet::of({0, 1})], 1u);
  EXPECT_EQ(steiner_single(g, VertexSet::of({1, 3})), kUnreachable);
  EXPECT_EQ(steiner_oracle(g, VertexSet::of({1, 3})), kUnreachable);
}

TEST(Steiner, EmptySetRejected) {
  const Graph g = generate({Family::Path, 3});
  EXPECT_THROW(steiner_single(g, VertexSet{}), Error);
  EXPECT_THROW(steiner_oracle(g, VertexSet{}), Error);
}

TEST(Steiner, CapEnforced) {
  const Graph g = generate({Family::Path, 6});
  try {
    steiner_all_subsets(g, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderTooLarge);
  }
}

TEST(Steiner, ThreeRoutesAgreeOnSmallFamilies) {
  for (Family f : {Family::Path, Family::Cycle, Family::Star, Family::Complete}) {
    for (int n = 3; n <= 7; ++n) {
      const Graph g = generate({f, n});
      const SteinerTable t = steiner_all_subsets(g);
      for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        const auto expected = static_cast<Distance>(oracle::steiner_distance(g, s));
        ASSERT_EQ(t.at(s), expected);
        ASSERT_EQ(steiner_single(g, VertexSet(s)), expected);
        ASSERT_EQ(steiner_oracle(g, VertexSet(s)), expected);
      }
    }
  }
}

TEST(Steiner, PairwiseMatchesFloyd) {
  const Graph g = Graph::from_edge_list(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {4, 5}});
  const auto d = pairwise_distances(g);
  const auto f = oracle::floyd(g);
  for (int u = 0; u < 7; ++u)
    for (int v = 0; v < 7; ++v) {
      if (f[u][v] < 0) EXPECT_EQ(d[u][v], kUnreachable);
      else EXPECT_EQ(d[u][v], static_cast<Distance>(f[u][v]));
    }
}

TEST(Steiner, PairEntriesEqualBfs) {
  const Graph g = generate({Family::Cycle, 7});
  const SteinerTable t = steiner_all_subsets(g);
  const auto d = pairwise_distances(g);
  for (int u = 0; u < 7; ++u)
    for (int v = u + 1; v < 7; ++v) EXPECT_EQ(t[VertexSet::of({u, v})], d[u][v]);
}
