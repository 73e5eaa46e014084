#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "trifree/oracle.hpp"

namespace trifree {
namespace {

TEST(BruteForce, C5SequenceIsAllTriangleFree) {
  const auto r = oracle::brute_force(parse_sequence("2,2,2,2,2"));
  EXPECT_EQ(r.all.size(), 12u);
  EXPECT_EQ(r.triangle_free.size(), 12u);
  EXPECT_TRUE(r.bipartite.empty());
}

TEST(BruteForce, SingleEdge) {
  EXPECT_EQ(oracle::brute_force(parse_sequence("1,1"), Mode::All),
            (std::vector<EdgeList>{{{0, 1}}}));
}

TEST(BruteForce, NonGraphicalGivesNothing) {
  EXPECT_TRUE(oracle::brute_force(std::vector<int>{3, 3, 1, 1}).all.empty());
}

TEST(BruteForce, TableRowsWithinCap) {
  const auto a = oracle::brute_force(parse_sequence("3,3,2,2,2"));
  EXPECT_EQ(a.all.size(), 7u);
  EXPECT_EQ(a.triangle_free.size(), 1u);
  EXPECT_EQ(a.bipartite.size(), 1u);
  const auto b = oracle::brute_force(parse_sequence("4,4,3,3,3,2,2,1"));
  EXPECT_EQ(b.all.size(), 1931u);
  EXPECT_EQ(b.triangle_free.size(), 33u);
  EXPECT_EQ(b.bipartite.size(), 33u);
  const auto c = oracle::brute_force(parse_sequence("3^8"));
  EXPECT_EQ(c.all.size(), 19355u);
  EXPECT_EQ(c.triangle_free.size(), 3360u);
  EXPECT_EQ(c.bipartite.size(), 840u);
}

TEST(BruteForce, SortedDuplicateFreeAndNested) {
  const auto r = oracle::brute_force(parse_sequence("3,3,2,2,1,1"));
  for (const auto* list : {&r.all, &r.triangle_free, &r.bipartite}) {
    for (std::size_t i = 1; i < list->size(); ++i) {
      EXPECT_LT((*list)[i - 1], (*list)[i]);
    }
  }
  EXPECT_TRUE(std::includes(r.all.begin(), r.all.end(),
                            r.triangle_free.begin(), r.triangle_free.end()));
  EXPECT_TRUE(std::includes(r.triangle_free.begin(), r.triangle_free.end(),
                            r.bipartite.begin(), r.bipartite.end()));
}

TEST(BruteForce, EnforcesCap) {
  EXPECT_THROW(oracle::brute_force(parse_sequence("3^10")), InputError);
  EXPECT_THROW(oracle::brute_force(parse_sequence("2^5"), 4), InputError);
}

TEST(IndependenceNumber, Examples) {
  const std::vector<Edge> c5{{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}};
  EXPECT_EQ(oracle::independence_number(graph_from_edges(5, c5)), 2);
  EXPECT_EQ(oracle::independence_number(LabeledGraph(4)), 4);
  const std::vector<Edge> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  EXPECT_EQ(oracle::independence_number(graph_from_edges(4, k4)), 1);
  EXPECT_EQ(oracle::independence_number(LabeledGraph(0)), 0);
  EXPECT_THROW(oracle::independence_number(LabeledGraph(21)), InputError);
}

TEST(IndependenceNumber, PetersenGraph) {
  LabeledGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  ASSERT_EQ(g.edge_count(), 15);
  EXPECT_EQ(oracle::independence_number(g), 4);
}

TEST(Census, SmallOrders) {
  // n = 2: only K2. n = 3: three paths and the triangle.
  const auto c2 = oracle::census_without_isolated(2);
  EXPECT_EQ(c2.all, 1u);
  const auto c3 = oracle::census_without_isolated(3);
  EXPECT_EQ(c3.all, 4u);
  EXPECT_EQ(c3.triangle_free, 3u);
  EXPECT_EQ(c3.bipartite, 3u);
  EXPECT_EQ(oracle::census_without_isolated(1).all, 0u);
}

}  // namespace
}  // namespace trifree
