#include <random>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "trifree/graph.hpp"

namespace trifree {
namespace {

// Decoder written straight from the graph6 format description: N(n) is one
// byte n + 63 for n <= 62; then the upper triangle x(0,1) x(0,2) x(1,2)
// x(0,3) ... packed big-endian into 6-bit groups, each plus 63.
std::pair<int, std::set<std::pair<int, int>>> decode_graph6(
    const std::string& s) {
  const int n = s.at(0) - 63;
  std::vector<int> bits;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const int group = s[i] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back((group >> b) & 1);
  }
  std::set<std::pair<int, int>> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (bits.at(k)) edges.insert({i, j});
    }
  }
  return {n, edges};
}

LabeledGraph cycle5() {
  // Edges 12,13,24,35,45 in 1-based labels.
  const std::vector<Edge> e{{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}};
  return graph_from_edges(5, e);
}

LabeledGraph graph_from_bits(int n, unsigned bits) {
  LabeledGraph g(n);
  unsigned k = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++k) {
      if (bits >> k & 1u) g.add_edge(u, v);
    }
  }
  return g;
}

TEST(LabeledGraph, AddEdgeUpdatesResiduals) {
  const std::vector<int> targets{1, 1, 0};
  LabeledGraph g(targets);
  g.add_edge(0, 1);
  EXPECT_EQ(g.residual(0), 0);
  EXPECT_EQ(g.residual(1), 0);
  EXPECT_EQ(g.residual(2), 0);
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_TRUE(g.has_edge(1, 0));
}

TEST(LabeledGraph, AddEdgeFaults) {
  LabeledGraph g(3);
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(0, 1), std::logic_error);
  EXPECT_THROW(g.add_edge(1, 0), std::logic_error);
  EXPECT_THROW(g.add_edge(0, 0), std::logic_error);
  EXPECT_THROW(g.add_edge(0, 3), std::logic_error);

  const std::vector<int> targets{1, 1, 1};
  LabeledGraph h(targets);
  h.add_edge(0, 1);
  EXPECT_THROW(h.add_edge(0, 2), std::logic_error);  // 0 saturated
}

TEST(LabeledGraph, RemoveEdge) {
  LabeledGraph g(3);
  EXPECT_THROW(g.remove_edge(0, 1), std::logic_error);
  g.add_edge(0, 2);
  g.remove_edge(2, 0);
  EXPECT_EQ(g.edge_count(), 0);
  EXPECT_EQ(g.residual(0), 2);
  EXPECT_TRUE(g.neighbors(0).empty());
}

TEST(LabeledGraph, RandomEditScriptsUndoExactly) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 9)(rng);
    std::vector<int> targets(static_cast<std::size_t>(n));
    for (int& t : targets) t = std::uniform_int_distribution<int>(0, n - 1)(rng);
    LabeledGraph g(targets);
    std::vector<std::pair<LabeledGraph, Edge>> undo;
    for (int step = 0; step < 60; ++step) {
      const bool add = undo.empty() || (rng() % 3 != 0);
      if (add) {
        const int u = static_cast<int>(rng() % static_cast<unsigned>(n));
        const int v = static_cast<int>(rng() % static_cast<unsigned>(n));
        if (u == v || g.has_edge(u, v) || g.residual(u) == 0 ||
            g.residual(v) == 0) {
          continue;
        }
        undo.emplace_back(g, Edge{u, v});
        g.add_edge(u, v);
      } else {
        auto [before, e] = undo.back();
        undo.pop_back();
        g.remove_edge(e.u, e.v);
        ASSERT_EQ(g, before);
      }
      int degree_sum = 0;
      for (int v = 0; v < n; ++v) {
        ASSERT_GE(g.residual(v), 0);
        ASSERT_EQ(g.residual(v), targets[v] - g.degree(v));
        degree_sum += g.degree(v);
        for (int w : g.neighbors(v)) ASSERT_TRUE(g.has_edge(w, v));
      }
      ASSERT_EQ(degree_sum, 2 * g.edge_count());
    }
  }
}

TEST(TriangleFree, Examples) {
  EXPECT_TRUE(is_triangle_free(cycle5()));
  const std::vector<Edge> k3{{0, 1}, {0, 2}, {1, 2}};
  EXPECT_FALSE(is_triangle_free(graph_from_edges(3, k3)));
  EXPECT_TRUE(is_triangle_free(LabeledGraph(4)));
}

TEST(Bipartite, Examples) {
  EXPECT_FALSE(is_bipartite(cycle5()));
  const std::vector<Edge> c4{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  EXPECT_TRUE(is_bipartite(graph_from_edges(4, c4)));
  EXPECT_TRUE(is_bipartite(LabeledGraph(5)));
  // Disconnected: an even path plus a triangle.
  const std::vector<Edge> mixed{{0, 1}, {2, 3}, {3, 4}, {2, 4}};
  EXPECT_FALSE(is_bipartite(graph_from_edges(5, mixed)));
}

TEST(Bipartite, ImpliesTriangleFreeOnAllSmallGraphs) {
  for (int n = 0; n <= 6; ++n) {
    const unsigned total = 1u << (n * (n - 1) / 2);
    for (unsigned bits = 0; bits < total; ++bits) {
      const LabeledGraph g = graph_from_bits(n, bits);
      if (is_bipartite(g)) ASSERT_TRUE(is_triangle_free(g)) << n << ":" << bits;
    }
  }
}

TEST(CanonicalEdgeList, SortsRegardlessOfInsertionOrder) {
  LabeledGraph g(4);
  g.add_edge(1, 3);
  g.add_edge(0, 1);
  g.add_edge(2, 0);
  EXPECT_EQ(canonical_edge_list(g), (EdgeList{{0, 1}, {0, 2}, {1, 3}}));
  EXPECT_EQ(format_edge_list(g), "1-2,1-3,2-4");
  EXPECT_TRUE(canonical_edge_list(LabeledGraph(3)).empty());
  EXPECT_EQ(format_edge_list(LabeledGraph(3)), "");
}

TEST(CanonicalEdgeList, DistinguishesAllGraphsOnFiveVertices) {
  std::set<EdgeList> seen;
  const unsigned total = 1u << 10;
  for (unsigned bits = 0; bits < total; ++bits) {
    seen.insert(canonical_edge_list(graph_from_bits(5, bits)));
  }
  EXPECT_EQ(seen.size(), total);
}

TEST(Graph6, HandEncodedExamples) {
  const std::vector<Edge> one{{0, 1}};
  EXPECT_EQ(to_graph6(graph_from_edges(2, one)), "A_");
  EXPECT_EQ(to_graph6(LabeledGraph(1)), "@");
  EXPECT_EQ(to_graph6(LabeledGraph(0)), "?");
  EXPECT_EQ(to_graph6(LabeledGraph(2)), "A?");
}

TEST(Graph6, Cycle5RoundTrips) {
  const auto [n, edges] = decode_graph6(to_graph6(cycle5()));
  EXPECT_EQ(n, 5);
  EXPECT_EQ(edges, (std::set<std::pair<int, int>>{
                       {0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}}));
}

TEST(Graph6, RoundTripsAllGraphsUpToSix) {
  for (int n = 0; n <= 6; ++n) {
    const unsigned total = 1u << (n * (n - 1) / 2);
    for (unsigned bits = 0; bits < total; ++bits) {
      const LabeledGraph g = graph_from_bits(n, bits);
      const auto [m, edges] = decode_graph6(to_graph6(g));
      ASSERT_EQ(m, n);
      std::set<std::pair<int, int>> expected;
      for (const Edge& e : canonical_edge_list(g)) expected.insert({e.u, e.v});
      ASSERT_EQ(edges, expected);
    }
  }
}

TEST(Graph6, RejectsLongForm) {
  EXPECT_NO_THROW(to_graph6(LabeledGraph(62)));
  EXPECT_THROW(to_graph6(LabeledGraph(63)), std::invalid_argument);
}

}  // namespace
}  // namespace trifree
