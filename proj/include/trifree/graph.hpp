#ifndef TRIFREE_GRAPH_HPP
#define TRIFREE_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace trifree {

/// Vertices are 0-based in the C++ and Python APIs. Text formats
/// (edge lists, graph6) follow their own conventions.
using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;
  auto operator<=>(const Edge&) const = default;
};

/// Sorted (u < v) edges in lexicographic order. Comparing two of these
/// lexicographically gives the total order in which realizations are
/// generated.
using EdgeList = std::vector<Edge>;

/// Simple labeled graph being built towards per-vertex target degrees.
/// residual(v) = target(v) - degree(v) never goes negative.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  /// Unconstrained graph: every vertex may reach degree n - 1.
  explicit LabeledGraph(int n);
  explicit LabeledGraph(std::span<const int> target_degrees);

  int order() const { return n_; }
  int edge_count() const { return edge_count_; }

  bool has_edge(Vertex u, Vertex v) const {
    return adjacent_[index(u, v)] != 0;
  }
  const std::vector<Vertex>& neighbors(Vertex v) const {
    return neighbors_[static_cast<std::size_t>(v)];
  }
  int degree(Vertex v) const {
    return static_cast<int>(neighbors_[static_cast<std::size_t>(v)].size());
  }
  int target(Vertex v) const { return target_[static_cast<std::size_t>(v)]; }
  int residual(Vertex v) const {
    return residual_[static_cast<std::size_t>(v)];
  }
  std::span<const int> residuals() const { return residual_; }

  /// Throws std::logic_error on a self-loop, an existing edge, an
  /// out-of-range vertex or a saturated endpoint.
  void add_edge(Vertex u, Vertex v);
  /// Exact inverse of add_edge. Throws std::logic_error if the edge is absent.
  void remove_edge(Vertex u, Vertex v);

  bool operator==(const LabeledGraph&) const = default;

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v);
  }
  void check_vertex(Vertex v) const;

  int n_ = 0;
  int edge_count_ = 0;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::uint8_t> adjacent_;
  std::vector<int> target_;
  std::vector<int> residual_;
};

/// Builds an unconstrained graph on n vertices from 0-based edges.
LabeledGraph graph_from_edges(int n, std::span<const Edge> edges);

/// Neighbourhood intersection per edge; O(n^3) worst case.
bool is_triangle_free(const LabeledGraph& g);

/// Breadth-first 2-colouring of every component.
bool is_bipartite(const LabeledGraph& g);

EdgeList canonical_edge_list(const LabeledGraph& g);

/// Edge-list line format: 1-based "i-j" pairs joined by commas, sorted.
std::string format_edge_list(const LabeledGraph& g);

/// Short-form graph6 (n <= 62). Throws std::invalid_argument otherwise.
std::string to_graph6(const LabeledGraph& g);

}  // namespace trifree

#endif  // TRIFREE_GRAPH_HPP
