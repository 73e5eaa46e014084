#include "trifree/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace trifree {

LabeledGraph::LabeledGraph(int n)
    : LabeledGraph(std::vector<int>(static_cast<std::size_t>(std::max(n, 0)),
                                    std::max(n - 1, 0))) {}

LabeledGraph::LabeledGraph(std::span<const int> target_degrees)
    : n_(static_cast<int>(target_degrees.size())),
      neighbors_(target_degrees.size()),
      adjacent_(target_degrees.size() * target_degrees.size(), 0),
      target_(target_degrees.begin(), target_degrees.end()),
      residual_(target_degrees.begin(), target_degrees.end()) {
  for (int t : target_) {
    if (t < 0 || t > std::max(n_ - 1, 0)) {
      throw std::invalid_argument("target degree out of range");
    }
  }
}

void LabeledGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw std::logic_error("vertex " + std::to_string(v) + " out of range");
  }
}

void LabeledGraph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::logic_error("self-loop");
  if (has_edge(u, v)) throw std::logic_error("duplicate edge");
  auto& ru = residual_[static_cast<std::size_t>(u)];
  auto& rv = residual_[static_cast<std::size_t>(v)];
  if (ru <= 0 || rv <= 0) throw std::logic_error("endpoint is saturated");
  --ru;
  --rv;
  adjacent_[index(u, v)] = 1;
  adjacent_[index(v, u)] = 1;
  for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
    auto& list = neighbors_[static_cast<std::size_t>(a)];
    list.insert(std::lower_bound(list.begin(), list.end(), b), b);
  }
  ++edge_count_;
}

void LabeledGraph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !has_edge(u, v)) throw std::logic_error("edge absent");
  ++residual_[static_cast<std::size_t>(u)];
  ++residual_[static_cast<std::size_t>(v)];
  adjacent_[index(u, v)] = 0;
  adjacent_[index(v, u)] = 0;
  for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
    auto& list = neighbors_[static_cast<std::size_t>(a)];
    list.erase(std::lower_bound(list.begin(), list.end(), b));
  }
  --edge_count_;
}

LabeledGraph graph_from_edges(int n, std::span<const Edge> edges) {
  LabeledGraph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

bool is_triangle_free(const LabeledGraph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : g.neighbors(v)) {
        if (w > v && g.has_edge(u, w)) return false;
      }
    }
  }
  return true;
}

bool is_bipartite(const LabeledGraph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue;
  for (Vertex start = 0; start < g.order(); ++start) {
    if (colour[static_cast<std::size_t>(start)] >= 0) continue;
    colour[static_cast<std::size_t>(start)] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      const int cu = colour[static_cast<std::size_t>(u)];
      for (Vertex v : g.neighbors(u)) {
        int& cv = colour[static_cast<std::size_t>(v)];
        if (cv < 0) {
          cv = 1 - cu;
          queue.push_back(v);
        } else if (cv == cu) {
          return false;
        }
      }
    }
  }
  return true;
}

EdgeList canonical_edge_list(const LabeledGraph& g) {
  EdgeList out;
  out.reserve(static_cast<std::size_t>(g.edge_count()));
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v > u) out.push_back({u, v});
    }
  }
  return out;
}

std::string format_edge_list(const LabeledGraph& g) {
  std::string out;
  for (const Edge& e : canonical_edge_list(g)) {
    if (!out.empty()) out += ',';
    out += std::to_string(e.u + 1);
    out += '-';
    out += std::to_string(e.v + 1);
  }
  return out;
}

std::string to_graph6(const LabeledGraph& g) {
  const int n = g.order();
  if (n < 0 || n > 62) {
    throw std::invalid_argument("graph6 short form supports 0 <= n <= 62");
  }
  std::string out(1, static_cast<char>(63 + n));
  // Upper triangle in column order: x(0,1), x(0,2), x(1,2), x(0,3), ...
  int bits = 0;
  int word = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      word = (word << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(63 + word);
        bits = 0;
        word = 0;
      }
    }
  }
  if (bits > 0) out += static_cast<char>(63 + (word << (6 - bits)));
  return out;
}

}  // namespace trifree
