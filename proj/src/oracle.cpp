#include "trifree/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace trifree::oracle {

namespace {

using Mask = std::uint32_t;

bool has_triangle(std::span<const Mask> adj) {
  const int n = static_cast<int>(adj.size());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!(adj[u] >> v & 1u)) continue;
      if (adj[u] & adj[v]) return true;
    }
  }
  return false;
}

// Tries every 2-colouring with vertex 0 on side 0.
bool two_colourable(std::span<const Mask> adj) {
  const int n = static_cast<int>(adj.size());
  if (n <= 1) return true;
  const Mask everyone = (Mask{1} << n) - 1;
  for (Mask side = 0; side < (Mask{1} << (n - 1)); ++side) {
    const Mask one = side << 1;
    const Mask zero = everyone & ~one;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      const Mask own = (one >> u & 1u) ? one : zero;
      ok = (adj[u] & own) == 0;
    }
    if (ok) return true;
  }
  return false;
}

struct EdgeSearch {
  std::vector<int> target;
  std::vector<int> degree;
  std::vector<Edge> slots;  // all pairs u < v in lexicographic order
  std::vector<char> taken;
  std::vector<std::vector<char>> found;

  void run(std::size_t i) {
    if (i == slots.size()) {
      if (degree == target) found.push_back(taken);
      return;
    }
    const Edge e = slots[i];
    // Leaving row u for good: u must be complete.
    if (i > 0 && slots[i - 1].u != e.u) {
      const int done = slots[i - 1].u;
      if (degree[done] != target[done]) return;
    }
    if (degree[e.u] < target[e.u] && degree[e.v] < target[e.v]) {
      taken[i] = 1;
      ++degree[e.u];
      ++degree[e.v];
      run(i + 1);
      --degree[e.u];
      --degree[e.v];
      taken[i] = 0;
    }
    run(i + 1);
  }
};

}  // namespace

const std::vector<EdgeList>& OracleResult::for_mode(Mode mode) const {
  switch (mode) {
    case Mode::All:
      return all;
    case Mode::TriangleFree:
      return triangle_free;
    case Mode::Bipartite:
      return bipartite;
  }
  return all;
}

OracleResult brute_force(std::span<const int> degrees, int max_order) {
  const int n = static_cast<int>(degrees.size());
  if (n > max_order || n > 31) {
    throw InputError("oracle order " + std::to_string(n) + " above cap " +
                     std::to_string(max_order));
  }
  EdgeSearch search;
  search.target.assign(degrees.begin(), degrees.end());
  search.degree.assign(degrees.size(), 0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) search.slots.push_back({u, v});
  }
  search.taken.assign(search.slots.size(), 0);
  if (std::all_of(degrees.begin(), degrees.end(), [](int x) { return x >= 0; })) {
    search.run(0);
  }

  OracleResult out;
  std::vector<Mask> adj(static_cast<std::size_t>(n));
  for (const auto& taken : search.found) {
    EdgeList edges;
    std::fill(adj.begin(), adj.end(), 0);
    for (std::size_t i = 0; i < taken.size(); ++i) {
      if (!taken[i]) continue;
      const Edge e = search.slots[i];
      edges.push_back(e);
      adj[e.u] |= Mask{1} << e.v;
      adj[e.v] |= Mask{1} << e.u;
    }
    if (!has_triangle(adj)) {
      out.triangle_free.push_back(edges);
      if (two_colourable(adj)) out.bipartite.push_back(edges);
    }
    out.all.push_back(std::move(edges));
  }
  for (auto* list : {&out.all, &out.triangle_free, &out.bipartite}) {
    std::sort(list->begin(), list->end());
    list->erase(std::unique(list->begin(), list->end()), list->end());
  }
  return out;
}

std::vector<EdgeList> brute_force(const DegreeSequence& d, Mode mode,
                                  int max_order) {
  OracleResult r = brute_force(d, max_order);
  switch (mode) {
    case Mode::All:
      return std::move(r.all);
    case Mode::TriangleFree:
      return std::move(r.triangle_free);
    case Mode::Bipartite:
      return std::move(r.bipartite);
  }
  return {};
}

namespace {

int max_independent(std::span<const Mask> adj, Mask candidates, int so_far,
                    int best) {
  if (candidates == 0) return std::max(best, so_far);
  if (so_far + std::popcount(candidates) <= best) return best;
  const int v = std::countr_zero(candidates);
  const Mask rest = candidates & ~(Mask{1} << v);
  best = max_independent(adj, rest & ~adj[v], so_far + 1, best);
  if ((adj[v] & rest) != 0) best = max_independent(adj, rest, so_far, best);
  return best;
}

}  // namespace

int independence_number(const LabeledGraph& g) {
  const int n = g.order();
  if (n > 20) {
    throw InputError("independence_number supports n <= 20");
  }
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) adj[u] |= Mask{1} << v;
  }
  const Mask everyone = n == 0 ? 0 : (Mask{1} << n) - 1;
  return max_independent(adj, everyone, 0, 0);
}

Census census_without_isolated(int n) {
  if (n < 0 || n > 7) throw InputError("census supports 0 <= n <= 7");
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
  }
  Census c;
  std::vector<Mask> adj(static_cast<std::size_t>(n));
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::fill(adj.begin(), adj.end(), 0);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (!(bits >> i & 1u)) continue;
      adj[slots[i].u] |= Mask{1} << slots[i].v;
      adj[slots[i].v] |= Mask{1} << slots[i].u;
    }
    if (std::any_of(adj.begin(), adj.end(), [](Mask m) { return m == 0; })) {
      continue;
    }
    ++c.all;
    if (has_triangle(adj)) continue;
    ++c.triangle_free;
    if (two_colourable(adj)) ++c.bipartite;
  }
  return c;
}

}  // namespace trifree::oracle
