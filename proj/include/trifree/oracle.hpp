#ifndef TRIFREE_ORACLE_HPP
#define TRIFREE_ORACLE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "trifree/degseq.hpp"
#include "trifree/graph.hpp"
#include "trifree/search.hpp"

// Brute-force ground truth for small orders. Nothing here calls into the
// search engine or the k-subset cursor; only the graph type and its
// canonical encoding are shared.
namespace trifree::oracle {

inline constexpr int kDefaultMaxOrder = 8;

struct OracleResult {
  std::vector<EdgeList> all;
  std::vector<EdgeList> triangle_free;
  std::vector<EdgeList> bipartite;

  const std::vector<EdgeList>& for_mode(Mode mode) const;
};

/// Every labeled realization of `degrees` (zeros allowed, any order is
/// taken as the label order), split by class. Lists are sorted and
/// duplicate-free. Throws InputError if the order exceeds max_order.
OracleResult brute_force(std::span<const int> degrees,
                         int max_order = kDefaultMaxOrder);
inline OracleResult brute_force(const DegreeSequence& d,
                                int max_order = kDefaultMaxOrder) {
  return brute_force(std::span<const int>(d.degrees()), max_order);
}
std::vector<EdgeList> brute_force(const DegreeSequence& d, Mode mode,
                                  int max_order = kDefaultMaxOrder);

/// Exact maximum independent set size, branch and bound on bitmasks.
/// Throws InputError for n > 20.
int independence_number(const LabeledGraph& g);

struct Census {
  std::uint64_t all = 0;
  std::uint64_t triangle_free = 0;
  std::uint64_t bipartite = 0;
};

/// Counts of all labeled graphs on n vertices with no isolated vertex,
/// by class, scanning all 2^(n(n-1)/2) graphs. n <= 7.
Census census_without_isolated(int n);

}  // namespace trifree::oracle

#endif  // TRIFREE_ORACLE_HPP
