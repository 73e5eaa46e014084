#ifndef TRIFREE_SEARCH_HPP
#define TRIFREE_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "trifree/degseq.hpp"
#include "trifree/graph.hpp"
#include "trifree/ksubset.hpp"

namespace trifree {

enum class Mode { All, TriangleFree, Bipartite };

std::string_view to_string(Mode mode);
/// Accepts "all", "tf", "bip" and the full names.
Mode parse_mode(std::string_view text);

/// Which realizations to emit and which accelerators to use. None of the
/// toggles changes the emitted set; they only change how much of the tree
/// is explored.
struct SearchOptions {
  Mode mode = Mode::TriangleFree;
  bool feasibility_checks = true;
  bool residual_graphicality = true;
  Stage1Checks stage1;
};

/// Quantities behind the three feasibility checks for a candidate neighbour
/// set S of the current vertex, with residuals taken after joining S.
struct FeasibilityStats {
  std::int64_t selected_sum = 0;  // sum of residuals over S
  int selected_max = 0;           // largest residual in S
  std::int64_t outside_sum = 0;   // residual sum of positive vertices not in S
  int outside_count = 0;          // how many such vertices
};

enum class FeasibilityRule { Ok, SumExceeded, MaxExceeded, TightMismatch };

/// (i) selected_sum <= outside_sum, (ii) selected_max <= outside_count,
/// (iii) selected_max == outside_count implies the sums agree.
FeasibilityRule feasibility_rule(const FeasibilityStats& stats);
inline bool feasibility_check(const FeasibilityStats& stats) {
  return feasibility_rule(stats) == FeasibilityRule::Ok;
}

/// Stats for joining `vertex` to every member of `subset` in g. No mutation.
FeasibilityStats feasibility_stats(const LabeledGraph& g, Vertex vertex,
                                   std::span<const Vertex> subset);

/// Unsaturated vertices above `vertex`; outside All mode, those adjacent to
/// a lower neighbour of `vertex` are dropped.
std::vector<Vertex> build_candidate_set(const LabeledGraph& g, Vertex vertex,
                                        Mode mode);

/// Vertices above `vertex` adjacent to some lower neighbour of `vertex`
/// (empty in All mode).
std::vector<Vertex> build_forbidden_set(const LabeledGraph& g, Vertex vertex,
                                        Mode mode);

/// Whether the full residual sequence stays graphical after joining
/// `vertex` to `subset`. Reference version: copies, sorts, runs
/// is_graphical.
bool residual_graphicality(const LabeledGraph& g, Vertex vertex,
                           std::span<const Vertex> subset);

struct SearchStats {
  std::uint64_t arrivals = 0;       // first visits to a frame
  std::uint64_t revisits = 0;       // returns to a frame from below
  std::uint64_t commits = 0;        // neighbour sets committed (tree nodes)
  std::uint64_t subsets_tried = 0;
  std::uint64_t small_candidate_set = 0;
  std::uint64_t rejected_sum = 0;       // check (i)
  std::uint64_t rejected_max = 0;       // check (ii)
  std::uint64_t rejected_tight = 0;     // check (iii)
  std::uint64_t rejected_graphicality = 0;
  std::uint64_t leaves = 0;
  std::uint64_t rejected_bipartite = 0;
};

/// Depth-first generator of labeled realizations in increasing order of
/// canonical_edge_list. One shared graph is edited along the traversal and
/// restored exactly on backtrack; the frame stack is explicit.
///
///   Enumerator e(d, {.mode = Mode::TriangleFree});
///   while (e.next()) use(e.graph());
class Enumerator {
 public:
  /// Throws InputError if d is not graphical.
  Enumerator(const DegreeSequence& d, SearchOptions options);

  /// Advances to the next realization. False once the tree is exhausted.
  bool next();

  /// The current realization; valid after next() returned true.
  const LabeledGraph& graph() const { return graph_; }
  const Stage1Verdict& stage1() const { return stage1_; }
  const SearchStats& stats() const { return stats_; }
  const SearchOptions& options() const { return options_; }

  /// Called with (vertex, graph) each time a neighbour set is committed,
  /// including the empty set of a vertex saturated on arrival.
  using NodeObserver = std::function<void(Vertex, const LabeledGraph&)>;
  void set_node_observer(NodeObserver observer) {
    observer_ = std::move(observer);
  }

 private:
  enum class Step { Arrive, Revisit, Done };

  struct Frame {
    int size = 0;                 // residual of the vertex on arrival
    std::vector<Vertex> ground;
    std::vector<Vertex> chosen;   // committed upper neighbours
    SubsetCursor cursor;
  };

  bool arrive(Vertex k);
  bool revisit(Vertex k);
  bool scan(Vertex k, bool with_feasibility);
  bool histogram_graphical(Vertex k, std::span<const Vertex> subset);
  void join(Vertex k, std::span<const Vertex> subset);
  void separate(Vertex k, std::span<const Vertex> subset);

  SearchOptions options_;
  int n_ = 0;
  LabeledGraph graph_;
  Stage1Verdict stage1_;
  SearchStats stats_;
  NodeObserver observer_;

  std::vector<Frame> frames_;
  Vertex depth_ = 0;
  Step step_ = Step::Arrive;

  std::vector<int> residual_counts_;  // histogram of graph_.residuals()
  GraphicalityTest graphical_;
  std::vector<Vertex> scratch_;
};

struct EnumerationSummary {
  std::uint64_t emitted = 0;
  Stage1Verdict stage1;
  SearchStats stats;
  bool stopped_early = false;  // limit reached or sink asked to stop
};

/// Returning false from the sink stops the enumeration.
using RealizationSink = std::function<bool(const LabeledGraph&)>;

EnumerationSummary enumerate(const DegreeSequence& d,
                             const SearchOptions& options,
                             const RealizationSink& sink,
                             std::optional<std::uint64_t> limit = {});

std::uint64_t count(const DegreeSequence& d, const SearchOptions& options);
inline std::uint64_t count(const DegreeSequence& d, Mode mode) {
  SearchOptions options;
  options.mode = mode;
  return count(d, options);
}

}  // namespace trifree

#endif  // TRIFREE_SEARCH_HPP
