#include "trifree/search.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace trifree {

namespace {

bool touches_lower_neighbour(const LabeledGraph& g, Vertex vertex, Vertex y) {
  for (Vertex x : g.neighbors(vertex)) {
    if (x < vertex && g.has_edge(x, y)) return true;
  }
  return false;
}

void collect_candidates(const LabeledGraph& g, Vertex vertex, Mode mode,
                        std::vector<Vertex>& out) {
  out.clear();
  for (Vertex y = vertex + 1; y < g.order(); ++y) {
    if (g.residual(y) <= 0) continue;
    if (mode != Mode::All && touches_lower_neighbour(g, vertex, y)) continue;
    out.push_back(y);
  }
}

}  // namespace

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::All:
      return "all";
    case Mode::TriangleFree:
      return "tf";
    case Mode::Bipartite:
      return "bip";
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  if (text == "all") return Mode::All;
  if (text == "tf" || text == "triangle-free" || text == "trianglefree") {
    return Mode::TriangleFree;
  }
  if (text == "bip" || text == "bipartite") return Mode::Bipartite;
  throw InputError("unknown mode '" + std::string(text) +
                   "' (expected all, tf or bip)");
}

FeasibilityRule feasibility_rule(const FeasibilityStats& s) {
  if (s.selected_sum > s.outside_sum) return FeasibilityRule::SumExceeded;
  if (s.selected_max > s.outside_count) return FeasibilityRule::MaxExceeded;
  if (s.selected_max == s.outside_count && s.selected_sum != s.outside_sum) {
    return FeasibilityRule::TightMismatch;
  }
  return FeasibilityRule::Ok;
}

FeasibilityStats feasibility_stats(const LabeledGraph& g, Vertex vertex,
                                   std::span<const Vertex> subset) {
  FeasibilityStats s;
  for (Vertex y : subset) {
    const int after = g.residual(y) - 1;
    s.selected_sum += after;
    s.selected_max = std::max(s.selected_max, after);
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == vertex || g.residual(v) <= 0) continue;
    if (std::find(subset.begin(), subset.end(), v) != subset.end()) continue;
    s.outside_sum += g.residual(v);
    ++s.outside_count;
  }
  return s;
}

std::vector<Vertex> build_candidate_set(const LabeledGraph& g, Vertex vertex,
                                        Mode mode) {
  std::vector<Vertex> out;
  collect_candidates(g, vertex, mode, out);
  return out;
}

std::vector<Vertex> build_forbidden_set(const LabeledGraph& g, Vertex vertex,
                                        Mode mode) {
  std::vector<Vertex> out;
  if (mode == Mode::All) return out;
  for (Vertex y = vertex + 1; y < g.order(); ++y) {
    if (touches_lower_neighbour(g, vertex, y)) out.push_back(y);
  }
  return out;
}

bool residual_graphicality(const LabeledGraph& g, Vertex vertex,
                           std::span<const Vertex> subset) {
  std::vector<int> r(g.residuals().begin(), g.residuals().end());
  r[static_cast<std::size_t>(vertex)] -= static_cast<int>(subset.size());
  for (Vertex y : subset) --r[static_cast<std::size_t>(y)];
  std::sort(r.begin(), r.end(), std::greater<>());
  return is_graphical(r);
}

Enumerator::Enumerator(const DegreeSequence& d, SearchOptions options)
    : options_(options),
      n_(d.size()),
      graph_(std::span<const int>(d.degrees())),
      frames_(static_cast<std::size_t>(d.size())),
      residual_counts_(static_cast<std::size_t>(std::max(d.size(), 1)), 0) {
  if (!is_graphical(d)) {
    throw InputError("sequence " + d.to_string() + " is not graphical");
  }
  for (int r : graph_.residuals()) ++residual_counts_[static_cast<std::size_t>(r)];
  if (options_.mode != Mode::All) {
    stage1_ = stage1_triangle_free(d, options_.stage1);
    if (stage1_.rejected()) step_ = Step::Done;
  }
}

void Enumerator::join(Vertex k, std::span<const Vertex> subset) {
  for (Vertex y : subset) {
    --residual_counts_[static_cast<std::size_t>(graph_.residual(k))];
    --residual_counts_[static_cast<std::size_t>(graph_.residual(y))];
    graph_.add_edge(k, y);
    ++residual_counts_[static_cast<std::size_t>(graph_.residual(k))];
    ++residual_counts_[static_cast<std::size_t>(graph_.residual(y))];
  }
}

void Enumerator::separate(Vertex k, std::span<const Vertex> subset) {
  for (Vertex y : subset) {
    --residual_counts_[static_cast<std::size_t>(graph_.residual(k))];
    --residual_counts_[static_cast<std::size_t>(graph_.residual(y))];
    graph_.remove_edge(k, y);
    ++residual_counts_[static_cast<std::size_t>(graph_.residual(k))];
    ++residual_counts_[static_cast<std::size_t>(graph_.residual(y))];
  }
}

// Same answer as residual_graphicality(), computed on the residual
// histogram with a temporary edit instead of a copy and a sort.
bool Enumerator::histogram_graphical(Vertex k,
                                     std::span<const Vertex> subset) {
  auto& counts = residual_counts_;
  const auto rk = static_cast<std::size_t>(graph_.residual(k));
  --counts[rk];
  ++counts[rk - subset.size()];
  for (Vertex y : subset) {
    const auto ry = static_cast<std::size_t>(graph_.residual(y));
    --counts[ry];
    ++counts[ry - 1];
  }
  const bool ok = graphical_(counts);
  for (Vertex y : subset) {
    const auto ry = static_cast<std::size_t>(graph_.residual(y));
    ++counts[ry];
    --counts[ry - 1];
  }
  ++counts[rk];
  --counts[rk - subset.size()];
  return ok;
}

bool Enumerator::scan(Vertex k, bool with_feasibility) {
  Frame& f = frames_[static_cast<std::size_t>(k)];
  std::int64_t positive_sum = 0;
  int positive_count = 0;
  if (with_feasibility) {
    for (Vertex v = 0; v < n_; ++v) {
      if (v != k && graph_.residual(v) > 0) {
        positive_sum += graph_.residual(v);
        ++positive_count;
      }
    }
  }
  for (; !f.cursor.exhausted(); f.cursor.next()) {
    const std::span<const int> subset = f.cursor.values();
    ++stats_.subsets_tried;
    if (with_feasibility) {
      FeasibilityStats s;
      std::int64_t before = 0;
      for (Vertex y : subset) {
        const int r = graph_.residual(y);
        before += r;
        s.selected_sum += r - 1;
        s.selected_max = std::max(s.selected_max, r - 1);
      }
      s.outside_sum = positive_sum - before;
      s.outside_count = positive_count - static_cast<int>(subset.size());
      switch (feasibility_rule(s)) {
        case FeasibilityRule::Ok:
          break;
        case FeasibilityRule::SumExceeded:
          ++stats_.rejected_sum;
          continue;
        case FeasibilityRule::MaxExceeded:
          ++stats_.rejected_max;
          continue;
        case FeasibilityRule::TightMismatch:
          ++stats_.rejected_tight;
          continue;
      }
    }
    if (options_.residual_graphicality && !histogram_graphical(k, subset)) {
      ++stats_.rejected_graphicality;
      continue;
    }
    f.chosen.assign(subset.begin(), subset.end());
    join(k, f.chosen);
    ++stats_.commits;
    return true;
  }
  return false;
}

bool Enumerator::arrive(Vertex k) {
  ++stats_.arrivals;
  Frame& f = frames_[static_cast<std::size_t>(k)];
  f.size = graph_.residual(k);
  f.chosen.clear();
  if (f.size == 0) {
    ++stats_.commits;
    return true;
  }
  collect_candidates(graph_, k, options_.mode, f.ground);
  if (static_cast<int>(f.ground.size()) < f.size) {
    ++stats_.small_candidate_set;
    return false;
  }
  f.cursor.assign_first(f.ground, f.size);
  return scan(k, options_.mode != Mode::All && options_.feasibility_checks);
}

// Returning to k from below: replace R(k) by the next larger valid set drawn
// from the unsaturated, non-forbidden upper vertices. Only graphicality is
// re-tested here.
bool Enumerator::revisit(Vertex k) {
  ++stats_.revisits;
  Frame& f = frames_[static_cast<std::size_t>(k)];
  if (f.size == 0) return false;
  separate(k, f.chosen);
  f.ground.clear();
  for (Vertex y = k + 1; y < n_; ++y) {
    if (graph_.residual(y) <= 0) continue;
    if (options_.mode != Mode::All && touches_lower_neighbour(graph_, k, y)) {
      continue;
    }
    f.ground.push_back(y);
  }
  f.cursor.assign_first_above(f.ground, f.size, f.chosen);
  return scan(k, false);
}

bool Enumerator::next() {
  if (n_ == 0) {
    if (step_ != Step::Arrive) return false;
    step_ = Step::Done;
    ++stats_.leaves;
    return true;
  }
  while (step_ != Step::Done) {
    const bool committed =
        step_ == Step::Arrive ? arrive(depth_) : revisit(depth_);
    if (!committed) {
      if (depth_ == 0) {
        step_ = Step::Done;
        return false;
      }
      --depth_;
      step_ = Step::Revisit;
      continue;
    }
    if (observer_) observer_(depth_, graph_);
    if (depth_ == n_ - 1) {
      step_ = Step::Revisit;
      ++stats_.leaves;
      if (options_.mode == Mode::Bipartite && !is_bipartite(graph_)) {
        ++stats_.rejected_bipartite;
        continue;
      }
      return true;
    }
    ++depth_;
    step_ = Step::Arrive;
  }
  return false;
}

EnumerationSummary enumerate(const DegreeSequence& d,
                             const SearchOptions& options,
                             const RealizationSink& sink,
                             std::optional<std::uint64_t> limit) {
  Enumerator e(d, options);
  EnumerationSummary summary;
  summary.stage1 = e.stage1();
  if (limit && *limit == 0) {
    summary.stopped_early = true;
    return summary;
  }
  while (e.next()) {
    ++summary.emitted;
    const bool more = sink ? sink(e.graph()) : true;
    if (!more || (limit && summary.emitted >= *limit)) {
      summary.stopped_early = true;
      break;
    }
  }
  summary.stats = e.stats();
  return summary;
}

std::uint64_t count(const DegreeSequence& d, const SearchOptions& options) {
  return enumerate(d, options, nullptr).emitted;
}

}  // namespace trifree
