#ifndef TRIFREE_HARNESS_HPP
#define TRIFREE_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"

#include "trifree/degseq.hpp"
#include "trifree/search.hpp"

namespace trifree {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kMaxSweepOrder = 12;

/// Calls `visit` for every non-increasing sequence of length n with entries
/// in [1, n-1] that is graphical, in lexicographically decreasing order.
/// Returning false from `visit` stops the walk. Requires 1 <= n <= 12.
void for_each_zero_free_graphical_sequence(
    int n, const std::function<bool(const DegreeSequence&)>& visit);
std::vector<DegreeSequence> zero_free_graphical_sequences(int n);

/// n! / (c1! c2! ... cs!) over the runs of equal degrees: the number of
/// distinct labelings of the sequence's multiset.
BigInt labeled_multiplier(const DegreeSequence& d);

struct SweepOptions {
  SearchOptions search;      // mode and pruning toggles for the engine
  int oracle_max_order = 7;  // sequences longer than this skip the oracle
  int threads = 1;
};

struct SweepRow {
  DegreeSequence sequence;
  std::uint64_t engine_count = 0;
  std::optional<std::uint64_t> oracle_count;
  BigInt multiplier;
  BigInt weighted;  // engine_count * multiplier
  bool sets_match = true;
};

struct SweepReport {
  int n = 0;
  Mode mode = Mode::TriangleFree;
  std::vector<SweepRow> rows;
  BigInt engine_total;
  std::optional<BigInt> oracle_total;     // when every row had the oracle
  std::optional<BigInt> reference_total;  // user supplied
  std::vector<std::string> mismatches;

  bool passed() const {
    return mismatches.empty() &&
           (!reference_total || *reference_total == engine_total);
  }
};

/// Runs the engine on every zero-free graphical sequence of length n and,
/// when n <= oracle_max_order, compares each emitted set with the oracle.
/// Row order is deterministic regardless of the thread count.
SweepReport sweep(int n, const SweepOptions& options);

void write_tsv(std::ostream& out, const SweepReport& report);
nlohmann::json to_json(const SweepReport& report);

/// Sequences among lengths <= max_n separating the two complement bounds:
/// beta >= 3 with R == 2, and R >= 3 with beta == 2.
struct BoundWitnesses {
  std::vector<DegreeSequence> murphy_only;
  std::vector<DegreeSequence> residue_only;
};
BoundWitnesses find_bound_witnesses(int max_n, std::size_t per_kind = 5);

}  // namespace trifree

#endif  // TRIFREE_HARNESS_HPP
