#include "trifree/harness.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <thread>

#include "trifree/oracle.hpp"

namespace trifree {

namespace {

bool walk(int n, std::vector<int>& prefix, int parity,
          const std::function<bool(const DegreeSequence&)>& visit) {
  if (static_cast<int>(prefix.size()) == n) {
    if (parity != 0 || !is_graphical(prefix)) return true;
    return visit(DegreeSequence::from_degrees(prefix));
  }
  const int top = prefix.empty() ? n - 1 : prefix.back();
  for (int v = top; v >= 1; --v) {
    prefix.push_back(v);
    const bool more = walk(n, prefix, (parity + v) % 2, visit);
    prefix.pop_back();
    if (!more) return false;
  }
  return true;
}

std::string mode_label(Mode m) { return std::string(to_string(m)); }

}  // namespace

void for_each_zero_free_graphical_sequence(
    int n, const std::function<bool(const DegreeSequence&)>& visit) {
  if (n < 1 || n > kMaxSweepOrder) {
    throw InputError("sequence length must be in [1, " +
                     std::to_string(kMaxSweepOrder) + "]");
  }
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  walk(n, prefix, 0, visit);
}

std::vector<DegreeSequence> zero_free_graphical_sequences(int n) {
  std::vector<DegreeSequence> out;
  for_each_zero_free_graphical_sequence(n, [&](const DegreeSequence& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

BigInt labeled_multiplier(const DegreeSequence& d) {
  BigInt value = 1;
  for (int i = 2; i <= d.size(); ++i) value *= i;
  for (const auto& run : d.runs()) {
    for (int i = 2; i <= run.count; ++i) value /= i;
  }
  return value;
}

SweepReport sweep(int n, const SweepOptions& options) {
  SweepReport report;
  report.n = n;
  report.mode = options.search.mode;
  for (auto& d : zero_free_graphical_sequences(n)) {
    SweepRow row;
    row.sequence = std::move(d);
    report.rows.push_back(std::move(row));
  }

  const bool use_oracle = n <= options.oracle_max_order;
  std::atomic<std::size_t> next_row{0};
  auto work = [&] {
    for (std::size_t i = next_row++; i < report.rows.size(); i = next_row++) {
      SweepRow& row = report.rows[i];
      std::vector<EdgeList> emitted;
      const auto summary = enumerate(
          row.sequence, options.search, [&](const LabeledGraph& g) {
            if (use_oracle) emitted.push_back(canonical_edge_list(g));
            return true;
          });
      row.engine_count = summary.emitted;
      row.multiplier = labeled_multiplier(row.sequence);
      row.weighted = row.multiplier * row.engine_count;
      if (use_oracle) {
        const auto expected =
            oracle::brute_force(row.sequence, options.search.mode,
                                options.oracle_max_order);
        row.oracle_count = expected.size();
        row.sets_match = emitted == expected;
      }
    }
  };
  const int threads = std::max(1, options.threads);
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
  }

  BigInt oracle_total = 0;
  for (const SweepRow& row : report.rows) {
    report.engine_total += row.weighted;
    if (row.oracle_count) {
      oracle_total += row.multiplier * *row.oracle_count;
    }
    if (!row.sets_match) {
      report.mismatches.push_back(
          row.sequence.to_string() + ": engine " +
          std::to_string(row.engine_count) + " vs oracle " +
          std::to_string(row.oracle_count.value_or(0)) +
          (row.engine_count == row.oracle_count ? " (sets differ)" : ""));
    }
  }
  if (use_oracle) report.oracle_total = oracle_total;
  return report;
}

void write_tsv(std::ostream& out, const SweepReport& report) {
  out << "sequence\tmode\tengine\toracle\tmultiplier\tweighted\tmatch\n";
  for (const SweepRow& row : report.rows) {
    out << row.sequence.to_string() << '\t' << mode_label(report.mode) << '\t'
        << row.engine_count << '\t';
    if (row.oracle_count) {
      out << *row.oracle_count;
    } else {
      out << '-';
    }
    out << '\t' << row.multiplier << '\t' << row.weighted << '\t'
        << (row.sets_match ? "yes" : "NO") << '\n';
  }
  out << "# n=" << report.n << " mode=" << mode_label(report.mode)
      << " sequences=" << report.rows.size()
      << " engine_total=" << report.engine_total;
  if (report.oracle_total) out << " oracle_total=" << *report.oracle_total;
  if (report.reference_total) {
    out << " reference_total=" << *report.reference_total;
  }
  out << " mismatches=" << report.mismatches.size()
      << " status=" << (report.passed() ? "pass" : "FAIL") << '\n';
  for (const auto& m : report.mismatches) out << "# mismatch " << m << '\n';
}

nlohmann::json to_json(const SweepReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const SweepRow& row : report.rows) {
    nlohmann::json r{
        {"sequence", row.sequence.to_string()},
        {"engine", row.engine_count},
        {"multiplier", row.multiplier.str()},
        {"weighted", row.weighted.str()},
        {"match", row.sets_match},
    };
    r["oracle"] = row.oracle_count ? nlohmann::json(*row.oracle_count)
                                   : nlohmann::json(nullptr);
    rows.push_back(std::move(r));
  }
  nlohmann::json j{
      {"n", report.n},
      {"mode", mode_label(report.mode)},
      {"rows", std::move(rows)},
      {"engine_total", report.engine_total.str()},
      {"mismatches", report.mismatches},
      {"passed", report.passed()},
  };
  j["oracle_total"] = report.oracle_total
                          ? nlohmann::json(report.oracle_total->str())
                          : nlohmann::json(nullptr);
  j["reference_total"] = report.reference_total
                             ? nlohmann::json(report.reference_total->str())
                             : nlohmann::json(nullptr);
  return j;
}

BoundWitnesses find_bound_witnesses(int max_n, std::size_t per_kind) {
  BoundWitnesses w;
  for (int n = 1; n <= max_n; ++n) {
    for_each_zero_free_graphical_sequence(n, [&](const DegreeSequence& d) {
      const auto comp = complement(d);
      const int r = residue(comp);
      const int b = murphy_bound(comp);
      if (b >= 3 && r == 2 && w.murphy_only.size() < per_kind) {
        w.murphy_only.push_back(d);
      }
      if (r >= 3 && b == 2 && w.residue_only.size() < per_kind) {
        w.residue_only.push_back(d);
      }
      return w.murphy_only.size() < per_kind ||
             w.residue_only.size() < per_kind;
    });
  }
  return w;
}

}  // namespace trifree
