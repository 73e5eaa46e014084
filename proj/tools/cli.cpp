#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "trifree/degseq.hpp"
#include "trifree/graph.hpp"
#include "trifree/harness.hpp"
#include "trifree/search.hpp"

namespace trifree::cli {

namespace {

constexpr const char* kOracleCapEnv = "TRIFREE_ORACLE_CAP";

struct Config {
  std::string sequence;
  std::string mode = "tf";
  bool mode_given = false;
  std::optional<std::uint64_t> limit;
  std::string format;
  bool no_feasibility = false;
  bool no_residual_graphical = false;
  std::string stage1 = "mantel,residue,murphy";
  int sweep_n = 0;
  int threads = 1;
  std::optional<int> oracle_cap;
  std::string reference_total;
  std::string out_path;
  bool verbose = false;
};

Stage1Checks parse_stage1(const std::string& text) {
  Stage1Checks checks = Stage1Checks::none();
  if (text == "none") return checks;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "mantel") {
      checks.mantel = true;
    } else if (item == "residue") {
      checks.residue = true;
    } else if (item == "murphy") {
      checks.murphy = true;
    } else if (!item.empty()) {
      throw InputError("unknown stage-1 rule '" + item + "'");
    }
  }
  return checks;
}

SearchOptions search_options(const Config& c) {
  SearchOptions o;
  o.mode = parse_mode(c.mode);
  o.feasibility_checks = !c.no_feasibility;
  o.residual_graphicality = !c.no_residual_graphical;
  o.stage1 = parse_stage1(c.stage1);
  return o;
}

int default_oracle_cap() {
  if (const char* env = std::getenv(kOracleCapEnv)) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw InputError(std::string(kOracleCapEnv) + " is not an integer");
    }
  }
  return 7;
}

// Data goes to --out when given, otherwise to `out`.
class DataStream {
 public:
  DataStream(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream_ = &fallback;
    } else {
      file_.open(path);
      if (!file_) throw InputError("cannot open output file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(values[i]);
  }
  return s;
}

void print_stats(std::ostream& err, const SearchStats& s) {
  err << "# arrivals=" << s.arrivals << " revisits=" << s.revisits
      << " commits=" << s.commits << " subsets=" << s.subsets_tried
      << " small_candidate_set=" << s.small_candidate_set
      << " rejected_sum=" << s.rejected_sum
      << " rejected_max=" << s.rejected_max
      << " rejected_tight=" << s.rejected_tight
      << " rejected_graphicality=" << s.rejected_graphicality
      << " leaves=" << s.leaves
      << " rejected_bipartite=" << s.rejected_bipartite << '\n';
}

int cmd_check(const Config& c, std::ostream& out, std::ostream& err) {
  const DegreeSequence d = parse_sequence(c.sequence);
  const bool graphical = is_graphical(d);
  const std::int64_t n = d.size();
  out << "sequence=" << d.to_string() << '\n'
      << "n=" << n << '\n'
      << "degree_sum=" << d.sum() << '\n'
      << "graphical=" << (graphical ? "true" : "false") << '\n';
  if (!graphical) {
    err << "error: sequence " << d.to_string() << " is not graphical\n";
    return kExitInputError;
  }
  const auto comp = complement(d);
  out << "mantel_limit=" << n * n / 2 << '\n'
      << "complement=" << join(comp) << '\n'
      << "complement_residue=" << residue(comp) << '\n'
      << "complement_murphy=" << murphy_bound(comp) << '\n';
  const Stage1Verdict v = stage1_triangle_free(d, parse_stage1(c.stage1));
  out << "verdict=" << to_string(v.outcome) << '\n';
  switch (v.outcome) {
    case Stage1Outcome::Proceed:
      out << "# stage 1 passed; a full search is needed to decide\n";
      return kExitOk;
    case Stage1Outcome::RejectMantel:
      out << "# no triangle-free realization: degree sum " << v.value
          << " > " << v.threshold << '\n';
      break;
    case Stage1Outcome::RejectResidue:
      out << "# no triangle-free realization: complement residue "
          << v.value << " >= 3\n";
      break;
    case Stage1Outcome::RejectMurphy:
      out << "# no triangle-free realization: complement Murphy bound "
          << v.value << " >= 3\n";
      break;
  }
  return kExitRejected;
}

int cmd_gen(const Config& c, std::ostream& out, std::ostream& err) {
  const DegreeSequence d = parse_sequence(c.sequence);
  const SearchOptions options = search_options(c);
  const std::string format = c.format.empty() ? "edges" : c.format;
  if (format != "edges" && format != "g6" && format != "count") {
    throw InputError("unknown format '" + format + "'");
  }
  DataStream data(c.out_path, out);
  std::ostream& os = data.get();
  const auto summary = enumerate(
      d, options,
      [&](const LabeledGraph& g) {
        if (format == "edges") {
          os << format_edge_list(g) << '\n';
        } else if (format == "g6") {
          os << to_graph6(g) << '\n';
        }
        return true;
      },
      c.limit);
  if (format == "count") os << summary.emitted << '\n';
  os.flush();
  err << "# emitted " << summary.emitted << '\n';
  if (c.verbose) {
    err << "# stage1=" << to_string(summary.stage1.outcome) << '\n';
    print_stats(err, summary.stats);
  }
  return summary.stage1.rejected() ? kExitRejected : kExitOk;
}

int cmd_count(const Config& c, std::ostream& out, std::ostream& err) {
  const DegreeSequence d = parse_sequence(c.sequence);
  const auto summary = enumerate(d, search_options(c), nullptr, c.limit);
  DataStream data(c.out_path, out);
  data.get() << summary.emitted << '\n';
  if (c.verbose) {
    err << "# stage1=" << to_string(summary.stage1.outcome) << '\n';
    print_stats(err, summary.stats);
  }
  return summary.stage1.rejected() ? kExitRejected : kExitOk;
}

int cmd_verify(const Config& c, std::ostream& out, std::ostream& err) {
  if (c.sweep_n < 1 || c.sweep_n > kMaxSweepOrder) {
    throw InputError("--n must be in [1, " + std::to_string(kMaxSweepOrder) +
                     "]");
  }
  const std::string format = c.format.empty() ? "tsv" : c.format;
  if (format != "tsv" && format != "json") {
    throw InputError("unknown verify format '" + format + "'");
  }
  std::vector<Mode> modes;
  if (c.mode_given) {
    modes.push_back(parse_mode(c.mode));
  } else {
    modes = {Mode::All, Mode::TriangleFree, Mode::Bipartite};
  }
  SweepOptions options;
  options.search = search_options(c);
  options.oracle_max_order = c.oracle_cap.value_or(default_oracle_cap());
  options.threads = c.threads;

  DataStream data(c.out_path, out);
  nlohmann::json reports = nlohmann::json::array();
  bool passed = true;
  for (Mode m : modes) {
    options.search.mode = m;
    SweepReport report = sweep(c.sweep_n, options);
    if (!c.reference_total.empty()) {
      report.reference_total = BigInt(c.reference_total);
    }
    passed = passed && report.passed();
    if (format == "tsv") {
      write_tsv(data.get(), report);
    } else {
      reports.push_back(to_json(report));
    }
    if (c.verbose) {
      err << "# n=" << c.sweep_n << " mode=" << to_string(m)
          << (report.passed() ? " pass" : " FAIL") << '\n';
    }
  }
  if (format == "json") data.get() << reports.dump(2) << '\n';
  return passed ? kExitOk : kExitRejected;
}

void add_search_flags(CLI::App* cmd, Config& c) {
  cmd->add_option("--mode", c.mode, "all | tf | bip")
      ->each([&c](const std::string&) { c.mode_given = true; });
  cmd->add_flag("--no-feasibility", c.no_feasibility,
                "Disable the three feasibility checks");
  cmd->add_flag("--no-residual-graphical", c.no_residual_graphical,
                "Disable the residual graphicality test");
  cmd->add_option("--stage1", c.stage1,
                  "Stage-1 rules: comma list of mantel,residue,murphy or none");
  cmd->add_option("--out", c.out_path, "Write the data stream to PATH");
  cmd->add_flag("-v,--verbose", c.verbose, "Search statistics on stderr");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Enumerate triangle-free and bipartite realizations of a "
               "degree sequence"};
  app.require_subcommand(1);
  Config c;

  auto* check = app.add_subcommand("check", "Graphicality and stage-1 report");
  check->add_option("sequence", c.sequence, "e.g. 3,3,2,2,2 or 4^4,3^6")
      ->required();
  check->add_option("--stage1", c.stage1, "Stage-1 rules to apply");

  auto* gen = app.add_subcommand("gen", "Print realizations, one per line");
  gen->add_option("sequence", c.sequence)->required();
  add_search_flags(gen, c);
  gen->add_option("--limit", c.limit, "Stop after N realizations");
  gen->add_option("--format", c.format, "edges | g6 | count");

  auto* cnt = app.add_subcommand("count", "Print the number of realizations");
  cnt->add_option("sequence", c.sequence)->required();
  add_search_flags(cnt, c);
  cnt->add_option("--limit", c.limit, "Stop counting at N");

  auto* verify =
      app.add_subcommand("verify", "Sweep all sequences of length n");
  verify->add_option("--n", c.sweep_n, "Sequence length")->required();
  add_search_flags(verify, c);
  verify->add_option("--format", c.format, "tsv | json");
  verify->add_option("--threads", c.threads, "Worker threads");
  verify->add_option("--oracle-cap", c.oracle_cap,
                     "Largest n cross-checked by brute force (default $" +
                         std::string(kOracleCapEnv) + " or 7)");
  verify->add_option("--reference-total", c.reference_total,
                     "Expected aggregate labeled count");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*check) return cmd_check(c, out, err);
    if (*gen) return cmd_gen(c, out, err);
    if (*cnt) return cmd_count(c, out, err);
    if (*verify) return cmd_verify(c, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace trifree::cli
