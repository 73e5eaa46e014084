#include "trifree/degseq.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace trifree {

namespace {

int parse_int(std::string_view token, std::string_view whole) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last) {
    throw InputError("malformed token '" + std::string(token) + "' in '" +
                     std::string(whole) + "'");
  }
  return value;
}

}  // namespace

DegreeSequence DegreeSequence::from_degrees(std::vector<int> degrees) {
  for (int v : degrees) {
    if (v < 0) throw InputError("negative degree " + std::to_string(v));
  }
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  while (!degrees.empty() && degrees.back() == 0) degrees.pop_back();
  const int n = static_cast<int>(degrees.size());
  if (!degrees.empty() && degrees.front() > n - 1) {
    throw InputError("degree " + std::to_string(degrees.front()) +
                     " exceeds n - 1 = " + std::to_string(n - 1));
  }
  DegreeSequence d;
  d.sum_ = std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0});
  d.degrees_ = std::move(degrees);
  return d;
}

std::vector<DegreeSequence::Run> DegreeSequence::runs() const {
  std::vector<Run> out;
  for (int v : degrees_) {
    if (out.empty() || out.back().value != v) {
      out.push_back({v, 1});
    } else {
      ++out.back().count;
    }
  }
  return out;
}

std::string DegreeSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(degrees_[i]);
  }
  return out;
}

DegreeSequence parse_sequence(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') compact += c;
  }
  if (compact.empty()) throw InputError("empty degree sequence");

  std::vector<int> degrees;
  std::string_view rest = compact;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view token = rest.substr(0, comma);
    const auto caret = token.find('^');
    if (caret == std::string_view::npos) {
      degrees.push_back(parse_int(token, text));
    } else {
      const int value = parse_int(token.substr(0, caret), text);
      const int copies = parse_int(token.substr(caret + 1), text);
      if (copies < 1) {
        throw InputError("multiplicity must be positive in '" +
                         std::string(token) + "'");
      }
      if (copies > 1'000'000) {
        throw InputError("multiplicity too large in '" + std::string(token) +
                         "'");
      }
      degrees.insert(degrees.end(), static_cast<std::size_t>(copies), value);
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return DegreeSequence::from_degrees(std::move(degrees));
}

// Erdos-Gallai evaluated once per run of equal values, from the largest
// value down. With k entries taken so far (all >= v) and lhs their sum, the
// inequality is lhs <= k(k-1) + sum over the remaining entries u of min(u, k).
bool GraphicalityTest::operator()(std::span<const int> counts) {
  const std::size_t size = counts.size();
  count_upto_.assign(size + 1, 0);
  sum_upto_.assign(size + 1, 0);
  // count_upto_[t + 1] = #entries <= t, sum_upto_[t + 1] = their total.
  for (std::size_t v = 0; v < size; ++v) {
    count_upto_[v + 1] = count_upto_[v] + counts[v];
    sum_upto_[v + 1] = sum_upto_[v] + static_cast<std::int64_t>(counts[v]) *
                                          static_cast<std::int64_t>(v);
  }
  if (sum_upto_[size] % 2 != 0) return false;

  std::int64_t k = 0;
  std::int64_t lhs = 0;
  for (std::size_t v = size; v-- > 1;) {
    if (counts[v] == 0) continue;
    k += counts[v];
    lhs += static_cast<std::int64_t>(counts[v]) * static_cast<std::int64_t>(v);
    // Remaining entries have values 0..v-1; those <= k contribute themselves.
    const std::int64_t below = static_cast<std::int64_t>(v) - 1;
    const std::int64_t cut = std::min(below, k);
    const std::int64_t rhs =
        k * (k - 1) + sum_upto_[cut + 1] +
        k * (count_upto_[below + 1] - count_upto_[cut + 1]);
    if (lhs > rhs) return false;
  }
  return true;
}

bool is_graphical(std::span<const int> degrees) {
  if (degrees.empty()) return true;
  int top = 0;
  for (int v : degrees) {
    if (v < 0) return false;
    top = std::max(top, v);
  }
  if (top > static_cast<int>(degrees.size()) - 1) return false;
  std::vector<int> counts(static_cast<std::size_t>(top) + 1, 0);
  for (int v : degrees) ++counts[static_cast<std::size_t>(v)];
  GraphicalityTest test;
  return test(counts);
}

std::vector<int> complement(std::span<const int> degrees) {
  const int n = static_cast<int>(degrees.size());
  std::vector<int> out;
  out.reserve(degrees.size());
  for (auto it = degrees.rbegin(); it != degrees.rend(); ++it) {
    out.push_back(n - 1 - *it);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

int residue(std::span<const int> degrees) {
  if (!is_graphical(degrees)) {
    throw InputError("residue requires a graphical sequence");
  }
  std::vector<int> work(degrees.begin(), degrees.end());
  std::sort(work.begin(), work.end(), std::greater<>());
  while (!work.empty() && work.front() > 0) {
    const int top = work.front();
    work.erase(work.begin());
    for (int i = 0; i < top; ++i) {
      if (--work[static_cast<std::size_t>(i)] < 0) {
        throw std::logic_error("Havel-Hakimi produced a negative entry");
      }
    }
    std::sort(work.begin(), work.end(), std::greater<>());
  }
  return static_cast<int>(work.size());
}

int murphy_bound(std::span<const int> degrees) {
  std::vector<int> ascending(degrees.begin(), degrees.end());
  std::sort(ascending.begin(), ascending.end());
  const std::size_t n = ascending.size();
  int bound = 0;
  // Each step keeps one vertex of least remaining degree and discards at
  // most that many neighbours; any surviving set of size n - i has least
  // original degree at most ascending[i].
  for (std::size_t i = 0; i < n;
       i += static_cast<std::size_t>(std::max(ascending[i], 0)) + 1) {
    ++bound;
  }
  return bound;
}

std::string_view to_string(Stage1Outcome outcome) {
  switch (outcome) {
    case Stage1Outcome::Proceed:
      return "Proceed";
    case Stage1Outcome::RejectMantel:
      return "RejectMantel";
    case Stage1Outcome::RejectResidue:
      return "RejectResidue";
    case Stage1Outcome::RejectMurphy:
      return "RejectMurphy";
  }
  return "?";
}

Stage1Verdict stage1_triangle_free(const DegreeSequence& d,
                                   Stage1Checks checks) {
  const std::int64_t n = d.size();
  if (checks.mantel) {
    const std::int64_t limit = n * n / 2;
    if (d.sum() > limit) {
      return {Stage1Outcome::RejectMantel, d.sum(), limit};
    }
  }
  if (!checks.residue && !checks.murphy) return {};
  const std::vector<int> comp = complement(d);
  if (checks.residue) {
    const int r = residue(comp);
    if (r >= 3) return {Stage1Outcome::RejectResidue, r, 3};
  }
  if (checks.murphy) {
    const int b = murphy_bound(comp);
    if (b >= 3) return {Stage1Outcome::RejectMurphy, b, 3};
  }
  return {};
}

}  // namespace trifree
