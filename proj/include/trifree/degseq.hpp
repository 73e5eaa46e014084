#ifndef TRIFREE_DEGSEQ_HPP
#define TRIFREE_DEGSEQ_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trifree {

/// Raised for malformed or out-of-range user input (sequence text, bad
/// parameters). Logic faults inside the library use std::logic_error.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A zero-free degree sequence d1 >= d2 >= ... >= dn >= 1 with every entry
/// at most n - 1. Graphicality is a separate question (is_graphical).
class DegreeSequence {
 public:
  struct Run {
    int value;
    int count;
    bool operator==(const Run&) const = default;
  };

  DegreeSequence() = default;

  /// Sorts non-increasing, strips zeros and checks 1 <= di <= n - 1.
  /// Throws InputError on negative entries or di >= n.
  static DegreeSequence from_degrees(std::vector<int> degrees);

  const std::vector<int>& degrees() const { return degrees_; }
  int size() const { return static_cast<int>(degrees_.size()); }
  int operator[](int i) const { return degrees_[static_cast<std::size_t>(i)]; }
  std::int64_t sum() const { return sum_; }

  /// Exponent form b1^c1 ... bs^cs with b1 > ... > bs.
  std::vector<Run> runs() const;

  /// Comma-separated form, e.g. "3,3,2,2,2".
  std::string to_string() const;

  bool operator==(const DegreeSequence&) const = default;

 private:
  std::vector<int> degrees_;
  std::int64_t sum_ = 0;
};

/// Accepts "3,3,2,2,2" or "4^4,3^6" (tokens may be mixed). Whitespace is
/// ignored.
DegreeSequence parse_sequence(std::string_view text);

/// Erdos-Gallai test on a histogram: counts[v] is the number of entries
/// equal to v. Holds its scratch buffers so the search can reuse it.
class GraphicalityTest {
 public:
  bool operator()(std::span<const int> counts);

 private:
  std::vector<std::int64_t> count_upto_;
  std::vector<std::int64_t> sum_upto_;
};

/// True iff some simple graph realizes the sequence. Zeros are allowed;
/// entries may be in any order. Negative entries give false.
bool is_graphical(std::span<const int> degrees);
inline bool is_graphical(const DegreeSequence& d) {
  return is_graphical(std::span<const int>(d.degrees()));
}

/// (n-1-dn, ..., n-1-d1); may contain zeros.
std::vector<int> complement(std::span<const int> degrees);
inline std::vector<int> complement(const DegreeSequence& d) {
  return complement(std::span<const int>(d.degrees()));
}

/// Number of zeros left when Havel-Hakimi reduction terminates.
/// Throws InputError if the sequence is not graphical.
int residue(std::span<const int> degrees);

/// Greedy elimination bound on the independence number of every
/// realization. O(n) after sorting.
int murphy_bound(std::span<const int> degrees);

enum class Stage1Outcome { Proceed, RejectMantel, RejectResidue, RejectMurphy };

std::string_view to_string(Stage1Outcome outcome);

struct Stage1Checks {
  bool mantel = true;
  bool residue = true;
  bool murphy = true;

  static Stage1Checks none() { return {false, false, false}; }
};

/// value/threshold carry the quantity that decided the outcome:
/// RejectMantel: value = S, threshold = floor(n^2 / 2);
/// RejectResidue: value = R(complement); RejectMurphy: value = beta(complement);
/// threshold = 3 for the latter two.
struct Stage1Verdict {
  Stage1Outcome outcome = Stage1Outcome::Proceed;
  std::int64_t value = 0;
  std::int64_t threshold = 0;

  bool rejected() const { return outcome != Stage1Outcome::Proceed; }
};

/// Cheap tests that rule out any triangle-free realization. Applied in the
/// order Mantel, residue, Murphy; each may be switched off.
Stage1Verdict stage1_triangle_free(const DegreeSequence& d,
                                   Stage1Checks checks = {});

}  // namespace trifree

#endif  // TRIFREE_DEGSEQ_HPP
