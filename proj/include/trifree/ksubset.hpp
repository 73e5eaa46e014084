#ifndef TRIFREE_KSUBSET_HPP
#define TRIFREE_KSUBSET_HPP

#include <span>
#include <vector>

namespace trifree {

/// Walks the k-subsets of a sorted ground set in lexicographic order.
/// Subsets compare as sorted tuples of ground values, so a cursor can be
/// restarted above a bound that is not itself drawn from the ground.
class SubsetCursor {
 public:
  SubsetCursor() = default;

  static SubsetCursor first(std::span<const int> ground, int k);
  static SubsetCursor first_above(std::span<const int> ground, int k,
                                  std::span<const int> bound);

  /// In-place variants; reuse the cursor's storage.
  void assign_first(std::span<const int> ground, int k);
  void assign_first_above(std::span<const int> ground, int k,
                          std::span<const int> bound);

  /// Moves to the immediate successor. Returns false (and becomes
  /// exhausted) after the last subset.
  bool next();

  bool exhausted() const { return exhausted_; }
  int k() const { return static_cast<int>(positions_.size()); }
  std::span<const int> ground() const { return ground_; }
  /// Positions into ground, strictly increasing.
  std::span<const int> positions() const { return positions_; }
  /// The subset itself, as ground values.
  std::span<const int> values() const { return values_; }

 private:
  void reset(std::span<const int> ground, int k);
  void fill_from(std::size_t slot, std::size_t position);

  std::vector<int> ground_;
  std::vector<int> positions_;
  std::vector<int> values_;
  bool exhausted_ = true;
};

}  // namespace trifree

#endif  // TRIFREE_KSUBSET_HPP
