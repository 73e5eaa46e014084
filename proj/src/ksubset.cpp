#include "trifree/ksubset.hpp"

#include <algorithm>
#include <stdexcept>

namespace trifree {

SubsetCursor SubsetCursor::first(std::span<const int> ground, int k) {
  SubsetCursor c;
  c.assign_first(ground, k);
  return c;
}

SubsetCursor SubsetCursor::first_above(std::span<const int> ground, int k,
                                       std::span<const int> bound) {
  SubsetCursor c;
  c.assign_first_above(ground, k, bound);
  return c;
}

void SubsetCursor::reset(std::span<const int> ground, int k) {
  if (k < 0) throw std::invalid_argument("subset size must be non-negative");
  ground_.assign(ground.begin(), ground.end());
  positions_.assign(static_cast<std::size_t>(k), 0);
  values_.assign(static_cast<std::size_t>(k), 0);
  exhausted_ = k > static_cast<int>(ground_.size());
}

// Slots slot.. take consecutive ground positions starting at position.
void SubsetCursor::fill_from(std::size_t slot, std::size_t position) {
  for (; slot < positions_.size(); ++slot, ++position) {
    positions_[slot] = static_cast<int>(position);
    values_[slot] = ground_[position];
  }
}

void SubsetCursor::assign_first(std::span<const int> ground, int k) {
  reset(ground, k);
  if (!exhausted_) fill_from(0, 0);
}

void SubsetCursor::assign_first_above(std::span<const int> ground, int k,
                                      std::span<const int> bound) {
  reset(ground, k);
  if (static_cast<int>(bound.size()) != k) {
    throw std::invalid_argument("bound must have k elements");
  }
  if (exhausted_ || k == 0) {
    exhausted_ = true;
    return;
  }
  const std::size_t m = ground_.size();
  const std::size_t kk = static_cast<std::size_t>(k);

  // Longest prefix of bound present in the ground, with its positions.
  std::size_t matched = 0;
  for (; matched < kk - 1; ++matched) {
    auto it = std::lower_bound(ground_.begin(), ground_.end(), bound[matched]);
    if (it == ground_.end() || *it != bound[matched]) break;
    positions_[matched] = static_cast<int>(it - ground_.begin());
    values_[matched] = *it;
  }

  // Agree with bound on slots [0, t), exceed it at slot t; prefer largest t.
  for (std::size_t t = matched + 1; t-- > 0;) {
    auto it = std::upper_bound(ground_.begin(), ground_.end(), bound[t]);
    const std::size_t pos = static_cast<std::size_t>(it - ground_.begin());
    if (pos + (kk - t) <= m) {
      fill_from(t, pos);
      return;
    }
  }
  exhausted_ = true;
}

bool SubsetCursor::next() {
  if (exhausted_) return false;
  const std::size_t m = ground_.size();
  const std::size_t kk = positions_.size();
  for (std::size_t i = kk; i-- > 0;) {
    const std::size_t limit = m - kk + i;
    if (static_cast<std::size_t>(positions_[i]) < limit) {
      fill_from(i, static_cast<std::size_t>(positions_[i]) + 1);
      return true;
    }
  }
  exhausted_ = true;
  return false;
}

}  // namespace trifree
