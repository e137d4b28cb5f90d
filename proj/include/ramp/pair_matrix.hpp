#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ramp/types.hpp"

namespace ramp {

/// Tri-state table of 2-itemset frequencies over root items, stored as a
/// lower triangle. Filled lazily while mining; only `infrequent` entries ever
/// cause pruning.
class PairMatrix {
 public:
  enum class State : std::uint8_t { unknown = 0, frequent = 1, infrequent = 2 };

  /// Matrices above this many entries are not allocated; the matrix then
  /// reports every pair as unknown.
  static constexpr std::size_t kMaxEntries = std::size_t{1} << 27;

  PairMatrix() = default;
  explicit PairMatrix(std::size_t item_count) : item_count_(item_count) {
    const std::size_t entries = item_count * (item_count > 0 ? item_count - 1 : 0) / 2;
    if (entries <= kMaxEntries) {
      cells_.assign(entries, State::unknown);
      enabled_ = true;
    }
  }

  bool enabled() const noexcept { return enabled_; }
  std::size_t item_count() const noexcept { return item_count_; }

  void record(ItemIndex a, ItemIndex b, bool frequent) noexcept {
    if (!enabled_ || a == b) return;
    cells_[cell(a, b)] = frequent ? State::frequent : State::infrequent;
  }

  State state(ItemIndex a, ItemIndex b) const noexcept {
    if (!enabled_ || a == b) return State::unknown;
    return cells_[cell(a, b)];
  }

  /// True iff some (h, x) with h in `head` is known to be infrequent.
  bool prunable(std::span<const ItemIndex> head, ItemIndex x) const noexcept {
    if (!enabled_) return false;
    for (ItemIndex h : head) {
      if (h != x && cells_[cell(h, x)] == State::infrequent) return true;
    }
    return false;
  }

 private:
  static std::size_t cell(ItemIndex a, ItemIndex b) noexcept {
    if (a < b) std::swap(a, b);
    return std::size_t{a} * (std::size_t{a} - 1) / 2 + b;
  }

  std::size_t item_count_ = 0;
  bool enabled_ = false;
  std::vector<State> cells_;
};

}  // namespace ramp
