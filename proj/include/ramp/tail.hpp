#pragma once

// Tail maintenance shared by the miners: dynamic reordering and parent
// equivalence pruning. Both work on any element type exposing `item`
// (ItemIndex) and `support` (Support).

#include <algorithm>
#include <span>
#include <vector>

#include "ramp/options.hpp"
#include "ramp/types.hpp"

namespace ramp {

struct TailItem {
  ItemIndex item = 0;
  Support support = 0;

  bool operator==(const TailItem&) const = default;
};

/// Drops tail items below `min_sup` and sorts the rest. `tie_keys[item]` is
/// the original id of an item index.
template <class T>
void dynamic_reorder(std::vector<T>& tail, Support min_sup, std::span<const Item> tie_keys,
                     ItemOrder order = ItemOrder::ascending_support) {
  std::erase_if(tail, [min_sup](const T& t) { return t.support < min_sup; });
  if (order == ItemOrder::lexicographic) {
    std::sort(tail.begin(), tail.end(),
              [&](const T& a, const T& b) { return tie_keys[a.item] < tie_keys[b.item]; });
  } else {
    std::sort(tail.begin(), tail.end(), [&](const T& a, const T& b) {
      return a.support != b.support ? a.support < b.support : tie_keys[a.item] < tie_keys[b.item];
    });
  }
}

/// Moves every tail item whose support equals `head_support` into `promoted`
/// (those items occur in every row of the head). Relative order is kept.
template <class T>
void pep_trim(std::vector<T>& tail, Support head_support, std::vector<T>& promoted) {
  promoted.clear();
  auto keep = std::stable_partition(tail.begin(), tail.end(),
                                    [head_support](const T& t) { return t.support != head_support; });
  promoted.assign(keep, tail.end());
  tail.erase(keep, tail.end());
}

}  // namespace ramp
