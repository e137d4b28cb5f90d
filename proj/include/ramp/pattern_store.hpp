#pragma once

// Grow-only store of mined maximal/closed patterns kept as vertical bitmaps
// over pattern indices: bit j of item i's bitmap is set iff item i belongs to
// pattern j. Pattern bitmaps are split into blocks of W patterns, one word
// per block.
//
// A LIND (local index list) names the stored patterns relevant to one search
// node as (block, mask) pairs: the patterns that contain the node's head.
// Moving to a child ANDs each mask with the child item's word for that block.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ramp/bitvec.hpp"
#include "ramp/types.hpp"

namespace ramp {

template <class Word>
struct LindEntry {
  std::uint32_t block = 0;
  Word mask = 0;

  bool operator==(const LindEntry&) const = default;
};

template <unsigned Bits>
using Lind = std::vector<LindEntry<WordOf<Bits>>>;

template <unsigned Bits>
class PatternStore {
 public:
  using Word = WordOf<Bits>;

  explicit PatternStore(std::size_t item_count) : item_bits_(item_count) {}

  /// Appends a pattern (item indices, any order) and returns its index.
  std::size_t add(std::span<const ItemIndex> items, Support support = 0) {
    const std::size_t index = patterns_.size();
    const std::size_t block = index / Bits;
    std::vector<ItemIndex> sorted(items.begin(), items.end());
    std::sort(sorted.begin(), sorted.end());
    for (ItemIndex item : sorted) {
      auto& bits = item_bits_.at(item);
      if (bits.size() <= block) bits.resize(block + 1, 0);
      bits[block] |= static_cast<Word>(Word{1} << (index % Bits));
    }
    patterns_.push_back(std::move(sorted));
    supports_.push_back(support);
    return index;
  }

  std::size_t size() const noexcept { return patterns_.size(); }
  std::size_t item_count() const noexcept { return item_bits_.size(); }
  std::size_t block_count() const noexcept { return (patterns_.size() + Bits - 1) / Bits; }

  /// Word `block` of an item's pattern bitmap; unallocated blocks read as 0.
  Word word(ItemIndex item, std::size_t block) const noexcept {
    const auto& bits = item_bits_[item];
    return block < bits.size() ? bits[block] : Word{0};
  }

  std::size_t allocated_blocks(ItemIndex item) const noexcept { return item_bits_[item].size(); }

  /// Bits of `block` that address existing patterns.
  Word valid_mask(std::size_t block) const noexcept {
    const std::size_t first = block * Bits;
    if (first >= patterns_.size()) return 0;
    return low_bits_mask<Bits>(patterns_.size() - first);
  }

  const std::vector<ItemIndex>& pattern(std::size_t index) const { return patterns_.at(index); }
  Support support(std::size_t index) const { return supports_.at(index); }

  /// No stored pattern is a subset of another.
  bool is_antichain() const {
    for (std::size_t a = 0; a < patterns_.size(); ++a) {
      for (std::size_t b = 0; b < patterns_.size(); ++b) {
        if (a != b && std::includes(patterns_[b].begin(), patterns_[b].end(), patterns_[a].begin(),
                                    patterns_[a].end())) {
          return false;
        }
      }
    }
    return true;
  }

 private:
  std::vector<std::vector<ItemIndex>> patterns_;
  std::vector<Support> supports_;
  std::vector<std::vector<Word>> item_bits_;
};

namespace detail {

inline void bump(std::uint64_t* ops, std::uint64_t n = 1) noexcept {
  if (ops) *ops += n;
}

template <class Word>
void lind_merge(std::vector<LindEntry<Word>>& lind, std::uint32_t block, Word mask) {
  if (!lind.empty() && lind.back().block == block) {
    lind.back().mask |= mask;
  } else {
    lind.push_back({block, mask});
  }
}

}  // namespace detail

/// LIND selecting every stored pattern (the root's list).
template <unsigned Bits>
Lind<Bits> lind_all(const PatternStore<Bits>& store) {
  Lind<Bits> lind;
  for (std::size_t b = 0; b < store.block_count(); ++b) {
    lind.push_back({static_cast<std::uint32_t>(b), store.valid_mask(b)});
  }
  return lind;
}

/// Child list for head + {item}: one AND per parent block.
template <unsigned Bits>
void lind_propagate(const PatternStore<Bits>& store, const Lind<Bits>& parent, ItemIndex item,
                    Lind<Bits>& child, std::uint64_t* ops = nullptr) {
  child.clear();
  for (const auto& e : parent) {
    const auto mask = static_cast<WordOf<Bits>>(e.mask & store.word(item, e.block));
    if (mask != 0) child.push_back({e.block, mask});
  }
  detail::bump(ops, parent.size());
}

template <unsigned Bits>
Lind<Bits> lind_propagate(const PatternStore<Bits>& store, const Lind<Bits>& parent, ItemIndex item,
                          std::uint64_t* ops = nullptr) {
  Lind<Bits> child;
  lind_propagate(store, parent, item, child, ops);
  return child;
}

/// In-place propagation, used when items join the head without a new node.
template <unsigned Bits>
void lind_restrict(const PatternStore<Bits>& store, Lind<Bits>& lind, ItemIndex item,
                   std::uint64_t* ops = nullptr) {
  std::size_t out = 0;
  for (const auto& e : lind) {
    const auto mask = static_cast<WordOf<Bits>>(e.mask & store.word(item, e.block));
    if (mask != 0) lind[out++] = {e.block, mask};
  }
  detail::bump(ops, lind.size());
  lind.resize(out);
}

/// Appends patterns with index >= `watermark` that contain every item of
/// `head`. Earlier entries are left as they are.
template <unsigned Bits>
void lind_refresh_new(const PatternStore<Bits>& store, Lind<Bits>& lind, std::size_t watermark,
                      std::span<const ItemIndex> head, std::uint64_t* ops = nullptr) {
  using Word = WordOf<Bits>;
  const std::size_t count = store.size();
  if (watermark >= count) return;
  for (std::size_t block = watermark / Bits; block * Bits < count; ++block) {
    Word mask = store.valid_mask(block);
    if (block == watermark / Bits) {
      mask = static_cast<Word>(mask & ~low_bits_mask<Bits>(watermark % Bits));
    }
    for (ItemIndex item : head) {
      if (mask == 0) break;
      mask = static_cast<Word>(mask & store.word(item, block));
      detail::bump(ops);
    }
    if (mask != 0) detail::lind_merge(lind, static_cast<std::uint32_t>(block), mask);
  }
}

/// True iff some pattern selected by `lind` contains every item of `tail`.
template <unsigned Bits>
bool hutmfi_check(const PatternStore<Bits>& store, const Lind<Bits>& lind,
                  std::span<const ItemIndex> tail, std::uint64_t* ops = nullptr) {
  using Word = WordOf<Bits>;
  for (const auto& e : lind) {
    Word mask = e.mask;
    for (ItemIndex item : tail) {
      mask = static_cast<Word>(mask & store.word(item, e.block));
      detail::bump(ops);
      if (mask == 0) break;
    }
    if (mask != 0) return true;
  }
  return false;
}

/// True iff no pattern selected by `lind` has exactly `support`. With `lind`
/// holding the stored supersets of an itemset, that means the itemset is
/// closed with respect to the store.
template <unsigned Bits>
bool closed_check(const PatternStore<Bits>& store, const Lind<Bits>& lind, Support support) {
  for (const auto& e : lind) {
    auto mask = e.mask;
    while (mask != 0) {
      const unsigned bit = static_cast<unsigned>(std::countr_zero(mask));
      mask = static_cast<WordOf<Bits>>(mask & (mask - 1));
      if (store.support(std::size_t{e.block} * Bits + bit) == support) return false;
    }
  }
  return true;
}

/// Pattern indices named by a LIND, ascending.
template <unsigned Bits>
std::vector<std::size_t> lind_patterns(const Lind<Bits>& lind) {
  std::vector<std::size_t> out;
  for (const auto& e : lind) {
    auto mask = e.mask;
    while (mask != 0) {
      out.push_back(std::size_t{e.block} * Bits + static_cast<unsigned>(std::countr_zero(mask)));
      mask = static_cast<WordOf<Bits>>(mask & (mask - 1));
    }
  }
  return out;
}

/// Linear scan over every block of the store: LIND selecting all patterns
/// that contain every item of `items`. The reference path that FastLMFI's
/// propagated lists replace.
template <unsigned Bits>
Lind<Bits> naive_supersets(const PatternStore<Bits>& store, std::span<const ItemIndex> items,
                           std::uint64_t* ops = nullptr) {
  using Word = WordOf<Bits>;
  Lind<Bits> out;
  for (std::size_t block = 0; block < store.block_count(); ++block) {
    Word mask = store.valid_mask(block);
    for (ItemIndex item : items) {
      mask = static_cast<Word>(mask & store.word(item, block));
      detail::bump(ops);
      if (mask == 0) break;
    }
    if (mask != 0) out.push_back({static_cast<std::uint32_t>(block), mask});
  }
  return out;
}

/// Linear-scan counterpart of hutmfi_check: stops at the first hit.
template <unsigned Bits>
bool naive_superset_exists(const PatternStore<Bits>& store, std::span<const ItemIndex> items,
                           std::uint64_t* ops = nullptr) {
  using Word = WordOf<Bits>;
  for (std::size_t block = 0; block < store.block_count(); ++block) {
    Word mask = store.valid_mask(block);
    for (ItemIndex item : items) {
      mask = static_cast<Word>(mask & store.word(item, block));
      detail::bump(ops);
      if (mask == 0) break;
    }
    if (mask != 0) return true;
  }
  return false;
}

}  // namespace ramp
