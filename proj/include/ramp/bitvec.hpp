#pragma once

// Vertical bit-vector arithmetic over fixed-width regions.
//
// A bitmap is an array of W-bit words ("regions"); bit r of the bitmap lives
// in word r / W at position r % W. A projected bitmap only stores the words
// listed in its region index list (PBR), in ascending region order, so
// counting and projecting touch nothing outside that list.

#include <bit>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "ramp/types.hpp"

namespace ramp {

using RegionIndex = std::uint32_t;

template <unsigned Bits>
struct RegionTraits;

// Debug width: one row per region. Used to replay hand-worked examples where
// region indices coincide with row numbers.
template <>
struct RegionTraits<1> {
  using Word = std::uint8_t;
};

template <>
struct RegionTraits<32> {
  using Word = std::uint32_t;
};

template <>
struct RegionTraits<64> {
  using Word = std::uint64_t;
};

template <unsigned Bits>
using WordOf = typename RegionTraits<Bits>::Word;

template <std::unsigned_integral Word>
constexpr unsigned count_set_bits(Word word) noexcept {
  return static_cast<unsigned>(std::popcount(word));
}

template <unsigned Bits>
constexpr std::size_t regions_for_rows(std::size_t rows) noexcept {
  return (rows + Bits - 1) / Bits;
}

/// Word with the lowest `n` bits set, n in [0, Bits].
template <unsigned Bits>
constexpr WordOf<Bits> low_bits_mask(std::size_t n) noexcept {
  using Word = WordOf<Bits>;
  constexpr Word full = Bits >= std::numeric_limits<Word>::digits ? static_cast<Word>(~Word{0})
                                                                    : static_cast<Word>((Word{1} << Bits) - 1);
  if (n >= Bits) return full;
  return static_cast<Word>((Word{1} << n) - 1);
}

template <unsigned Bits>
constexpr void set_bit(std::span<WordOf<Bits>> words, std::size_t row) noexcept {
  using Word = WordOf<Bits>;
  words[row / Bits] |= static_cast<Word>(Word{1} << (row % Bits));
}

template <unsigned Bits>
constexpr bool test_bit(std::span<const WordOf<Bits>> words, std::size_t row) noexcept {
  using Word = WordOf<Bits>;
  return (words[row / Bits] >> (row % Bits)) & Word{1};
}

/// A head bitmap restricted to its projected bit regions. `words[j]` holds
/// region `regions[j]`; every region not listed is zero.
template <class Word>
struct ProjectedBitmap {
  std::span<const RegionIndex> regions;
  std::span<const Word> words;

  std::size_t size() const noexcept { return regions.size(); }
  bool empty() const noexcept { return regions.empty(); }
};

/// Simple loop: AND-count over every region of two full bitmaps.
template <class Word>
Support support_full_scan(std::span<const Word> head, std::span<const Word> item) noexcept {
  Support support = 0;
  const std::size_t n = head.size() < item.size() ? head.size() : item.size();
  for (std::size_t r = 0; r < n; ++r) support += count_set_bits<Word>(head[r] & item[r]);
  return support;
}

/// PBR-guided count over full (unprojected) bitmaps. Equals the simple loop
/// whenever `head` is zero outside `pbr`.
template <class Word>
Support support_over_pbr(std::span<const Word> head, std::span<const Word> item,
                         std::span<const RegionIndex> pbr) noexcept {
  Support support = 0;
  for (RegionIndex r : pbr) support += count_set_bits<Word>(head[r] & item[r]);
  return support;
}

template <class Word>
Support support_over_pbr(const ProjectedBitmap<Word>& head, std::span<const Word> item) noexcept {
  Support support = 0;
  const std::size_t n = head.size();
  for (std::size_t j = 0; j < n; ++j) {
    support += count_set_bits<Word>(head.words[j] & item[head.regions[j]]);
  }
  return support;
}

struct ProjectResult {
  Support support = 0;
  std::size_t length = 0;  // regions written to the child
};

/// Counts `head AND item` and writes the child projection in the same pass.
/// With `keep_zero_regions` every parent region is kept (simple-loop
/// baseline); otherwise only regions with a nonzero AND result.
template <class Word>
ProjectResult intersect_and_project(const ProjectedBitmap<Word>& head, std::span<const Word> item,
                                    std::span<RegionIndex> child_regions, std::span<Word> child_words,
                                    bool keep_zero_regions = false) {
  const std::size_t n = head.size();
  if (child_regions.size() < n || child_words.size() < n) {
    throw std::logic_error("projection arena slot too small");
  }
  ProjectResult result;
  std::size_t out = 0;
  if (keep_zero_regions) {
    for (std::size_t j = 0; j < n; ++j) {
      const RegionIndex r = head.regions[j];
      const Word w = head.words[j] & item[r];
      child_regions[j] = r;
      child_words[j] = w;
      result.support += count_set_bits<Word>(w);
    }
    out = n;
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      const RegionIndex r = head.regions[j];
      const Word w = head.words[j] & item[r];
      if (w != 0) {
        child_regions[out] = r;
        child_words[out] = w;
        ++out;
        result.support += count_set_bits<Word>(w);
      }
    }
  }
  result.length = out;
  return result;
}

/// Projects a full item bitmap onto `pbr` (no AND involved): the depth-one
/// head of a single item.
template <class Word>
std::size_t project_bitmap(std::span<const Word> item, std::span<const RegionIndex> pbr,
                           std::span<RegionIndex> child_regions, std::span<Word> child_words,
                           bool keep_zero_regions = false) {
  if (child_regions.size() < pbr.size() || child_words.size() < pbr.size()) {
    throw std::logic_error("projection arena slot too small");
  }
  std::size_t out = 0;
  for (RegionIndex r : pbr) {
    if (keep_zero_regions || item[r] != 0) {
      child_regions[out] = r;
      child_words[out] = item[r];
      ++out;
    }
  }
  return out;
}

/// Per-depth projection memory. Depth d holds the projections of the children
/// of the node currently open at depth d - 1; a level is overwritten as soon
/// as the search returns above it.
template <unsigned Bits>
class ProjectionArena {
 public:
  using Word = WordOf<Bits>;

  struct Level {
    std::vector<RegionIndex> regions;
    std::vector<Word> words;

    void ensure(std::size_t capacity) {
      if (regions.size() < capacity) {
        regions.resize(capacity);
        words.resize(capacity);
      }
    }
    std::span<RegionIndex> region_slot(std::size_t offset, std::size_t length) {
      return std::span(regions).subspan(offset, length);
    }
    std::span<Word> word_slot(std::size_t offset, std::size_t length) {
      return std::span(words).subspan(offset, length);
    }
    ProjectedBitmap<Word> view(std::size_t offset, std::size_t length) const {
      return {std::span<const RegionIndex>(regions).subspan(offset, length),
              std::span<const Word>(words).subspan(offset, length)};
    }
  };

  explicit ProjectionArena(std::size_t max_depth) : levels_(max_depth + 1) {}

  Level& level(std::size_t depth) { return levels_.at(depth); }
  std::size_t depth_capacity() const noexcept { return levels_.size(); }

  std::size_t words_reserved() const noexcept {
    std::size_t total = 0;
    for (const auto& l : levels_) total += l.words.size();
    return total;
  }

 private:
  std::vector<Level> levels_;
};

}  // namespace ramp
