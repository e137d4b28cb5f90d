#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace ramp {

/// Item identifier as it appears in the input file.
using Item = std::uint32_t;

/// Dense index of a frequent item inside a RootIndex (0..k-1).
using ItemIndex = std::uint32_t;

/// Number of transactions containing an itemset.
using Support = std::uint32_t;

/// Ascending, duplicate-free list of item ids.
using Itemset = std::vector<Item>;

struct Pattern {
  Itemset items;
  Support support = 0;

  auto operator<=>(const Pattern&) const = default;
};

}  // namespace ramp
