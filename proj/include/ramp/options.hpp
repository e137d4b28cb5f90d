#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>

#include "ramp/bitvec.hpp"
#include "ramp/types.hpp"

namespace ramp {

enum class Mode { all, max, closed };

/// How supports are counted at each node.
enum class CountingStrategy {
  pbr,        // visit only projected bit regions
  full_scan,  // simple loop over every region
};

/// Order of tail items after dynamic reordering.
enum class ItemOrder {
  ascending_support,  // ties by ascending item id
  lexicographic,      // item id only
};

/// Superset lookup used by the maximal and closed miners.
enum class Subsumption {
  lind,   // per-node local index lists over the pattern bitmaps
  naive,  // scan every stored block at every check
};

/// Receives one mined itemset: original item ids, ascending.
using ItemsetSink = std::function<void(std::span<const Item>, Support)>;

/// Called once per search node with its head (original ids, ascending) and
/// the region indices of its projected head bitmap.
using NodeObserver = std::function<void(std::span<const Item>, std::span<const RegionIndex>)>;

struct MineOptions {
  bool pair_prune = true;
  bool pep = true;
  bool fhut = true;
  bool hutmfi = true;
  bool erfco = true;
  CountingStrategy counting = CountingStrategy::pbr;
  ItemOrder order = ItemOrder::ascending_support;
  Subsumption subsumption = Subsumption::lind;
  NodeObserver observer;
};

struct MineStats {
  std::uint64_t nodes = 0;
  std::uint64_t itemsets = 0;
  std::uint64_t word_and_ops = 0;         // head-word AND item-word during counting/projection
  std::uint64_t containment_ops = 0;      // pattern-bitmap word ANDs for subsumption checks
  std::uint64_t pair_pruned = 0;
  std::uint64_t hut_pruned = 0;
  std::uint64_t fhut_skips = 0;
  std::uint64_t pep_promotions = 0;
};

std::string_view to_string(Mode mode);

}  // namespace ramp
