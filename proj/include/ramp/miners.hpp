#pragma once

#include <cstdint>
#include <vector>

#include "ramp/dataset.hpp"
#include "ramp/options.hpp"
#include "ramp/types.hpp"

namespace ramp {

/// Emits every frequent itemset of `root` exactly once, with its support, in
/// depth-first pre-order. Returns the number of emissions. Exceptions thrown
/// by `sink` abort the mine and propagate.
template <unsigned Bits>
std::uint64_t ramp_all(const RootIndex<Bits>& root, const MineOptions& options, const ItemsetSink& sink,
                       MineStats* stats = nullptr);

/// Emits exactly the maximal frequent itemsets. Each is emitted once, when
/// it enters the pattern store.
template <unsigned Bits>
std::uint64_t ramp_max(const RootIndex<Bits>& root, const MineOptions& options, const ItemsetSink& sink,
                       MineStats* stats = nullptr);

/// Emits exactly the closed frequent itemsets.
template <unsigned Bits>
std::uint64_t ramp_closed(const RootIndex<Bits>& root, const MineOptions& options,
                          const ItemsetSink& sink, MineStats* stats = nullptr);

/// Convenience wrappers collecting results, sorted by item sequence.
template <unsigned Bits>
std::vector<Pattern> mine_all(const RootIndex<Bits>& root, const MineOptions& options = {},
                              MineStats* stats = nullptr);
template <unsigned Bits>
std::vector<Pattern> mine_max(const RootIndex<Bits>& root, const MineOptions& options = {},
                              MineStats* stats = nullptr);
template <unsigned Bits>
std::vector<Pattern> mine_closed(const RootIndex<Bits>& root, const MineOptions& options = {},
                                 MineStats* stats = nullptr);

#define RAMP_DECLARE_MINERS(W)                                                                    \
  extern template std::uint64_t ramp_all<W>(const RootIndex<W>&, const MineOptions&,              \
                                            const ItemsetSink&, MineStats*);                      \
  extern template std::uint64_t ramp_max<W>(const RootIndex<W>&, const MineOptions&,              \
                                            const ItemsetSink&, MineStats*);                      \
  extern template std::uint64_t ramp_closed<W>(const RootIndex<W>&, const MineOptions&,           \
                                               const ItemsetSink&, MineStats*);                   \
  extern template std::vector<Pattern> mine_all<W>(const RootIndex<W>&, const MineOptions&,       \
                                                   MineStats*);                                   \
  extern template std::vector<Pattern> mine_max<W>(const RootIndex<W>&, const MineOptions&,       \
                                                   MineStats*);                                   \
  extern template std::vector<Pattern> mine_closed<W>(const RootIndex<W>&, const MineOptions&,    \
                                                      MineStats*);

RAMP_DECLARE_MINERS(1)
RAMP_DECLARE_MINERS(32)
RAMP_DECLARE_MINERS(64)

#undef RAMP_DECLARE_MINERS

}  // namespace ramp
