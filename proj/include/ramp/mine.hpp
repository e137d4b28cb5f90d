#pragma once

#include <cstdint>
#include <vector>

#include "ramp/dataset.hpp"
#include "ramp/miners.hpp"
#include "ramp/options.hpp"

namespace ramp {

/// Region widths the library is built for. 1 is a debug width (one row per
/// region); 32 and 64 are the production widths.
constexpr bool is_supported_width(unsigned width) noexcept { return width == 1 || width == 32 || width == 64; }

/// Builds the root index at `width` bits per region and runs the miner for
/// `mode`. Throws std::invalid_argument for an unsupported width.
std::uint64_t mine(const TransactionDatabase& db, Support min_sup, Mode mode, const MineOptions& options,
                   unsigned width, const ItemsetSink& sink, MineStats* stats = nullptr);

/// Same, collecting the result sorted by item sequence.
std::vector<Pattern> mine_patterns(const TransactionDatabase& db, Support min_sup, Mode mode,
                                   const MineOptions& options = {}, unsigned width = 64,
                                   MineStats* stats = nullptr);

}  // namespace ramp
