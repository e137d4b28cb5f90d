#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>

#include "ramp/dataset.hpp"

namespace ramp {

/// Shape of an IBM Quest style market-basket database (the "T10I4D100K"
/// family): transactions are overlays of a pool of weighted, partially
/// corrupted source patterns.
struct GeneratorParams {
  std::size_t transactions = 1000;
  std::size_t items = 100;
  std::size_t avg_len = 10;
  std::size_t patterns = 20;
  std::uint64_t seed = 1;
};

/// Deterministic for fixed parameters and standard library. Distribution:
///  - source pattern length: 1 + Poisson(avg_len / 2.5 - 1), capped at `items`;
///    each pattern after the first reuses an exponential(mean 0.5) fraction
///    of its predecessor's items, the rest drawn uniformly;
///  - pattern weight: exponential(1); corruption level: normal(0.5, 0.1)
///    clipped to [0, 1];
///  - transaction length: Poisson(avg_len), clipped to [1, items];
///  - a transaction overlays weighted random patterns, dropping each item
///    with the pattern's corruption probability, until it reaches its length;
///    when patterns stop contributing, uniform items fill the rest.
/// Throws std::invalid_argument unless every parameter is >= 1 and
/// avg_len <= items.
TransactionDatabase gen_synthetic(const GeneratorParams& params);

/// FIMI format: one line per transaction, items separated by single spaces.
void write_transactions(std::ostream& out, const TransactionDatabase& db);

}  // namespace ramp
