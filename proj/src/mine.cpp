#include "ramp/mine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ramp {
namespace {

template <unsigned Bits>
std::uint64_t mine_at(const TransactionDatabase& db, Support min_sup, Mode mode, const MineOptions& options,
                      const ItemsetSink& sink, MineStats* stats) {
  const auto root = build_root_index<Bits>(db, min_sup);
  switch (mode) {
    case Mode::all:
      return ramp_all<Bits>(root, options, sink, stats);
    case Mode::max:
      return ramp_max<Bits>(root, options, sink, stats);
    case Mode::closed:
      return ramp_closed<Bits>(root, options, sink, stats);
  }
  throw std::logic_error("unknown mode");
}

}  // namespace

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::all:
      return "all";
    case Mode::max:
      return "max";
    case Mode::closed:
      return "closed";
  }
  return "?";
}

std::uint64_t mine(const TransactionDatabase& db, Support min_sup, Mode mode, const MineOptions& options,
                   unsigned width, const ItemsetSink& sink, MineStats* stats) {
  switch (width) {
    case 1:
      return mine_at<1>(db, min_sup, mode, options, sink, stats);
    case 32:
      return mine_at<32>(db, min_sup, mode, options, sink, stats);
    case 64:
      return mine_at<64>(db, min_sup, mode, options, sink, stats);
    default:
      throw std::invalid_argument("unsupported word width " + std::to_string(width));
  }
}

std::vector<Pattern> mine_patterns(const TransactionDatabase& db, Support min_sup, Mode mode,
                                   const MineOptions& options, unsigned width, MineStats* stats) {
  std::vector<Pattern> out;
  mine(
      db, min_sup, mode, options, width,
      [&out](std::span<const Item> items, Support s) { out.push_back({Itemset(items.begin(), items.end()), s}); },
      stats);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ramp
