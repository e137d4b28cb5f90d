#include <algorithm>

#include "ramp/miners.hpp"
#include "search.hpp"

namespace ramp {
namespace {

template <unsigned Bits>
class AllMiner {
 public:
  using Context = detail::SearchContext<Bits>;
  using Bitmap = typename Context::Bitmap;

  AllMiner(const RootIndex<Bits>& root, const MineOptions& options, const ItemsetSink& sink, MineStats& stats)
      : ctx_(root, options, stats),
        sink_(sink),
        candidates_(ctx_.max_depth() + 1),
        tails_(ctx_.max_depth() + 1) {}

  std::uint64_t run() {
    if (ctx_.root().item_count() == 0) return 0;
    const auto tail = ctx_.root_tail();
    visit(0, Bitmap{}, tail);
    return emitted_;
  }

 private:
  void visit(std::size_t depth, const Bitmap& head, std::span<const ItemIndex> tail) {
    ++ctx_.stats().nodes;
    auto& candidates = candidates_[depth];
    ctx_.count(depth, head_, head, tail, candidates);
    ctx_.reorder(candidates);

    auto& next = tails_[depth];
    next.clear();
    for (const auto& c : candidates) next.push_back(c.item);

    // Right to left: every root child to the right of the current one has
    // already recorded its pairs when a deeper node consults the matrix.
    for (std::size_t i = candidates.size(); i-- > 0;) {
      const auto c = candidates[i];
      const Bitmap child = ctx_.bitmap_of(depth, c, head);
      head_.push_back(c.item);
      ctx_.emit(head_, c.support, sink_);
      ++emitted_;
      ctx_.observe(head_, child);
      visit(depth + 1, child, std::span<const ItemIndex>(next).subspan(i + 1));
      head_.pop_back();
    }
  }

  Context ctx_;
  const ItemsetSink& sink_;
  std::vector<std::vector<typename Context::Candidate>> candidates_;
  std::vector<std::vector<ItemIndex>> tails_;
  std::vector<ItemIndex> head_;
  std::uint64_t emitted_ = 0;
};

}  // namespace

template <unsigned Bits>
std::uint64_t ramp_all(const RootIndex<Bits>& root, const MineOptions& options, const ItemsetSink& sink,
                       MineStats* stats) {
  MineStats local;
  AllMiner<Bits> miner(root, options, sink, stats ? *stats : local);
  return miner.run();
}

template <unsigned Bits>
std::vector<Pattern> mine_all(const RootIndex<Bits>& root, const MineOptions& options, MineStats* stats) {
  std::vector<Pattern> out;
  ramp_all<Bits>(
      root, options,
      [&out](std::span<const Item> items, Support s) { out.push_back({Itemset(items.begin(), items.end()), s}); },
      stats);
  std::sort(out.begin(), out.end());
  return out;
}

template std::uint64_t ramp_all<1>(const RootIndex<1>&, const MineOptions&, const ItemsetSink&, MineStats*);
template std::uint64_t ramp_all<32>(const RootIndex<32>&, const MineOptions&, const ItemsetSink&, MineStats*);
template std::uint64_t ramp_all<64>(const RootIndex<64>&, const MineOptions&, const ItemsetSink&, MineStats*);
template std::vector<Pattern> mine_all<1>(const RootIndex<1>&, const MineOptions&, MineStats*);
template std::vector<Pattern> mine_all<32>(const RootIndex<32>&, const MineOptions&, MineStats*);
template std::vector<Pattern> mine_all<64>(const RootIndex<64>&, const MineOptions&, MineStats*);

}  // namespace ramp
