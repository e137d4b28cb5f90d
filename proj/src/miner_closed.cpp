#include <algorithm>

#include "ramp/miners.hpp"
#include "ramp/pattern_store.hpp"
#include "search.hpp"

namespace ramp {
namespace {

// Closed itemset search over the same LIND machinery as the maximal miner.
//
// With PEP every tail item of equal support is absorbed into the head, so no
// equal-support superset can appear inside the node's own subtree; the head
// is closed iff no stored superset has its support, and the check runs when
// the node opens. A head that fails the check has a closure item outside its
// search space, so nothing below it is closed either and the subtree is
// skipped (the closed-mode HUTMFI prune).
//
// Without PEP the check runs after the subtree returns, against the list
// refreshed with everything the subtree stored.
template <unsigned Bits>
class ClosedMiner {
 public:
  using Context = detail::SearchContext<Bits>;
  using Bitmap = typename Context::Bitmap;
  using Candidate = typename Context::Candidate;

  ClosedMiner(const RootIndex<Bits>& root, const MineOptions& options, const ItemsetSink& sink, MineStats& stats)
      : ctx_(root, options, stats),
        sink_(sink),
        store_(root.item_count()),
        naive_(options.subsumption == Subsumption::naive),
        candidates_(ctx_.max_depth() + 1),
        promoted_(ctx_.max_depth() + 1),
        tails_(ctx_.max_depth() + 1),
        linds_(ctx_.max_depth() + 2) {}

  std::uint64_t run() {
    if (ctx_.root().item_count() == 0) return 0;
    const auto tail = ctx_.root_tail();
    visit(0, Bitmap{}, ctx_.head_support_at_root(), tail);
    return store_.size();
  }

 private:
  std::uint64_t* ops() { return &ctx_.stats().containment_ops; }

  bool head_is_closed(const Lind<Bits>& lind, Support support) {
    if (!naive_) return closed_check(store_, lind, support);
    return closed_check(store_, naive_supersets(store_, std::span<const ItemIndex>(head_), ops()), support);
  }

  void store_head(Lind<Bits>& lind, Support support) {
    const std::size_t index = store_.add(head_, support);
    if (!naive_) lind_refresh_new(store_, lind, index, head_, ops());
    ctx_.emit(head_, support, sink_);
  }

  void visit(std::size_t depth, const Bitmap& head, Support head_support, std::span<const ItemIndex> tail) {
    auto& stats = ctx_.stats();
    const auto& options = ctx_.options();
    ++stats.nodes;
    Lind<Bits>& lind = linds_[depth];

    auto& candidates = candidates_[depth];
    ctx_.count(depth, head_, head, tail, candidates);

    const std::size_t head_mark = head_.size();
    if (options.pep) {
      auto& promoted = promoted_[depth];
      pep_trim(candidates, head_support, promoted);
      stats.pep_promotions += promoted.size();
      for (const auto& p : promoted) {
        head_.push_back(p.item);
        if (!naive_) lind_restrict(store_, lind, p.item, ops());
      }
      if (!head_.empty()) {
        if (head_is_closed(lind, head_support)) {
          store_head(lind, head_support);
        } else if (options.hutmfi) {
          ++stats.hut_pruned;
          head_.resize(head_mark);
          return;
        }
      }
    }
    ctx_.reorder(candidates);

    auto& next = tails_[depth];
    next.clear();
    for (const auto& c : candidates) next.push_back(c.item);

    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const Candidate c = candidates[i];
      const Bitmap child = ctx_.bitmap_of(depth, c, head);
      const std::size_t watermark = store_.size();
      if (!naive_) lind_propagate(store_, lind, c.item, linds_[depth + 1], ops());
      head_.push_back(c.item);
      ctx_.observe(head_, child);
      visit(depth + 1, child, c.support, std::span<const ItemIndex>(next).subspan(i + 1));
      head_.pop_back();
      if (!naive_ && store_.size() > watermark) lind_refresh_new(store_, lind, watermark, head_, ops());
    }

    if (!options.pep && !head_.empty() && head_is_closed(lind, head_support)) {
      store_head(lind, head_support);
    }
    head_.resize(head_mark);
  }

  Context ctx_;
  const ItemsetSink& sink_;
  PatternStore<Bits> store_;
  bool naive_;
  std::vector<std::vector<Candidate>> candidates_;
  std::vector<std::vector<Candidate>> promoted_;
  std::vector<std::vector<ItemIndex>> tails_;
  std::vector<Lind<Bits>> linds_;
  std::vector<ItemIndex> head_;
};

}  // namespace

template <unsigned Bits>
std::uint64_t ramp_closed(const RootIndex<Bits>& root, const MineOptions& options, const ItemsetSink& sink,
                          MineStats* stats) {
  MineStats local;
  ClosedMiner<Bits> miner(root, options, sink, stats ? *stats : local);
  return miner.run();
}

template <unsigned Bits>
std::vector<Pattern> mine_closed(const RootIndex<Bits>& root, const MineOptions& options, MineStats* stats) {
  std::vector<Pattern> out;
  ramp_closed<Bits>(
      root, options,
      [&out](std::span<const Item> items, Support s) { out.push_back({Itemset(items.begin(), items.end()), s}); },
      stats);
  std::sort(out.begin(), out.end());
  return out;
}

template std::uint64_t ramp_closed<1>(const RootIndex<1>&, const MineOptions&, const ItemsetSink&, MineStats*);
template std::uint64_t ramp_closed<32>(const RootIndex<32>&, const MineOptions&, const ItemsetSink&, MineStats*);
template std::uint64_t ramp_closed<64>(const RootIndex<64>&, const MineOptions&, const ItemsetSink&, MineStats*);
template std::vector<Pattern> mine_closed<1>(const RootIndex<1>&, const MineOptions&, MineStats*);
template std::vector<Pattern> mine_closed<32>(const RootIndex<32>&, const MineOptions&, MineStats*);
template std::vector<Pattern> mine_closed<64>(const RootIndex<64>&, const MineOptions&, MineStats*);

}  // namespace ramp
