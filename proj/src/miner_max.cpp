#include <algorithm>

#include "ramp/miners.hpp"
#include "ramp/pattern_store.hpp"
#include "search.hpp"

namespace ramp {
namespace {

// Depth-first maximal itemset search with PEP, FHUT and HUTMFI pruning.
// Each open node at depth d owns linds_[d]: the stored patterns that contain
// its head. A child's list is derived from its parent's in one AND pass;
// patterns found inside a child's subtree are folded back into the parent's
// list when the child returns.
template <unsigned Bits>
class MaxMiner {
 public:
  using Context = detail::SearchContext<Bits>;
  using Bitmap = typename Context::Bitmap;
  using Candidate = typename Context::Candidate;

  MaxMiner(const RootIndex<Bits>& root, const MineOptions& options, const ItemsetSink& sink, MineStats& stats)
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

  bool hut_covered(const Lind<Bits>& lind, std::span<const ItemIndex> tail) {
    if (!naive_) return hutmfi_check(store_, lind, tail, ops());
    hut_.assign(head_.begin(), head_.end());
    hut_.insert(hut_.end(), tail.begin(), tail.end());
    return naive_superset_exists(store_, hut_, ops());
  }

  // Returns true when head plus the tail given at entry is frequent.
  bool visit(std::size_t depth, const Bitmap& head, Support head_support, std::span<const ItemIndex> tail) {
    auto& stats = ctx_.stats();
    const auto& options = ctx_.options();
    ++stats.nodes;
    Lind<Bits>& lind = linds_[depth];

    if (options.hutmfi) {
      if (hut_covered(lind, tail)) {
        ++stats.hut_pruned;
        return true;
      }
    }

    auto& candidates = candidates_[depth];
    bool hut_frequent = ctx_.count(depth, head_, head, tail, candidates);

    const std::size_t head_mark = head_.size();
    if (options.pep) {
      auto& promoted = promoted_[depth];
      pep_trim(candidates, head_support, promoted);
      stats.pep_promotions += promoted.size();
      for (const auto& p : promoted) {
        head_.push_back(p.item);
        if (!naive_) lind_restrict(store_, lind, p.item, ops());
      }
    }
    ctx_.reorder(candidates);

    if (candidates.empty()) {
      if (!head_.empty()) {
        const bool subsumed = naive_ ? naive_superset_exists(store_, head_, ops()) : !lind.empty();
        if (!subsumed) {
          store_.add(head_, head_support);
          ctx_.emit(head_, head_support, sink_);
        }
      }
      head_.resize(head_mark);
      return hut_frequent;
    }

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
      const bool child_hut = visit(depth + 1, child, c.support, std::span<const ItemIndex>(next).subspan(i + 1));
      head_.pop_back();
      if (!naive_ && store_.size() > watermark) lind_refresh_new(store_, lind, watermark, head_, ops());

      if (i == 0) {
        hut_frequent = hut_frequent && child_hut;
        // The leftmost child's HUT is this node's whole remaining search
        // space; when it is frequent every sibling subtree is covered.
        if (options.fhut && child_hut) {
          if (candidates.size() > 1) ++stats.fhut_skips;
          break;
        }
      }
    }
    head_.resize(head_mark);
    return hut_frequent;
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
  std::vector<ItemIndex> hut_;
};

}  // namespace

template <unsigned Bits>
std::uint64_t ramp_max(const RootIndex<Bits>& root, const MineOptions& options, const ItemsetSink& sink,
                       MineStats* stats) {
  MineStats local;
  MaxMiner<Bits> miner(root, options, sink, stats ? *stats : local);
  return miner.run();
}

template <unsigned Bits>
std::vector<Pattern> mine_max(const RootIndex<Bits>& root, const MineOptions& options, MineStats* stats) {
  std::vector<Pattern> out;
  ramp_max<Bits>(
      root, options,
      [&out](std::span<const Item> items, Support s) { out.push_back({Itemset(items.begin(), items.end()), s}); },
      stats);
  std::sort(out.begin(), out.end());
  return out;
}

template std::uint64_t ramp_max<1>(const RootIndex<1>&, const MineOptions&, const ItemsetSink&, MineStats*);
template std::uint64_t ramp_max<32>(const RootIndex<32>&, const MineOptions&, const ItemsetSink&, MineStats*);
template std::uint64_t ramp_max<64>(const RootIndex<64>&, const MineOptions&, const ItemsetSink&, MineStats*);
template std::vector<Pattern> mine_max<1>(const RootIndex<1>&, const MineOptions&, MineStats*);
template std::vector<Pattern> mine_max<32>(const RootIndex<32>&, const MineOptions&, MineStats*);
template std::vector<Pattern> mine_max<64>(const RootIndex<64>&, const MineOptions&, MineStats*);

}  // namespace ramp
