#pragma once

// Node expansion shared by the all/max/closed miners: counting every tail
// item of a node against its projected head bitmap, writing child
// projections into per-depth arena levels, 2-itemset pair pruning and
// result emission.

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

#include "ramp/bitvec.hpp"
#include "ramp/dataset.hpp"
#include "ramp/options.hpp"
#include "ramp/pair_matrix.hpp"
#include "ramp/tail.hpp"

namespace ramp::detail {

template <unsigned Bits>
class SearchContext {
 public:
  using Word = WordOf<Bits>;
  using Bitmap = ProjectedBitmap<Word>;

  struct Candidate {
    ItemIndex item = 0;
    Support support = 0;
    std::size_t offset = 0;  // into the child level of the arena
    std::size_t length = 0;
    bool projected = false;
  };

  SearchContext(const RootIndex<Bits>& root, const MineOptions& options, MineStats& stats)
      : root_(root),
        options_(options),
        stats_(stats),
        arena_(root.item_count() + 1),
        keep_zero_(options.counting == CountingStrategy::full_scan) {
    if (options.pair_prune) pairs_ = PairMatrix(root.item_count());
    tie_keys_.reserve(root.item_count());
    for (const auto& fi : root.frequent_items) tie_keys_.push_back(fi.id);
    if (keep_zero_) {
      full_regions_.resize(root.region_count);
      std::iota(full_regions_.begin(), full_regions_.end(), RegionIndex{0});
    }
  }

  const RootIndex<Bits>& root() const noexcept { return root_; }
  const MineOptions& options() const noexcept { return options_; }
  MineStats& stats() noexcept { return stats_; }
  std::size_t max_depth() const noexcept { return root_.item_count() + 1; }
  Support head_support_at_root() const noexcept { return static_cast<Support>(root_.row_count); }

  /// Every frequent item, in the configured search order.
  std::vector<ItemIndex> root_tail() const {
    std::vector<ItemIndex> tail(root_.item_count());
    std::iota(tail.begin(), tail.end(), ItemIndex{0});
    if (options_.order == ItemOrder::lexicographic) {
      std::sort(tail.begin(), tail.end(),
                [this](ItemIndex a, ItemIndex b) { return tie_keys_[a] < tie_keys_[b]; });
    }
    return tail;
  }

  /// Counts each tail item against the head of a node at `depth` and keeps
  /// the frequent ones in `out` (unordered). With ERFCO the child projection
  /// is written in the same pass. Returns true iff every tail item is
  /// frequent.
  bool count(std::size_t depth, std::span<const ItemIndex> head_items, const Bitmap& head,
             std::span<const ItemIndex> tail, std::vector<Candidate>& out) {
    out.clear();
    const std::size_t per_child = depth == 0 ? root_regions().size() : head.size();
    auto& level = arena_.level(depth + 1);
    level.ensure(options_.erfco ? tail.size() * per_child : per_child);

    const bool check_pairs = pairs_.enabled() && head_items.size() >= 2;
    const bool record_pairs = pairs_.enabled() && head_items.size() == 1;
    bool all_frequent = true;
    std::size_t cursor = 0;
    for (ItemIndex x : tail) {
      if (check_pairs && pairs_.prunable(head_items, x)) {
        ++stats_.pair_pruned;
        all_frequent = false;
        continue;
      }
      Candidate c{x, 0, cursor, 0, false};
      if (depth == 0) {
        c.support = root_.frequent_items[x].support;
        if (options_.erfco) {
          c.length = project_bitmap<Word>(root_.bitmap(x), root_regions(), level.region_slot(cursor, per_child),
                                          level.word_slot(cursor, per_child), keep_zero_);
          c.projected = true;
        }
      } else if (options_.erfco) {
        const auto r = intersect_and_project<Word>(head, root_.bitmap(x), level.region_slot(cursor, per_child),
                                                   level.word_slot(cursor, per_child), keep_zero_);
        stats_.word_and_ops += head.size();
        c.support = r.support;
        c.length = r.length;
        c.projected = true;
      } else {
        c.support = support_over_pbr<Word>(head, root_.bitmap(x));
        stats_.word_and_ops += head.size();
      }
      const bool frequent = c.support >= root_.min_sup;
      if (record_pairs) pairs_.record(head_items[0], x, frequent);
      if (frequent) {
        out.push_back(c);
        if (c.projected) cursor += c.length;
      } else {
        all_frequent = false;
      }
    }
    return all_frequent;
  }

  void reorder(std::vector<Candidate>& candidates) const {
    dynamic_reorder(candidates, root_.min_sup, tie_keys_, options_.order);
  }

  /// Head bitmap of the child `c` of a node at `depth`. Without ERFCO the
  /// projection is computed here, a second pass over the parent's regions.
  Bitmap bitmap_of(std::size_t depth, const Candidate& c, const Bitmap& head) {
    auto& level = arena_.level(depth + 1);
    if (c.projected) return level.view(c.offset, c.length);
    if (depth == 0) {
      const std::size_t n = root_regions().size();
      const std::size_t len = project_bitmap<Word>(root_.bitmap(c.item), root_regions(), level.region_slot(0, n),
                                                   level.word_slot(0, n), keep_zero_);
      return level.view(0, len);
    }
    const auto r = intersect_and_project<Word>(head, root_.bitmap(c.item), level.region_slot(0, head.size()),
                                               level.word_slot(0, head.size()), keep_zero_);
    stats_.word_and_ops += head.size();
    return level.view(0, r.length);
  }

  void observe(std::span<const ItemIndex> head, const Bitmap& bitmap) {
    if (!options_.observer) return;
    options_.observer(to_original(head), bitmap.regions);
  }

  void emit(std::span<const ItemIndex> head, Support support, const ItemsetSink& sink) {
    ++stats_.itemsets;
    sink(to_original(head), support);
  }

  std::span<const Item> to_original(std::span<const ItemIndex> head) {
    scratch_.clear();
    for (ItemIndex i : head) scratch_.push_back(tie_keys_[i]);
    std::sort(scratch_.begin(), scratch_.end());
    return scratch_;
  }

 private:
  std::span<const RegionIndex> root_regions() const noexcept {
    return keep_zero_ ? std::span<const RegionIndex>(full_regions_) : std::span<const RegionIndex>(root_.root_pbr);
  }

  const RootIndex<Bits>& root_;
  const MineOptions& options_;
  MineStats& stats_;
  ProjectionArena<Bits> arena_;
  PairMatrix pairs_;
  std::vector<Item> tie_keys_;
  std::vector<RegionIndex> full_regions_;
  std::vector<Item> scratch_;
  bool keep_zero_;
};

}  // namespace ramp::detail
