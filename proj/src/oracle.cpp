#include "ramp/oracle.hpp"

#include <algorithm>
#include <set>

namespace ramp::oracle {
namespace {

bool is_subset(const Itemset& small, const Itemset& big) {
  return small.size() < big.size() && std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

Support direct_support(const TransactionDatabase& db, std::span<const Item> items) {
  Support support = 0;
  for (const auto& t : db.transactions) {
    if (std::includes(t.begin(), t.end(), items.begin(), items.end())) ++support;
  }
  return support;
}

FISet apriori_all(const TransactionDatabase& db, Support min_sup) {
  min_sup = std::max<Support>(min_sup, 1);
  FISet result;

  std::vector<Itemset> level;
  for (const auto& [item, support] : item_supports(db)) {
    if (support >= min_sup) {
      level.push_back({item});
      result.emplace(Itemset{item}, support);
    }
  }

  while (!level.empty()) {
    const std::set<Itemset> previous(level.begin(), level.end());
    std::vector<Itemset> candidates;
    // Join: pairs sharing all but the last item. `level` is sorted.
    for (std::size_t a = 0; a < level.size(); ++a) {
      for (std::size_t b = a + 1; b < level.size(); ++b) {
        if (!std::equal(level[a].begin(), level[a].end() - 1, level[b].begin())) break;
        Itemset candidate = level[a];
        candidate.push_back(level[b].back());
        // Prune: every k-subset must be frequent.
        bool keep = true;
        for (std::size_t drop = 0; drop + 2 < candidate.size() && keep; ++drop) {
          Itemset subset;
          for (std::size_t i = 0; i < candidate.size(); ++i) {
            if (i != drop) subset.push_back(candidate[i]);
          }
          keep = previous.contains(subset);
        }
        if (keep) candidates.push_back(std::move(candidate));
      }
    }

    // Scan.
    std::vector<Support> counts(candidates.size(), 0);
    for (const auto& t : db.transactions) {
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (std::includes(t.begin(), t.end(), candidates[c].begin(), candidates[c].end())) ++counts[c];
      }
    }

    level.clear();
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (counts[c] >= min_sup) {
        result.emplace(candidates[c], counts[c]);
        level.push_back(std::move(candidates[c]));
      }
    }
    std::sort(level.begin(), level.end());
  }
  return result;
}

std::vector<Pattern> maximal_filter(const FISet& fi) {
  std::vector<Pattern> out;
  for (const auto& [items, support] : fi) {
    const bool maximal = std::none_of(fi.begin(), fi.end(), [&](const auto& other) { return is_subset(items, other.first); });
    if (maximal) out.push_back({items, support});
  }
  return out;
}

std::vector<Pattern> closed_filter(const FISet& fi) {
  std::vector<Pattern> out;
  for (const auto& [items, support] : fi) {
    const bool closed = std::none_of(fi.begin(), fi.end(), [&](const auto& other) {
      return other.second == support && is_subset(items, other.first);
    });
    if (closed) out.push_back({items, support});
  }
  return out;
}

std::vector<Pattern> to_patterns(const FISet& fi) {
  std::vector<Pattern> out;
  out.reserve(fi.size());
  for (const auto& [items, support] : fi) out.push_back({items, support});
  return out;
}

}  // namespace ramp::oracle
