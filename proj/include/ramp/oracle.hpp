#pragma once

// Brute-force reference miners. Exponential by nature; meant for small
// databases in tests and for the `oracle` CLI subcommand.

#include <map>
#include <span>
#include <vector>

#include "ramp/dataset.hpp"
#include "ramp/types.hpp"

namespace ramp::oracle {

/// Frequent itemsets keyed by their ascending item list.
using FISet = std::map<Itemset, Support>;

/// Level-wise Apriori: join frequent k-itemsets sharing a (k-1)-prefix, drop
/// candidates with an infrequent k-subset, count the rest with a full scan.
FISet apriori_all(const TransactionDatabase& db, Support min_sup);

/// Members of `fi` with no proper superset in `fi`.
std::vector<Pattern> maximal_filter(const FISet& fi);

/// Members of `fi` with no proper superset of equal support in `fi`.
std::vector<Pattern> closed_filter(const FISet& fi);

/// Number of transactions containing every item of `items` (ascending).
Support direct_support(const TransactionDatabase& db, std::span<const Item> items);

std::vector<Pattern> to_patterns(const FISet& fi);

}  // namespace ramp::oracle
