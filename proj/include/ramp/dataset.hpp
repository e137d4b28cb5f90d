#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ramp/bitvec.hpp"
#include "ramp/types.hpp"

namespace ramp {

/// Horizontal transaction list as read from a FIMI file. Each transaction is
/// strictly ascending; empty transactions are kept.
struct TransactionDatabase {
  std::vector<Itemset> transactions;
  std::uint64_t item_universe = 0;  // max item id + 1, 0 when no items

  std::size_t size() const noexcept { return transactions.size(); }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Reads one transaction per non-blank line. Tokens are non-negative decimal
/// integers separated by blanks; duplicates within a line are dropped.
TransactionDatabase parse_transactions(std::istream& in);
TransactionDatabase parse_transactions(std::string_view text);

/// Builds a database from in-memory transactions, canonicalizing each one.
TransactionDatabase make_database(std::vector<Itemset> transactions);

std::map<Item, Support> item_supports(const TransactionDatabase& db);

/// Absolute threshold for a relative one: ceil(fraction * n), at least 1.
Support absolute_min_sup(double fraction, std::size_t transaction_count);

struct FrequentItem {
  Item id = 0;
  Support support = 0;

  bool operator==(const FrequentItem&) const = default;
};

/// Root-level vertical index. Infrequent items and rows holding no frequent
/// item are dropped; surviving rows are renumbered densely in input order.
/// Frequent items are indexed by ascending support, ties by ascending id.
template <unsigned Bits>
struct RootIndex {
  using Word = WordOf<Bits>;

  std::vector<FrequentItem> frequent_items;
  std::size_t row_count = 0;
  std::size_t region_count = 0;
  std::vector<Word> words;  // item-major, region_count words per item
  std::vector<RegionIndex> root_pbr;
  Support min_sup = 1;

  std::size_t item_count() const noexcept { return frequent_items.size(); }

  std::span<const Word> bitmap(ItemIndex item) const noexcept {
    return std::span<const Word>(words).subspan(static_cast<std::size_t>(item) * region_count,
                                                 region_count);
  }
};

/// `min_sup` of 0 is treated as 1.
template <unsigned Bits>
RootIndex<Bits> build_root_index(const TransactionDatabase& db, Support min_sup);

extern template RootIndex<1> build_root_index<1>(const TransactionDatabase&, Support);
extern template RootIndex<32> build_root_index<32>(const TransactionDatabase&, Support);
extern template RootIndex<64> build_root_index<64>(const TransactionDatabase&, Support);

}  // namespace ramp
