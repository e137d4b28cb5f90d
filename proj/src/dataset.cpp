#include "ramp/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace ramp {
namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

void canonicalize(Itemset& t) {
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
}

void parse_line(std::string_view line, std::size_t line_no, Itemset& out) {
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && is_blank(line[pos])) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !is_blank(line[end])) ++end;
    const std::string_view token = line.substr(pos, end - pos);
    Item value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range) {
      throw ParseError(line_no, "item id out of range: '" + std::string(token) + "'");
    }
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(line_no, "malformed item id: '" + std::string(token) + "'");
    }
    out.push_back(value);
    pos = end;
  }
}

std::uint64_t universe_of(const std::vector<Itemset>& transactions) {
  std::uint64_t universe = 0;
  for (const auto& t : transactions) {
    if (!t.empty()) universe = std::max<std::uint64_t>(universe, std::uint64_t{t.back()} + 1);
  }
  return universe;
}

}  // namespace

TransactionDatabase parse_transactions(std::istream& in) {
  TransactionDatabase db;
  std::string line;
  std::size_t line_no = 0;
  Itemset items;
  while (std::getline(in, line)) {
    ++line_no;
    items.clear();
    parse_line(line, line_no, items);
    if (items.empty() && std::all_of(line.begin(), line.end(), is_blank)) continue;
    canonicalize(items);
    db.transactions.push_back(items);
  }
  if (in.bad()) throw std::ios_base::failure("read error");
  db.item_universe = universe_of(db.transactions);
  return db;
}

TransactionDatabase parse_transactions(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_transactions(in);
}

TransactionDatabase make_database(std::vector<Itemset> transactions) {
  for (auto& t : transactions) canonicalize(t);
  TransactionDatabase db;
  db.item_universe = universe_of(transactions);
  db.transactions = std::move(transactions);
  return db;
}

std::map<Item, Support> item_supports(const TransactionDatabase& db) {
  std::map<Item, Support> supports;
  for (const auto& t : db.transactions) {
    for (Item i : t) ++supports[i];
  }
  return supports;
}

Support absolute_min_sup(double fraction, std::size_t transaction_count) {
  const double raw = std::ceil(fraction * static_cast<double>(transaction_count));
  if (raw < 1.0) return 1;
  return static_cast<Support>(raw);
}

template <unsigned Bits>
RootIndex<Bits> build_root_index(const TransactionDatabase& db, Support min_sup) {
  RootIndex<Bits> index;
  index.min_sup = std::max<Support>(min_sup, 1);

  std::unordered_map<Item, Support> counts;
  counts.reserve(1024);
  for (const auto& t : db.transactions) {
    for (Item i : t) ++counts[i];
  }
  for (const auto& [id, support] : counts) {
    if (support >= index.min_sup) index.frequent_items.push_back({id, support});
  }
  std::sort(index.frequent_items.begin(), index.frequent_items.end(),
            [](const FrequentItem& a, const FrequentItem& b) {
              return a.support != b.support ? a.support < b.support : a.id < b.id;
            });

  std::unordered_map<Item, ItemIndex> dense;
  dense.reserve(index.frequent_items.size() * 2);
  for (std::size_t k = 0; k < index.frequent_items.size(); ++k) {
    dense.emplace(index.frequent_items[k].id, static_cast<ItemIndex>(k));
  }

  // Keep rows with at least one frequent item.
  std::vector<std::vector<ItemIndex>> rows;
  rows.reserve(db.size());
  std::vector<ItemIndex> row;
  for (const auto& t : db.transactions) {
    row.clear();
    for (Item i : t) {
      if (auto it = dense.find(i); it != dense.end()) row.push_back(it->second);
    }
    if (!row.empty()) rows.push_back(row);
  }

  index.row_count = rows.size();
  index.region_count = regions_for_rows<Bits>(rows.size());
  index.words.assign(index.region_count * index.frequent_items.size(), 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (ItemIndex k : rows[r]) {
      auto bitmap = std::span(index.words).subspan(std::size_t{k} * index.region_count, index.region_count);
      set_bit<Bits>(bitmap, r);
    }
  }

  for (std::size_t region = 0; region < index.region_count; ++region) {
    for (std::size_t k = 0; k < index.frequent_items.size(); ++k) {
      if (index.words[k * index.region_count + region] != 0) {
        index.root_pbr.push_back(static_cast<RegionIndex>(region));
        break;
      }
    }
  }
  return index;
}

template RootIndex<1> build_root_index<1>(const TransactionDatabase&, Support);
template RootIndex<32> build_root_index<32>(const TransactionDatabase&, Support);
template RootIndex<64> build_root_index<64>(const TransactionDatabase&, Support);

}  // namespace ramp
