#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "ramp/dataset.hpp"
#include "ramp/types.hpp"

namespace fixtures {

// Items A..Q are 0..16.
inline constexpr ramp::Item A = 0, B = 1, C = 2, D = 3, E = 4, I = 8;

inline const char* kWorkedExample =
    "0 1 2 5 6 11\n"
    "0 1 7 8\n"
    "1 4 9 14\n"
    "2 4 8 12 16\n"
    "0 1 3 13\n"
    "0 1 2 3 10\n"
    "0 15\n";

inline ramp::TransactionDatabase worked_example() { return ramp::parse_transactions(std::string_view(kWorkedExample)); }

inline std::vector<ramp::Pattern> patterns(std::initializer_list<ramp::Pattern> list) {
  std::vector<ramp::Pattern> out(list);
  std::sort(out.begin(), out.end());
  return out;
}

/// Small random database: up to `max_items` items, up to `max_rows` rows,
/// each row with its own density.
inline ramp::TransactionDatabase random_db(std::mt19937_64& rng, unsigned max_items = 12,
                                           unsigned max_rows = 30) {
  std::uniform_int_distribution<unsigned> n_items(1, max_items);
  std::uniform_int_distribution<unsigned> n_rows(1, max_rows);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const unsigned items = n_items(rng);
  const unsigned rows = n_rows(rng);
  const double density = 0.15 + 0.6 * unit(rng);
  std::vector<ramp::Itemset> transactions(rows);
  for (auto& t : transactions) {
    for (ramp::Item i = 0; i < items; ++i) {
      if (unit(rng) < density) t.push_back(i);
    }
  }
  return ramp::make_database(std::move(transactions));
}

inline std::string describe(const std::vector<ramp::Pattern>& ps) {
  std::string s;
  for (const auto& p : ps) {
    s += '{';
    for (std::size_t i = 0; i < p.items.size(); ++i) s += (i ? " " : "") + std::to_string(p.items[i]);
    s += "}:" + std::to_string(p.support) + ' ';
  }
  return s;
}

}  // namespace fixtures
