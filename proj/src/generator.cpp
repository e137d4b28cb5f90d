#include "ramp/generator.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <stdexcept>
#include <string>

namespace ramp {
namespace {

struct SourcePattern {
  std::vector<Item> items;
  double corruption = 0.5;
};

}  // namespace

TransactionDatabase gen_synthetic(const GeneratorParams& p) {
  if (p.transactions < 1 || p.items < 1 || p.avg_len < 1 || p.patterns < 1) {
    throw std::invalid_argument("generator parameters must all be >= 1");
  }
  if (p.avg_len > p.items) throw std::invalid_argument("avg_len must not exceed the number of items");

  std::mt19937_64 rng(p.seed);
  std::uniform_int_distribution<Item> uniform_item(0, static_cast<Item>(p.items - 1));
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const double pattern_mean = std::max(0.0, static_cast<double>(p.avg_len) / 2.5 - 1.0);
  std::poisson_distribution<std::size_t> pattern_len(pattern_mean);
  std::exponential_distribution<double> reuse(2.0);
  std::exponential_distribution<double> weight(1.0);
  std::normal_distribution<double> corruption(0.5, 0.1);

  std::vector<SourcePattern> sources(p.patterns);
  std::vector<double> weights(p.patterns);
  for (std::size_t s = 0; s < p.patterns; ++s) {
    const std::size_t len = std::min(p.items, 1 + (pattern_mean > 0 ? pattern_len(rng) : 0));
    auto& items = sources[s].items;
    if (s > 0) {
      const auto& prev = sources[s - 1].items;
      const std::size_t reused =
          std::min({len, prev.size(), static_cast<std::size_t>(reuse(rng) * static_cast<double>(len))});
      std::sample(prev.begin(), prev.end(), std::back_inserter(items), reused, rng);
    }
    while (items.size() < len) {
      const Item candidate = uniform_item(rng);
      if (std::find(items.begin(), items.end(), candidate) == items.end()) items.push_back(candidate);
    }
    std::sort(items.begin(), items.end());
    sources[s].corruption = std::clamp(corruption(rng), 0.0, 1.0);
    weights[s] = weight(rng);
  }
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::poisson_distribution<std::size_t> txn_len(static_cast<double>(p.avg_len));

  std::vector<Itemset> transactions(p.transactions);
  std::vector<char> present(p.items, 0);
  for (auto& t : transactions) {
    const std::size_t target = std::clamp<std::size_t>(txn_len(rng), 1, p.items);
    const std::size_t max_attempts = 4 * target + 8;
    for (std::size_t attempt = 0; t.size() < target && attempt < max_attempts; ++attempt) {
      const auto& source = sources[pick(rng)];
      for (Item item : source.items) {
        if (unit(rng) < source.corruption) continue;
        if (!present[item]) {
          present[item] = 1;
          t.push_back(item);
        }
      }
    }
    while (t.size() < target) {
      const Item item = uniform_item(rng);
      if (!present[item]) {
        present[item] = 1;
        t.push_back(item);
      }
    }
    for (Item item : t) present[item] = 0;
  }
  return make_database(std::move(transactions));
}

void write_transactions(std::ostream& out, const TransactionDatabase& db) {
  std::string buffer;
  char digits[16];
  for (const auto& t : db.transactions) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i != 0) buffer.push_back(' ');
      buffer.append(digits, std::to_chars(digits, digits + sizeof digits, t[i]).ptr);
    }
    buffer.push_back('\n');
    if (buffer.size() >= (1u << 16)) {
      out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
      buffer.clear();
    }
  }
  out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
}

}  // namespace ramp
