#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "ramp/pattern_store.hpp"

using namespace ramp;
using namespace fixtures;

namespace {

template <unsigned Bits>
std::vector<std::size_t> bits_of(const PatternStore<Bits>& store, ItemIndex item) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < store.size(); ++p) {
    if ((store.word(item, p / Bits) >> (p % Bits)) & 1u) out.push_back(p);
  }
  return out;
}

template <unsigned Bits>
void add(PatternStore<Bits>& store, std::initializer_list<ItemIndex> items, Support s = 0) {
  const std::vector<ItemIndex> v(items);
  store.add(v, s);
}

}  // namespace

TEST_CASE("store: insertion layout") {
  PatternStore<32> store(17);
  add(store, {A, B, C}, 2);
  CHECK(store.size() == 1);
  const std::vector<ItemIndex> abd{A, B, D};
  CHECK(store.add(abd, 2) == 1);
  CHECK(bits_of(store, A) == std::vector<std::size_t>{0, 1});
  CHECK(bits_of(store, C) == std::vector<std::size_t>{0});
  CHECK(bits_of(store, D) == std::vector<std::size_t>{1});
  CHECK(store.allocated_blocks(E) == 0);
  CHECK(store.word(E, 0) == 0u);
  CHECK(store.pattern(1) == abd);
  CHECK(store.support(1) == 2);
  CHECK(store.is_antichain());
}

TEST_CASE_TEMPLATE("store: block boundary", W, std::integral_constant<unsigned, 1>, std::integral_constant<unsigned, 32>,
                   std::integral_constant<unsigned, 64>) {
  constexpr unsigned Bits = W::value;
  PatternStore<Bits> store(4);
  for (unsigned p = 0; p < Bits; ++p) add(store, {ItemIndex(p % 4)});
  CHECK(store.block_count() == 1);
  CHECK(count_set_bits(store.valid_mask(0)) == Bits);
  CHECK(lind_patterns<Bits>(lind_all(store)).size() == Bits);
  const std::vector<ItemIndex> all{0, 1, 2, 3};
  CHECK(store.add(all) == Bits);
  CHECK(store.block_count() == 2);
  for (ItemIndex i = 0; i < 4; ++i) CHECK(store.allocated_blocks(i) == 2);
  CHECK(store.valid_mask(1) == 1u);
  CHECK_FALSE(store.is_antichain());
}

TEST_CASE("LIND propagation keeps exactly the superset patterns") {
  // A occurs in patterns 100, 200 and 700; B in 100 and 200; C in 100.
  constexpr ItemIndex Z = 5;
  PatternStore<32> store(6);
  for (std::size_t p = 0; p <= 700; ++p) {
    if (p == 100) {
      add(store, {A, B, C});
    } else if (p == 200) {
      add(store, {A, B, D});
    } else if (p == 700) {
      add(store, {A, E});
    } else {
      add(store, {Z});
    }
  }
  std::uint64_t ops = 0;
  const auto root = lind_all(store);
  const auto la = lind_propagate(store, root, A, &ops);
  CHECK(lind_patterns<32>(la) == std::vector<std::size_t>{100, 200, 700});
  CHECK(la.size() == 3);
  CHECK(ops == root.size());

  const auto lab = lind_propagate(store, la, B, &ops);
  CHECK(lind_patterns<32>(lab) == std::vector<std::size_t>{100, 200});
  const auto labc = lind_propagate(store, lab, C, &ops);
  CHECK(lind_patterns<32>(labc) == std::vector<std::size_t>{100});

  CHECK(lind_propagate(store, Lind<32>{}, A).empty());

  auto restricted = la;
  lind_restrict(store, restricted, B);
  CHECK(restricted == lab);
}

TEST_CASE("LIND refresh picks up new patterns that extend the head") {
  PatternStore<32> store(17);
  const std::vector<ItemIndex> head{A};
  Lind<32> lind;

  lind_refresh_new(store, lind, 0, head);
  CHECK(lind.empty());

  add(store, {A, B, C}, 2);
  lind_refresh_new(store, lind, 0, head);
  REQUIRE(lind.size() == 1);
  CHECK(lind[0].block == 0u);
  CHECK(lind[0].mask == 1u);

  add(store, {E}, 2);
  lind_refresh_new(store, lind, 1, head);
  CHECK(lind_patterns<32>(lind) == std::vector<std::size_t>{0});

  const auto before = lind;
  lind_refresh_new(store, lind, store.size(), head);
  CHECK(lind == before);

  add(store, {A, B, D}, 2);
  lind_refresh_new(store, lind, 2, head);
  CHECK(lind_patterns<32>(lind) == std::vector<std::size_t>{0, 2});
  CHECK(lind.size() == 1);
}

TEST_CASE("hutmfi check") {
  PatternStore<32> store(17);
  add(store, {A, B, C}, 2);
  const auto la = lind_propagate(store, lind_all(store), A);
  const std::vector<ItemIndex> bc{B, C};
  const std::vector<ItemIndex> bd{B, D};
  CHECK(hutmfi_check(store, la, bc));
  CHECK_FALSE(hutmfi_check(store, la, bd));
  CHECK_FALSE(hutmfi_check(store, Lind<32>{}, bc));
  CHECK(naive_superset_exists(store, std::vector<ItemIndex>{A, B, C}));
  CHECK_FALSE(naive_superset_exists(store, std::vector<ItemIndex>{A, B, D}));
}

TEST_CASE("closed check") {
  PatternStore<32> store(17);
  add(store, {A, B, D}, 2);
  add(store, {A, B, C}, 2);
  const std::vector<ItemIndex> d{D};
  const std::vector<ItemIndex> c{C};
  CHECK_FALSE(closed_check(store, naive_supersets(store, d), 2));
  CHECK(closed_check(store, naive_supersets(store, c), 3));
  CHECK(closed_check(store, Lind<32>{}, 7));
}

TEST_CASE("propagated lists equal a full scan (random)") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 60; ++round) {
    const std::size_t items = 2 + rng() % 10;
    PatternStore<32> store(items);
    const std::size_t n = rng() % 150;
    for (std::size_t p = 0; p < n; ++p) {
      std::vector<ItemIndex> pat;
      for (ItemIndex i = 0; i < items; ++i) {
        if (rng() % 3 == 0) pat.push_back(i);
      }
      store.add(pat);
    }
    std::vector<ItemIndex> head;
    auto lind = lind_all(store);
    for (ItemIndex i = 0; i < items; ++i) {
      if (rng() % 2) continue;
      head.push_back(i);
      lind = lind_propagate(store, lind, i);
      CHECK(lind == naive_supersets(store, head));
    }
  }
}
