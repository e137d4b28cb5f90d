#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "ramp/dataset.hpp"

using namespace ramp;
using namespace fixtures;

TEST_CASE("parse: basic lines") {
  const auto db = parse_transactions(std::string_view("1 2 3\n1 2\n"));
  REQUIRE(db.size() == 2);
  CHECK(db.transactions[0] == Itemset{1, 2, 3});
  CHECK(db.transactions[1] == Itemset{1, 2});
  CHECK(db.item_universe == 4);
}

TEST_CASE("parse: empty stream") {
  const auto db = parse_transactions(std::string_view(""));
  CHECK(db.size() == 0);
  CHECK(db.item_universe == 0);
}

TEST_CASE("parse: worked example encoding") {
  const auto db = worked_example();
  REQUIRE(db.size() == 7);
  CHECK(db.transactions[0] == Itemset{A, B, C, 5, 6, 11});
}

TEST_CASE("parse: duplicates, order and whitespace") {
  std::istringstream in("3 1 3\t2  \r\n\n   \n7\n");
  const auto db = parse_transactions(in);
  REQUIRE(db.size() == 2);
  CHECK(db.transactions[0] == Itemset{1, 2, 3});
  CHECK(db.transactions[1] == Itemset{7});
}

TEST_CASE("parse: missing final newline") {
  const auto db = parse_transactions(std::string_view("4 5"));
  REQUIRE(db.size() == 1);
  CHECK(db.transactions[0] == Itemset{4, 5});
}

TEST_CASE("parse: malformed tokens report their line") {
  auto line_of = [](const char* text) {
    try {
      parse_transactions(std::string_view(text));
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("1 2\n3 x 4\n") == 2);
  CHECK(line_of("-1\n") == 1);
  CHECK(line_of("1\n\n2.5\n") == 3);
  CHECK(line_of("99999999999999999999\n") == 1);
  CHECK(line_of("1 2\n") == 0);
}

TEST_CASE("item supports") {
  const auto s = item_supports(worked_example());
  CHECK(s.at(A) == 5);
  CHECK(s.at(B) == 5);
  CHECK(s.at(C) == 3);
  CHECK(s.at(D) == 2);
  CHECK(s.at(E) == 2);
  CHECK(s.at(I) == 2);
  for (Item single : {5u, 6u, 11u, 7u, 9u, 14u, 12u, 16u, 13u, 10u, 15u}) CHECK(s.at(single) == 1);
  CHECK(s.size() == 17);

  CHECK(item_supports(TransactionDatabase{}).empty());
  const auto one = item_supports(make_database({{7}}));
  CHECK(one == std::map<Item, Support>{{7, 1}});
}

TEST_CASE("absolute min_sup from a fraction") {
  CHECK(absolute_min_sup(0.3, 7) == 3);
  CHECK(absolute_min_sup(0.01, 100000) == 1000);
  CHECK(absolute_min_sup(1e-9, 10) == 1);
  CHECK(absolute_min_sup(1.0, 10) == 10);
  CHECK(absolute_min_sup(0.5, 0) == 1);
}

TEST_CASE_TEMPLATE("root index on the worked example", W, std::integral_constant<unsigned, 1>,
                   std::integral_constant<unsigned, 32>, std::integral_constant<unsigned, 64>) {
  constexpr unsigned Bits = W::value;
  const auto db = worked_example();
  const auto root = build_root_index<Bits>(db, 2);
  REQUIRE(root.item_count() == 6);
  CHECK(root.row_count == 7);

  std::vector<Item> ids;
  for (const auto& f : root.frequent_items) ids.push_back(f.id);
  std::sort(ids.begin(), ids.end());
  CHECK(ids == std::vector<Item>{A, B, C, D, E, I});

  // Index order: ascending support, ties by id.
  CHECK(root.frequent_items.front() == FrequentItem{D, 2});
  CHECK(root.frequent_items.back() == FrequentItem{B, 5});

  const auto index_of = [&](Item id) {
    for (ItemIndex i = 0; i < root.item_count(); ++i) {
      if (root.frequent_items[i].id == id) return i;
    }
    FAIL("missing item");
    return ItemIndex{0};
  };
  const auto a = root.bitmap(index_of(A));
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < root.row_count; ++r) {
    if (test_bit<Bits>(a, r)) rows.push_back(r);
  }
  CHECK(rows == std::vector<std::size_t>{0, 1, 4, 5, 6});
  CHECK(support_full_scan<WordOf<Bits>>(a, root.bitmap(index_of(B))) == 4);
}

TEST_CASE("root index: threshold above every support") {
  const auto root = build_root_index<64>(worked_example(), 8);
  CHECK(root.item_count() == 0);
  CHECK(root.row_count == 0);
  CHECK(root.region_count == 0);
}

TEST_CASE("root index: rows without frequent items are dropped") {
  const auto db = make_database({{1, 2}, {9}, {1}, {}, {2, 8}});
  const auto root = build_root_index<1>(db, 2);
  REQUIRE(root.item_count() == 2);
  CHECK(root.row_count == 3);
  CHECK(root.root_pbr == std::vector<RegionIndex>{0, 1, 2});
}

TEST_CASE("root index: min_sup 0 behaves as 1") {
  const auto db = make_database({{1}, {2}});
  CHECK(build_root_index<64>(db, 0).item_count() == 2);
}

TEST_CASE("root index: bitmap popcounts equal item supports (random)") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 100; ++round) {
    const auto db = random_db(rng, 20, 150);
    const auto supports = item_supports(db);
    const Support min_sup = 1 + round % 4;
    const auto root32 = build_root_index<32>(db, min_sup);
    const auto root64 = build_root_index<64>(db, min_sup);
    REQUIRE(root32.frequent_items == root64.frequent_items);
    std::size_t expected = 0;
    for (const auto& [item, s] : supports) expected += s >= min_sup;
    CHECK(root64.item_count() == expected);
    for (ItemIndex i = 0; i < root64.item_count(); ++i) {
      const Support s = supports.at(root64.frequent_items[i].id);
      CHECK(root64.frequent_items[i].support == s);
      Support c64 = 0, c32 = 0;
      for (auto w : root64.bitmap(i)) c64 += count_set_bits(w);
      for (auto w : root32.bitmap(i)) c32 += count_set_bits(w);
      CHECK(c64 == s);
      CHECK(c32 == s);
    }
  }
}
