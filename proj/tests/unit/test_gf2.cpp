#include <doctest.h>

#include <random>
#include <sstream>

#include "mincw/gf2.hpp"
#include "support/generators.hpp"

using namespace mincw;

TEST_CASE("bitvec parse") {
  auto v = BitVec::parse("0110");
  CHECK(v.length() == 4);
  CHECK(support(v) == std::vector<int>{2, 3});
  CHECK(BitVec::parse("0000") == BitVec(4));
  CHECK(BitVec::parse("1") == BitVec::unit(1, 0));
  CHECK(v.to_string() == "0110");

  CHECK_THROWS_AS(BitVec::parse(""), FormatError);
  CHECK_THROWS_AS(BitVec::parse("01a"), FormatError);
  CHECK_THROWS_AS(BitVec::parse(std::string(65, '1')), FormatError);
  CHECK(BitVec::parse(std::string(64, '1')).weight() == 64);
}

TEST_CASE("support") {
  CHECK(support(BitVec::parse("0000")).empty());
  CHECK(support(BitVec::parse("1011")) == std::vector<int>{1, 3, 4});
}

TEST_CASE("strict support containment") {
  CHECK(support_strictly_contained(BitVec::parse("0100"), BitVec::parse("0110")));
  CHECK_FALSE(support_strictly_contained(BitVec::parse("0110"), BitVec::parse("0110")));
  CHECK_FALSE(support_strictly_contained(BitVec::parse("1000"), BitVec::parse("0110")));
  CHECK_THROWS(support_strictly_contained(BitVec::parse("01"), BitVec::parse("011")));

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> word(0, 63);
  for (int trial = 0; trial < 300; ++trial) {
    BitVec a(6, word(rng)), b(6, word(rng)), c(6, word(rng));
    CHECK_FALSE(support_strictly_contained(a, a));
    if (support_strictly_contained(a, b) && support_strictly_contained(b, c)) {
      CHECK(support_strictly_contained(a, c));
    }
  }
}

TEST_CASE("rank") {
  std::vector<BitVec> rows{BitVec::parse("100"), BitVec::parse("010"), BitVec::parse("110")};
  CHECK(rank(rows) == 2);
  CHECK(rank(std::vector<BitVec>{}) == 0);
  CHECK(rank(std::vector<BitVec>{BitVec::parse("1011"), BitVec::parse("0111")}) == 2);
}

TEST_CASE("systematic form") {
  SUBCASE("already systematic") {
    auto sc = to_systematic(BinaryCode({BitVec::parse("101"), BitVec::parse("011")}));
    CHECK(sc.k == 2);
    CHECK(sc.t == 1);
    CHECK(sc.info_rows == std::vector<BitVec>{BitVec::parse("1"), BitVec::parse("1")});
    CHECK(sc.col_perm == std::vector<int>{1, 2, 3});
  }
  SUBCASE("t = 0") {
    auto sc = to_systematic(BinaryCode({BitVec::parse("10"), BitVec::parse("01")}));
    CHECK(sc.t == 0);
    CHECK(sc.info_rows.size() == 2);
    CHECK(sc.info_rows[0].length() == 0);
  }
  SUBCASE("pivot permutation") {
    auto sc = to_systematic(BinaryCode({BitVec::parse("011"), BitVec::parse("101")}));
    CHECK(sc.col_perm == std::vector<int>{2, 1, 3});
    CHECK(sc.info_rows == std::vector<BitVec>{BitVec::parse("1"), BitVec::parse("1")});
  }
  SUBCASE("rank deficient") {
    CHECK_THROWS_AS(BinaryCode({BitVec::parse("110"), BitVec::parse("110")}), InvalidCodeError);
  }
  SUBCASE("regenerated row space matches") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const int k = 1 + static_cast<int>(rng() % 10);
      const int n = k + static_cast<int>(rng() % 8);
      auto code = testgen::random_full_rank_code(rng, k, n);
      auto regenerated = to_systematic(code).generator();
      auto stacked = code.rows();
      stacked.insert(stacked.end(), regenerated.rows().begin(), regenerated.rows().end());
      CHECK(rank(stacked) == k);
    }
  }
}

TEST_CASE("span enumeration") {
  auto s = span_enumerate(std::vector<BitVec>{BitVec::parse("10"), BitVec::parse("01")}, 2);
  CHECK(s.size() == 4);
  auto d = span_enumerate(std::vector<BitVec>{BitVec::parse("11"), BitVec::parse("11")}, 2);
  CHECK(d == std::vector<BitVec>{BitVec::parse("00"), BitVec::parse("11")});
  auto e = span_enumerate(std::vector<BitVec>{}, 2);
  CHECK(e == std::vector<BitVec>{BitVec::parse("00")});
  CHECK_THROWS(span_enumerate(std::vector<BitVec>(21, BitVec::parse("1")), 1));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = static_cast<int>(rng() % 7);
    std::vector<BitVec> v;
    for (int i = 0; i < m; ++i) v.emplace_back(5, rng() & 31U);
    CHECK(span_enumerate(v, 5).size() == (std::size_t{1} << rank(v)));
  }
}

TEST_CASE("matrix file parsing") {
  std::istringstream ok("# header\n101\n\n011\n");
  auto rows = parse_matrix(ok);
  CHECK(rows.size() == 2);
  std::istringstream bad("101\n01x\n");
  CHECK_THROWS_WITH_AS(parse_matrix(bad), doctest::Contains("line 2"), FormatError);
  std::istringstream ragged("101\n01\n");
  CHECK_THROWS_AS(parse_matrix(ragged), FormatError);
}
