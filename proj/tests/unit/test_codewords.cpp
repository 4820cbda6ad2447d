#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "mincw/codewords.hpp"
#include "support/generators.hpp"

using namespace mincw;

namespace {

BinaryCode code_of(std::initializer_list<const char*> rows) {
  std::vector<BitVec> v;
  for (auto r : rows) v.push_back(BitVec::parse(r));
  return BinaryCode(v);
}

BinaryCode identity_code(int k) {
  std::vector<BitVec> rows;
  for (int i = 0; i < k; ++i) rows.push_back(BitVec::unit(k, i));
  return BinaryCode(rows);
}

BinaryCode append_column(const BinaryCode& code, const BitVec& column) {
  auto cols = code.columns();
  cols.push_back(column);
  return BinaryCode::from_columns(code.k(), cols);
}

Count reduced_total(const Reduction& r) {
  Count m = r.trace.delta;
  for (const auto& c : r.components) m += testgen::count_minimal_literal(c);
  return m;
}

}  // namespace

TEST_CASE("minimality test") {
  auto c = code_of({"101", "011"});
  CHECK(is_minimal_in(BitVec::parse("110"), c));
  CHECK_FALSE(is_minimal_in(BitVec::parse("000"), c));
  CHECK_FALSE(is_minimal_in(BitVec::parse("1111"), code_of({"1100", "0011"})));
  CHECK_THROWS_AS(is_minimal_in(BitVec::parse("100"), c), DomainError);
}

TEST_CASE("brute-force enumerator") {
  CHECK(minimal_codewords_bruteforce(identity_code(5)).count() == 5);
  CHECK(minimal_codewords_bruteforce(code_of({"101", "011"})).count() == 3);
  auto m = minimal_codewords_bruteforce(code_of({"1011", "0111"}));
  CHECK(m.words == std::vector<BitVec>{BitVec::parse("1100"), BitVec::parse("1011"), BitVec::parse("0111")});
}

TEST_CASE("systematic enumerator") {
  CHECK(minimal_codewords_systematic(code_of({"101", "011"})).count() == 3);
  CHECK(minimal_codewords_systematic(code_of({"10001", "01001", "00101", "00011"})).count() == 10);

  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 12);
    const int t = static_cast<int>(rng() % 7);
    auto code = testgen::random_full_rank_code(rng, k, k + t);
    auto fast = minimal_codewords_systematic(code);
    auto slow = minimal_codewords_bruteforce(code);
    CHECK(fast.words == slow.words);
    CHECK(fast.count() == testgen::count_minimal_literal(code));
  }
}

TEST_CASE("accepted subsets have at most t+1 rows and vanish at t+1") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 9);
    const int t = 1 + static_cast<int>(rng() % 4);
    auto sc = to_systematic(testgen::random_full_rank_code(rng, k, k + t));
    for_each_minimal_subset(sc, kDefaultSubsetBudget, [&](std::uint64_t subset, std::uint64_t info) {
      const int size = std::popcount(subset);
      CHECK(size <= t + 1);
      if (size == t + 1) CHECK(info == 0);
    });
  }
}

TEST_CASE("systematic enumerator budget") {
  std::mt19937_64 rng(5);
  auto code = testgen::random_full_rank_code(rng, 20, 26);
  CHECK_THROWS_AS(minimal_codewords_systematic(code, 1000), BudgetExceeded);
}

TEST_CASE("a-vector") {
  auto sc = SystematicCode::from_info_rows(2, {BitVec::parse("10"), BitVec::parse("01"), BitVec::parse("11")});
  auto a = a_vector(sc);
  CHECK(a[0b00] == 0);
  CHECK(a[0b01] == 1);
  CHECK(a[0b10] == 1);
  CHECK(a[0b11] == 1);

  auto full = a_vector(to_systematic(identity_code(4)));
  CHECK(full.t() == 0);
  CHECK(full[0] == 4);

  auto b = a_vector(SystematicCode::from_info_rows(1, {BitVec::parse("1"), BitVec::parse("1"), BitVec::parse("0")}));
  CHECK(b[0] == 1);
  CHECK(b[1] == 2);
}

TEST_CASE("equal a-vectors give equal counts") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 8);
    const int t = 1 + static_cast<int>(rng() % 4);
    auto a = testgen::random_avector(rng, t, k);
    auto code = code_from_avector(a);
    auto rows = code.rows();
    std::shuffle(rows.begin(), rows.end(), rng);
    auto cols = BinaryCode(rows).columns();
    std::shuffle(cols.begin(), cols.end(), rng);
    auto permuted = BinaryCode::from_columns(k, cols);
    CHECK(testgen::count_minimal_literal(permuted) == testgen::count_minimal_literal(code));
  }
}

TEST_CASE("reduction") {
  SUBCASE("zero column") {
    auto r = reduce(code_of({"100", "010"}));
    REQUIRE_FALSE(r.trace.steps.empty());
    CHECK(r.trace.steps.front().kind == ReductionKind::ZeroColumn);
    CHECK(reduced_total(r) == 2);
  }
  SUBCASE("direct sum") {
    auto r = reduce(code_of({"10100", "01100", "00011"}));
    CHECK(reduced_total(r) == 4);
    CHECK(testgen::count_minimal_literal(code_of({"10100", "01100", "00011"})) == 4);
  }
  SUBCASE("zero information row") {
    auto code = code_of({"10011", "01001", "00100"});
    auto r = reduce(code);
    CHECK(r.trace.delta >= 1);
    CHECK(reduced_total(r) == testgen::count_minimal_literal(code));
  }
  SUBCASE("random codes, both orders") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 120; ++trial) {
      const int k = 1 + static_cast<int>(rng() % 10);
      const int n = k + static_cast<int>(rng() % 6);
      auto code = testgen::random_full_rank_code(rng, k, n);
      const Count m = testgen::count_minimal_literal(code);
      auto a = reduce(code, ReductionOrder::WeightOneFirst);
      auto b = reduce(code, ReductionOrder::SplitFirst);
      CHECK(reduced_total(a) == m);
      CHECK(reduced_total(b) == m);
      CHECK(a.trace.delta == b.trace.delta);
    }
  }
}

TEST_CASE("zero and duplicate columns keep the count") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 8);
    const int n = k + static_cast<int>(rng() % 5);
    auto code = testgen::random_full_rank_code(rng, k, n);
    const Count m = testgen::count_minimal_literal(code);
    CHECK(testgen::count_minimal_literal(append_column(code, BitVec(k))) == m);
    CHECK(testgen::count_minimal_literal(append_column(code, code.column(static_cast<int>(rng() % n)))) == m);
  }
}
