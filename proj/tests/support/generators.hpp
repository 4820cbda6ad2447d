#pragma once

// Seeded random codes and a-vectors for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "mincw/avector.hpp"
#include "mincw/gf2.hpp"

namespace testgen {

inline mincw::BinaryCode random_full_rank_code(std::mt19937_64& rng, int k, int n) {
  std::uniform_int_distribution<std::uint64_t> word(0, mincw::length_mask(n));
  while (true) {
    std::vector<mincw::BitVec> rows;
    for (int i = 0; i < k; ++i) rows.emplace_back(n, word(rng));
    if (mincw::rank(rows) == k) return mincw::BinaryCode(rows);
  }
}

inline mincw::AVector random_avector(std::mt19937_64& rng, int t, int k) {
  std::uniform_int_distribution<std::uint64_t> tau(0, (std::uint64_t{1} << t) - 1);
  mincw::AVector a(t);
  for (int i = 0; i < k; ++i) a.add(tau(rng), 1);
  return a;
}

// Every composition of `total` into `parts` non-negative parts.
template <typename F>
void for_each_composition(int total, int parts, F&& f) {
  std::vector<mincw::Count> x(static_cast<std::size_t>(parts), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == parts - 1) {
      x[static_cast<std::size_t>(i)] = left;
      f(x);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      x[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, left - v);
    }
  };
  if (parts == 0) {
    if (total == 0) f(x);
    return;
  }
  rec(rec, 0, total);
}

// Minimal codeword count by the literal definition, written independently of
// the library enumerators: all 2^k codewords, pairwise support comparison.
inline mincw::Count count_minimal_literal(const mincw::BinaryCode& code) {
  const int k = code.k();
  std::vector<std::uint64_t> words;
  for (std::uint64_t u = 1; u < (std::uint64_t{1} << k); ++u) {
    std::uint64_t w = 0;
    for (int i = 0; i < k; ++i) {
      if ((u >> i) & 1U) w ^= code.rows()[static_cast<std::size_t>(i)].bits();
    }
    words.push_back(w);
  }
  mincw::Count m = 0;
  for (auto c : words) {
    bool minimal = c != 0;
    for (auto d : words) {
      if (d != 0 && d != c && (d & ~c) == 0) minimal = false;
    }
    if (minimal) ++m;
  }
  return m;
}

}  // namespace testgen
