#include "mincw/mgsets.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <optional>

namespace mincw {

namespace {

bool minimal_generating_words(std::span<const std::uint64_t> members) {
  const int m = static_cast<int>(members.size());
  std::uint64_t total = 0;
  for (auto x : members) total ^= x;
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  std::uint64_t partial = 0;
  for (std::uint64_t g = 1; g <= full; ++g) {
    partial ^= members[static_cast<std::size_t>(std::countr_zero(g))];
    if ((g ^ (g >> 1)) == full) continue;
    if (partial == 0) return false;
    if (total != 0 && (partial & ~total) == 0 && partial != total) return false;
  }
  return true;
}

}  // namespace

bool is_minimal_generating(std::span<const BitVec> s_hat) {
  if (s_hat.empty()) return false;
  if (s_hat.size() > 24) throw BudgetExceeded("is_minimal_generating: more than 24 vectors");
  std::vector<std::uint64_t> words;
  for (const auto& v : s_hat) {
    if (v.length() != s_hat.front().length()) throw std::invalid_argument("is_minimal_generating: length mismatch");
    words.push_back(v.bits());
  }
  return minimal_generating_words(words);
}

bool is_minimal_generating(int t, TauSet s_hat) {
  std::array<std::uint64_t, 32> words{};
  std::size_t m = 0;
  if (t < 0 || t > kMaxCatalogT) throw std::invalid_argument("is_minimal_generating: t must be in 0..5");
  if (t < kMaxCatalogT && (s_hat >> (1U << t)) != 0) {
    throw std::invalid_argument("is_minimal_generating: set has members outside F_2^t");
  }
  for (TauSet b = s_hat; b != 0; b &= b - 1) words[m++] = static_cast<std::uint64_t>(std::countr_zero(b));
  if (m == 0) return false;
  return minimal_generating_words(std::span<const std::uint64_t>(words.data(), m));
}

bool is_mg_pair(const BitVec& a, const BitVec& b) {
  if (a.length() != b.length()) throw std::invalid_argument("is_mg_pair: length mismatch");
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("is_mg_pair: zero vector");
  if (a == b) throw std::invalid_argument("is_mg_pair: equal vectors");
  return (a.bits() & b.bits()) != 0;
}

bool tauset_less(TauSet a, TauSet b) {
  // Lexicographic comparison of the ascending member lists.
  while (a != 0 && b != 0) {
    const int x = std::countr_zero(a);
    const int y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

MGCatalog::MGCatalog(int t, std::vector<TauSet> sets) : t_(t), sets_(std::move(sets)) {
  std::sort(sets_.begin(), sets_.end(), [](TauSet a, TauSet b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return tauset_less(a, b);
  });
  for (std::size_t i = 0; i < sets_.size();) {
    const int s = std::popcount(sets_[i]);
    std::size_t j = i;
    while (j < sets_.size() && std::popcount(sets_[j]) == s) ++j;
    ranges_[s] = {i, j};
    i = j;
  }
}

std::span<const TauSet> MGCatalog::sets_of_size(int size) const {
  auto it = ranges_.find(size);
  if (it == ranges_.end()) return {};
  return std::span<const TauSet>(sets_.data() + it->second.first, it->second.second - it->second.first);
}

std::map<int, std::size_t> MGCatalog::size_counts() const {
  std::map<int, std::size_t> out;
  for (int s = 2; s <= t_ + 1; ++s) out[s] = sets_of_size(s).size();
  return out;
}

std::vector<BitVec> MGCatalog::members(int t, TauSet s) {
  std::vector<BitVec> out;
  for (TauSet b = s; b != 0; b &= b - 1) out.emplace_back(t, static_cast<std::uint64_t>(std::countr_zero(b)));
  return out;
}

MGCatalog build_catalog(int t) {
  if (t < 1 || t > kMaxCatalogT) {
    throw std::invalid_argument("build_catalog: t must be in 1..5, got " + std::to_string(t));
  }
  const int nonzero = (1 << t) - 1;
  std::vector<TauSet> sets;
  for (int s = 2; s <= std::min(t + 1, nonzero); ++s) {
    // Subsets of the nonzero vectors 1..2^t-1 via Gosper's hack over
    // `nonzero` index bits; shifting by one maps index i to tau = i+1.
    const std::uint64_t limit = std::uint64_t{1} << nonzero;
    for (std::uint64_t mask = (std::uint64_t{1} << s) - 1; mask < limit;) {
      const auto candidate = static_cast<TauSet>(mask << 1);
      if (is_minimal_generating(t, candidate)) sets.push_back(candidate);
      const std::uint64_t lowest = mask & (~mask + 1);
      const std::uint64_t ripple = mask + lowest;
      mask = (((ripple ^ mask) >> 2) / lowest) | ripple;
    }
  }
  return MGCatalog(t, std::move(sets));
}

const MGCatalog& cached_catalog(int t) {
  static std::mutex mu;
  static std::array<std::optional<MGCatalog>, kMaxCatalogT + 1> cache;
  if (t < 1 || t > kMaxCatalogT) throw std::invalid_argument("cached_catalog: t must be in 1..5");
  std::lock_guard lock(mu);
  auto& slot = cache[static_cast<std::size_t>(t)];
  if (!slot) slot = build_catalog(t);
  return *slot;
}

std::vector<TauSet> projective_bases(int t) {
  if (t < 2 || t > kMaxCatalogT) {
    throw std::invalid_argument("projective_bases: t must be in 2..5, got " + std::to_string(t));
  }
  auto span = cached_catalog(t).sets_of_size(t + 1);
  return {span.begin(), span.end()};
}

TauSet canonical_projective_basis(int t) {
  TauSet s = 0;
  for (int i = 0; i < t; ++i) s |= TauSet{1} << (1U << i);
  s |= TauSet{1} << ((1U << t) - 1);
  return s;
}

std::uint32_t permute_tau(std::uint32_t tau, std::span<const int> perm) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if ((tau >> i) & 1U) out |= 1U << perm[i];
  }
  return out;
}

TauSet permute_tauset(TauSet s, std::span<const int> perm) {
  TauSet out = 0;
  for (TauSet b = s; b != 0; b &= b - 1) {
    out |= TauSet{1} << permute_tau(static_cast<std::uint32_t>(std::countr_zero(b)), perm);
  }
  return out;
}

}  // namespace mincw
