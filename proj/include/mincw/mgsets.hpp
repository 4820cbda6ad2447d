#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "mincw/gf2.hpp"

namespace mincw {

// A subset of F_2^t (t <= 5) as a bit mask over the 2^t vectors: bit tau is
// set when tau belongs to the subset.
using TauSet = std::uint32_t;

inline constexpr int kMaxCatalogT = 5;

// The element sum of s_hat is minimal in the span of s_hat and no nonempty
// proper subset of s_hat sums to zero; or the sum is zero and no nonempty
// proper subset sums to zero. Multisets are taken literally.
bool is_minimal_generating(std::span<const BitVec> s_hat);

// Same test for a TauSet of vectors of length t.
bool is_minimal_generating(int t, TauSet s_hat);

// For distinct nonzero a, b: {a, b} is minimal generating iff their supports meet.
bool is_mg_pair(const BitVec& a, const BitVec& b);

// Minimal generating subsets of F_2^t of sizes 2..t+1, sorted by size and
// then lexicographically by their ascending member encodings.
class MGCatalog {
 public:
  MGCatalog() = default;
  MGCatalog(int t, std::vector<TauSet> sets);

  int t() const { return t_; }
  const std::vector<TauSet>& sets() const { return sets_; }
  std::span<const TauSet> sets_of_size(int size) const;
  std::map<int, std::size_t> size_counts() const;
  std::size_t size() const { return sets_.size(); }

  static std::vector<BitVec> members(int t, TauSet s);

 private:
  int t_ = 0;
  std::vector<TauSet> sets_;
  std::map<int, std::pair<std::size_t, std::size_t>> ranges_;
};

// 1 <= t <= 5; t = 1 yields an empty catalog.
MGCatalog build_catalog(int t);

// Shared read-only catalogs, built once per t.
const MGCatalog& cached_catalog(int t);

// The size-(t+1) entries: zero total sum, no vanishing proper subset sum.
std::vector<TauSet> projective_bases(int t);

// {e_1, ..., e_t, 1}.
TauSet canonical_projective_basis(int t);

// Orders TauSets by ascending member list, compared lexicographically.
bool tauset_less(TauSet a, TauSet b);

// Applies a permutation of the t bit positions to tau (perm[i] is the image of bit i).
std::uint32_t permute_tau(std::uint32_t tau, std::span<const int> perm);
TauSet permute_tauset(TauSet s, std::span<const int> perm);

}  // namespace mincw
