#pragma once

// Exact M_2(n, k) for t = n - k <= 5 by maximizing the counting formula over
// all a-vectors with sum k. Every a-vector is realized by some code, so the
// maximum of the formula is the maximum over codes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mincw/avector.hpp"
#include "mincw/rational.hpp"

namespace mincw {

inline constexpr std::uint64_t kDefaultNodeBudget = 2'000'000'000;

struct SearchOptions {
  std::uint64_t budget = kDefaultNodeBudget;  // leaves (compositions, column sets) visited
  unsigned threads = 0;                       // 0 picks the hardware concurrency
  bool symmetry = true;                       // restrict to sorted unit-vector counts
};

unsigned resolve_threads(unsigned requested);

enum class Method { ClosedFormT0, ClosedFormT1, ClosedFormT2, FormulaMax, Census };

std::string to_string(Method m);

struct MaxMinResult {
  int n = 0;
  int k = 0;
  int t = 0;
  Count value = 0;
  std::optional<AVector> witness;
  Method method = Method::FormulaMax;
  bool exact = true;
  std::uint64_t nodes = 0;
};

struct Composition {
  std::vector<Count> parts;
  Count total() const;
};

// Objective for the composition search, over the nonzero tau of F_2^t
// (a_0 is held at zero):
//   linear * sum a_tau + pairs * sum C(a_tau, 2) + sum over catalog sets of
//   size min_set_size..max_set_size of prod a_tau.
struct Objective {
  int t = 0;
  bool linear = true;
  bool pairs = true;
  int min_set_size = 2;
  int max_set_size = 0;  // 0 means t + 1

  static Objective full_count(int t);
  static Objective leading(int t);
};

struct TotalBest {
  Count value = -1;
  std::vector<Count> witness;                 // dense, indexed by tau
  std::vector<std::vector<Count>> maximizers; // canonical forms, only when requested
  bool maximizers_truncated = false;
};

struct CompositionSearchResult {
  std::vector<TotalBest> by_total;  // index j: best over compositions with sum j
  bool exact = true;
  std::uint64_t leaves = 0;
};

// Exhaustive search over every composition of 0..max_total into the 2^t - 1
// nonzero tau (t <= 5). Coordinates are searched in the order e_1, ..., e_t,
// then the other tau ascending, each from its largest value down; the witness
// is the first maximizer in that order, whatever the thread count.
CompositionSearchResult search_compositions(const Objective& objective, int max_total, const SearchOptions& options,
                                            std::size_t keep_maximizers = 0);

// Rough leaf count of search_compositions(full_count(t), max_total): all
// compositions of at most max_total into 2^t - 1 parts, divided by t!.
std::uint64_t search_leaf_estimate(int t, int max_total);

// Lexicographically smallest image of a dense a-vector under the t!
// permutations of bit positions.
std::vector<Count> canonical_form(int t, const std::vector<Count>& dense);

// Exact M_2(n, k) with witness; 0 <= n - k <= 5, k >= 1. The zero-row count
// a_0 is folded in as max over m of m + best(k - m) with a_0 = 0.
MaxMinResult maxmin(int n, int k, const SearchOptions& options = {});

Count maxmin_closed_t1(int k);
Count maxmin_closed_t2(int k);

struct SymmetricOptimum {
  Composition assignment;  // x_i = floor((m + i - 1) / r)
  BigInt value;            // e_s(x)
  Rational real_value;     // C(r, s) (m / r)^s
};

// Maximizes the elementary symmetric polynomial e_s over x_1 + ... + x_r = m.
SymmetricOptimum symmetric_opt(int m, int r, int s);

// Elementary symmetric polynomial e_s of the given values.
BigInt elementary_symmetric(const std::vector<Count>& x, int s);

// Previously published exact values of M_2(n, k) for 1 <= k <= n <= 15.
std::optional<Count> reference_value(int n, int k);

struct TableCell {
  int n = 0;
  int k = 0;
  std::optional<MaxMinResult> result;  // empty when outside every computable envelope
  std::optional<Count> reference;
  bool inconsistent_reference = false;
  std::string note;
};

struct TableResult {
  int n_max = 0;
  int t_cap = 0;
  std::vector<TableCell> cells;  // row-major over 1 <= k <= n <= n_max

  const TableCell& at(int n, int k) const;
};

inline constexpr int kCensusMaxK = 5;

// Cells with t <= 2 use closed forms, 3 <= t <= t_cap the formula search,
// and small k the exhaustive code census; everything else is unavailable.
TableResult table(int n_max, int t_cap, const SearchOptions& options = {});

std::string table_csv(const TableResult& table);
std::string table_text(const TableResult& table);

}  // namespace mincw
