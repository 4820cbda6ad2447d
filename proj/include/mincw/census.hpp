#pragma once

// Exhaustive scan of projective binary codes at small dimension, plus the
// explicit constructions used for lower bounds.

#include <cstdint>
#include <vector>

#include "mincw/avector.hpp"
#include "mincw/gf2.hpp"
#include "mincw/optimize.hpp"

namespace mincw {

struct CensusResult {
  int n = 0;
  int k = 0;
  Count max_m = 0;
  std::vector<BitVec> witness_columns;  // length-k columns, ascending; empty when no code exists
  std::uint64_t codes_scanned = 0;      // full-rank column sets only
};

// Column sets examined by census_max_folded(n, k): sum over n' <= n of C(2^k - 1, n').
std::uint64_t census_folded_work(int n, int k);

// Maximum M over all codes whose generator columns are n distinct nonzero
// vectors of F_2^k. Throws BudgetExceeded when the scan would exceed
// options.budget column sets. 1 <= k <= 5.
CensusResult census_max(int n, int k, const SearchOptions& options = {});

// Maximum over n' <= n of census_max(n', k); this equals M_2(n, k) since zero
// and repeated columns never change M. The witness comes from the smallest n'
// attaining the maximum.
CensusResult census_max_folded(int n, int k, const SearchOptions& options = {});

// census_max_folded(n', k) for every n' = k..n_max from a single scan.
std::vector<CensusResult> census_folded_series(int n_max, int k, const SearchOptions& options = {});

// Largest scan the table builder runs to fill a cell outside the formula band.
inline constexpr std::uint64_t kCensusTableWork = 100'000'000;

// Parts floor((k + i - 1) / (t + 1)) on e_1, ..., e_t, 1 (for t = 1 all rows carry 1). k >= t + 1.
AVector projective_base_avector(int k, int t);
BinaryCode construct_projective_base_code(int k, int t);

// Two copies of each unit vector e_i and k - 2t zero rows. k >= 2t.
AVector double_unit_avector(int k, int t);
BinaryCode construct_double_unit_code(int k, int t);

// Pairwise distinct nonzero columns.
bool is_projective(const BinaryCode& code);

}  // namespace mincw
