#pragma once

// Numerical checks of two conjectures about optimal a-vectors:
//  * t = 3: an explicit a-vector attains M_2(k+3, k) for every k >= 4;
//  * leading term: the degree-(t+1) part is maximized on a projective basis
//    with parts as equal as possible.

#include <cstdint>
#include <string>
#include <vector>

#include "mincw/avector.hpp"
#include "mincw/optimize.hpp"

namespace mincw {

enum class ConjectureMode { Exhaustive, LocalSearch, Auto };
enum class Verdict { Equal, Unequal, NoBetterFound, Counterexample, Inconclusive };

std::string to_string(ConjectureMode mode);
std::string to_string(Verdict verdict);

inline constexpr int kExhaustiveConjectureMaxK = 40;
inline constexpr int kLocalSearchRestarts = 64;

// The conjectured optimum for t = 3, k >= 4. Up to k = 26 the seven listed
// values go to 100, 010, 001, 110, 101, 011, 111 in that order with a_000 = 0;
// from k = 27 on the four floor formulas apply.
AVector conjectured_t3_avector(int k);

struct ConjectureT3Row {
  int k = 0;
  AVector conjectured;
  Count conjectured_value = 0;
  AVector found;  // best a-vector found by the search
  Count found_value = 0;
  ConjectureMode mode = ConjectureMode::Exhaustive;  // Exhaustive or LocalSearch, never Auto
  Verdict verdict = Verdict::Equal;
  bool conjectured_is_local_max = false;  // local-search rows only
};

struct ConjectureT3Report {
  int k_min = 0;
  int k_max = 0;
  std::uint64_t seed = 0;
  std::vector<ConjectureT3Row> rows;

  // No row is Unequal, Counterexample or Inconclusive.
  bool supported() const;
};

// Exhaustive mode maximizes count_t3 over every a-vector (k <= 40). Local
// search runs steepest ascent over the 8 coordinates, moving one unit at a
// time, from the conjectured point and 64 seeded random starts; it can only
// report that nothing better was found. Auto picks exhaustive up to k = 40.
// options.budget caps composition leaves (exhaustive) or objective
// evaluations per k (local search).
ConjectureT3Report check_conjecture_t3(int k_min, int k_max, ConjectureMode mode, std::uint64_t seed,
                                       const SearchOptions& options = {});

struct LeadingRow {
  int k = 0;
  Count max_value = 0;
  std::vector<AVector> maximizers;  // canonical representatives, a_0 = 0
  bool maximizers_truncated = false;
  AVector projective_point;         // near-equal parts on {e_1, ..., e_t, 1}
  Count projective_point_value = 0;
  bool all_on_projective_basis = false;  // every listed maximizer is near-equal on some projective basis
  bool holds = false;
};

struct LeadingReport {
  int t = 0;
  int k_min = 0;
  int k_max = 0;
  bool exact = true;
  std::vector<LeadingRow> rows;

  bool supported() const;
};

inline constexpr std::size_t kLeadingMaximizerCap = 512;

// Exhaustive integer maximization of the leading term for t in {2, 3}.
LeadingReport check_conjecture_leading(int t, int k_min, int k_max, const SearchOptions& options = {});

}  // namespace mincw
