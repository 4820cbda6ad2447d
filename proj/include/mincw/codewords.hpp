#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mincw/avector.hpp"
#include "mincw/gf2.hpp"

namespace mincw {

struct MinimalSet {
  BinaryCode code;
  std::vector<BitVec> words;  // sorted ascending by integer encoding

  Count count() const { return static_cast<Count>(words.size()); }
};

// word != 0 and no nonzero codeword has support strictly inside supp(word).
// Throws DomainError if word is not a codeword.
bool is_minimal_in(const BitVec& word, const BinaryCode& code);

inline constexpr int kBruteForceMaxK = 20;

// Literal definition: every nonzero codeword against every other. k <= 20.
MinimalSet minimal_codewords_bruteforce(const BinaryCode& code);

inline constexpr std::uint64_t kDefaultSubsetBudget = 50'000'000;

// Number of row subsets of size 1..t+1 the systematic enumerator visits.
std::uint64_t systematic_subset_count(int k, int t);

// Visits every row subset S (bit mask over systematic rows, |S| <= t+1) whose
// sum c^S is a minimal codeword; `info_sum` is the information part of c^S.
// Subsets come in colex order within each cardinality.
void for_each_minimal_subset(const SystematicCode& sc, std::uint64_t budget,
                             const std::function<void(std::uint64_t subset, std::uint64_t info_sum)>& visit);

// Minimal codewords through the systematic form: only subsets of at most t+1
// rows are candidates, and each is tested inside its reduced code.
MinimalSet minimal_codewords_systematic(const BinaryCode& code,
                                        std::uint64_t budget = kDefaultSubsetBudget);

AVector a_vector(const SystematicCode& sc);

// [I_k | A] with rows of A listed by ascending tau, a_tau copies each.
BinaryCode code_from_avector(const AVector& a);

enum class ReductionKind { ZeroColumn, DuplicateColumn, WeightOneCoordinate, ZeroInfoRow, DirectSumSplit };

std::string to_string(ReductionKind kind);

struct ReductionStep {
  ReductionKind kind;
  std::string detail;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Count delta = 0;  // M(original) = sum of M(components) + delta
};

struct Reduction {
  std::vector<BinaryCode> components;
  ReductionTrace trace;
};

enum class ReductionOrder { WeightOneFirst, SplitFirst };

// Strips zero and duplicate columns, removes weight-one coordinates together
// with their dimension, and splits direct sums into indecomposable blocks.
Reduction reduce(const BinaryCode& code, ReductionOrder order = ReductionOrder::WeightOneFirst);

}  // namespace mincw
