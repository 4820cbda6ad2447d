#pragma once

// Upper and lower bounds on M_q(n, k). Everything that divides is exact.

#include <optional>
#include <string>

#include "mincw/avector.hpp"
#include "mincw/optimize.hpp"
#include "mincw/rational.hpp"

namespace mincw {

// (q^k - 1) / (q - 1). Throws DomainError when k * log2(q) > 120.
BigInt trivial_ub(int n, int k, int q = 2);

// C(n, k - 1).
BigInt matroid_ub(int n, int k);

// sum_{i=1}^{t+1} C(k + t, i).
BigInt binomial_sum_ub(int k, int t);

struct RationalBound {
  Rational value;
  BigInt floor;
};

// (k+1)k/2 + sum_{s=2}^{t+1} C(2^t - 1, s) (k / (2^t - 1))^s, t >= 1.
RationalBound improved_ub(int k, int t);

// 2^k / (4n((k-1)/n - 1/2)), present only when (k - 1)/n > 1/2. Reported, not trusted.
std::optional<Rational> agrell_ub(int n, int k);

// sum_{j=0}^{n-k+1} C(n, j) (q-1)^j / q^(n-k) prod_{i=0}^{j-2} (1 - q^-(n-k-i)); absent when n <= k.
std::optional<Rational> random_coding_lb(int n, int k, int q = 2);

// floor(k / (t + 1))^(t+1).
BigInt projective_base_lb(int k, int t);

// k + t; holds for projective codes only.
Count kashyap_lb(int k, int t);

struct BoundsReport {
  int n = 0;
  int k = 0;
  int t = 0;
  int q = 2;
  std::optional<BigInt> trivial_ub;  // absent past the size guard
  BigInt matroid_ub;
  BigInt binomial_sum_ub;
  std::optional<RationalBound> improved_ub;  // t >= 1
  std::optional<Rational> agrell_ub;
  std::optional<Rational> random_coding_lb;
  BigInt projective_base_lb;
  Count kashyap_lb = 0;
  std::optional<MaxMinResult> exact;
  std::string exact_note;  // why `exact` is absent or partial
};

BoundsReport bounds_report(int n, int k, const SearchOptions& options = {});

}  // namespace mincw
