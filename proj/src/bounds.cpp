#include "mincw/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "mincw/census.hpp"
#include "mincw/mgsets.hpp"

namespace mincw {

namespace {

void check_nk(int n, int k) {
  if (k < 1 || n < k) throw std::invalid_argument("bounds: need 1 <= k <= n");
}

void check_kt(int k, int t) {
  if (k < 1 || t < 0) throw std::invalid_argument("bounds: need k >= 1 and t >= 0");
}

BigInt power(const BigInt& base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

BigInt trivial_ub(int n, int k, int q) {
  check_nk(n, k);
  if (q < 2) throw std::invalid_argument("trivial_ub: q must be at least 2");
  if (k * std::log2(static_cast<double>(q)) > 120.0) {
    throw DomainError("trivial_ub: q^k exceeds 120 bits");
  }
  return (power(q, k) - 1) / (q - 1);
}

BigInt matroid_ub(int n, int k) {
  check_nk(n, k);
  return binomial(n, k - 1);
}

BigInt binomial_sum_ub(int k, int t) {
  check_kt(k, t);
  BigInt sum = 0;
  for (int i = 1; i <= t + 1; ++i) sum += binomial(k + t, i);
  return sum;
}

RationalBound improved_ub(int k, int t) {
  check_kt(k, t);
  if (t < 1) throw std::invalid_argument("improved_ub: t must be at least 1");
  if (t > 30) throw std::invalid_argument("improved_ub: t must be at most 30");
  const int r = (1 << t) - 1;
  const Rational per(k, r);
  Rational value = Rational(static_cast<Count>(k + 1) * k / 2);
  Rational pow = per;
  for (int s = 2; s <= t + 1; ++s) {
    pow *= per;
    value += Rational(binomial(r, s)) * pow;
  }
  return {value, floor_of(value)};
}

std::optional<Rational> agrell_ub(int n, int k) {
  check_nk(n, k);
  // (k - 1)/n > 1/2  <=>  2(k - 1) > n.
  if (2 * (k - 1) <= n) return std::nullopt;
  return Rational(power(2, k), BigInt(4 * (k - 1) - 2 * n));
}

std::optional<Rational> random_coding_lb(int n, int k, int q) {
  check_nk(n, k);
  if (q < 2) throw std::invalid_argument("random_coding_lb: q must be at least 2");
  if (n <= k) return std::nullopt;
  const int t = n - k;
  const BigInt qt = power(q, t);
  Rational sum = 0;
  for (int j = 0; j <= t + 1 && j <= n; ++j) {
    Rational term = Rational(binomial(n, j) * power(q - 1, j), qt);
    for (int i = 0; i <= j - 2; ++i) term *= Rational(1) - Rational(BigInt(1), power(q, t - i));
    sum += term;
  }
  return sum;
}

BigInt projective_base_lb(int k, int t) {
  check_kt(k, t);
  return power(k / (t + 1), t + 1);
}

Count kashyap_lb(int k, int t) {
  check_kt(k, t);
  return static_cast<Count>(k) + t;
}

BoundsReport bounds_report(int n, int k, const SearchOptions& options) {
  check_nk(n, k);
  if (n > kMaxLength) throw std::invalid_argument("bounds_report: n must be at most 64");
  BoundsReport r;
  r.n = n;
  r.k = k;
  r.t = n - k;
  try {
    r.trivial_ub = trivial_ub(n, k);
  } catch (const DomainError&) {
  }
  r.matroid_ub = matroid_ub(n, k);
  r.binomial_sum_ub = binomial_sum_ub(k, r.t);
  if (r.t >= 1) r.improved_ub = improved_ub(k, r.t);
  r.agrell_ub = agrell_ub(n, k);
  r.random_coding_lb = random_coding_lb(n, k);
  r.projective_base_lb = projective_base_lb(k, r.t);
  r.kashyap_lb = kashyap_lb(k, r.t);

  MaxMinResult m;
  m.n = n;
  m.k = k;
  m.t = r.t;
  if (r.t == 0) {
    r.exact = maxmin(n, k, options);
  } else if (r.t == 1) {
    m.value = maxmin_closed_t1(k);
    m.method = Method::ClosedFormT1;
    r.exact = m;
  } else if (r.t == 2) {
    m.value = maxmin_closed_t2(k);
    m.method = Method::ClosedFormT2;
    r.exact = m;
  } else if (r.t <= kMaxCatalogT && search_leaf_estimate(r.t, k) <= options.budget) {
    r.exact = maxmin(n, k, options);
    if (!r.exact->exact) r.exact_note = "budget exceeded; value is a lower bound";
  } else if (k <= kCensusMaxK && census_folded_work(n, k) <= options.budget) {
    const auto c = census_max_folded(n, k, options);
    m.value = c.max_m;
    m.method = Method::Census;
    m.nodes = c.codes_scanned;
    r.exact = m;
  } else {
    r.exact_note = "exact value unavailable: outside the formula search and census envelopes";
  }
  return r;
}

}  // namespace mincw
