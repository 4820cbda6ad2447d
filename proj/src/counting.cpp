#include "mincw/counting.hpp"

#include <bit>
#include <stdexcept>

namespace mincw {

namespace {

Count choose2(Count x) { return x * (x - 1) / 2; }

void require_t(const AVector& a, int t, const char* who) {
  if (a.t() != t) {
    throw std::invalid_argument(std::string(who) + ": expected t = " + std::to_string(t) + ", got " +
                                std::to_string(a.t()));
  }
}

Count product(const std::vector<Count>& dense, TauSet s) {
  Count p = 1;
  for (TauSet b = s; b != 0; b &= b - 1) {
    p *= dense[static_cast<std::size_t>(std::countr_zero(b))];
    if (p == 0) break;
  }
  return p;
}

}  // namespace

CountBreakdown count_breakdown(const AVector& a, const MGCatalog& catalog) {
  CountBreakdown out;
  out.singletons = a.k();
  out.total = a.k();
  if (a.t() == 0) return out;
  if (catalog.t() != a.t()) {
    throw std::invalid_argument("count_general: catalog has t = " + std::to_string(catalog.t()) +
                                " but the a-vector has t = " + std::to_string(a.t()));
  }
  for (const auto& [tau, c] : a.nonzero()) {
    if (tau != 0) out.pair_term += choose2(c);
  }
  const auto dense = a.dense();
  for (int s = 2; s <= a.t() + 1; ++s) {
    Count sum = 0;
    for (TauSet set : catalog.sets_of_size(s)) sum += product(dense, set);
    out.mg_terms_by_size[s] = sum;
  }
  out.total += out.pair_term;
  for (const auto& [s, v] : out.mg_terms_by_size) out.total += v;
  return out;
}

Count count_general(const AVector& a, const MGCatalog& catalog) { return count_breakdown(a, catalog).total; }

Count count_general(const AVector& a) {
  if (a.t() == 0) return a.k();
  return count_general(a, cached_catalog(a.t()));
}

Count count_t1(const AVector& a) {
  require_t(a, 1, "count_t1");
  return a.k() + choose2(a[1]);
}

Count count_t2(const AVector& a) {
  require_t(a, 2, "count_t2");
  const Count k = a.k();
  const Count a00 = a[0b00];
  const Count a10 = a[0b01];
  const Count a01 = a[0b10];
  const Count a11 = a[0b11];
  return k + (k - a00) * (k - a00 - 1) / 2 - a10 * a01 + a10 * a01 * a11;
}

Count count_t3(const AVector& a) {
  require_t(a, 3, "count_t3");
  // Names follow the bit strings of tau: a110 is coordinates 1 and 2 set.
  const Count a100 = a[0b001];
  const Count a010 = a[0b010];
  const Count a001 = a[0b100];
  const Count a110 = a[0b011];
  const Count a101 = a[0b101];
  const Count a011 = a[0b110];
  const Count a111 = a[0b111];

  Count m = a.k();
  m += choose2(a100) + choose2(a010) + choose2(a001) + choose2(a110) + choose2(a101) + choose2(a011) + choose2(a111);

  m += a110 * (a101 + a011 + a111) + a101 * (a011 + a111) + a011 * a111;
  m += a100 * (a110 + a101 + a111) + a010 * (a110 + a011 + a111) + a001 * (a011 + a101 + a111);

  m += a100 * a010 * a110 + a100 * a001 * a101 + a010 * a001 * a011 + a100 * a010 * a111 + a100 * a001 * a111;
  m += a010 * a001 * a111 + a100 * a110 * a011 + a100 * a011 * a101 + a010 * a110 * a101 + a010 * a101 * a011;
  m += a001 * a110 * a101 + a001 * a110 * a011 + a100 * a011 * a111 + a010 * a101 * a111 + a001 * a110 * a111;
  m += a110 * a101 * a011 + a110 * a101 * a111 + a110 * a011 * a111 + a011 * a101 * a111;

  m += a100 * a010 * a001 * a111 + a100 * a011 * a110 * a001 + a100 * a101 * a011 * a010 +
       a100 * a101 * a110 * a111;
  m += a010 * a110 * a101 * a001 + a010 * a110 * a011 * a111 + a001 * a011 * a101 * a111;
  return m;
}

Count count_canonical_base(const AVector& a) {
  const int t = a.t();
  if (t == 0) return a.k();
  const std::uint64_t ones = (std::uint64_t{1} << t) - 1;
  for (const auto& [tau, c] : a.nonzero()) {
    if (tau != 0 && std::popcount(tau) != 1 && tau != ones) {
      throw DomainError("count_canonical_base: a_" + tau_string(t, tau) + " > 0 outside {e_1, ..., e_t, 1}");
    }
  }
  Count m = a.k();
  if (t == 1) return m + choose2(a[1]);

  for (int i = 0; i < t; ++i) m += choose2(a[std::uint64_t{1} << i]);
  m += choose2(a[ones]);
  // Subsets containing 1 plus a nonempty set U of unit vectors:
  // a_1 * (prod_i (1 + a_{e_i}) - 1).
  Count units = 1;
  for (int i = 0; i < t; ++i) units *= 1 + a[std::uint64_t{1} << i];
  m += a[ones] * (units - 1);
  return m;
}

namespace {

struct TupleWalker {
  int t;
  std::vector<Count> a;
  __int128 total = 0;

  // `span` holds the elements of the span of the chosen prefix as a bit mask over F_2^t.
  void walk(int depth, std::uint64_t span, std::uint32_t sum, __int128 prod) {
    if (depth == t) {
      total += prod * a[sum];
      return;
    }
    const std::uint32_t size = 1U << t;
    for (std::uint32_t tau = 1; tau < size; ++tau) {
      if ((span >> tau) & 1U) continue;
      const Count w = a[tau];
      if (w == 0) continue;
      std::uint64_t grown = span;
      for (std::uint64_t b = span; b != 0; b &= b - 1) {
        grown |= std::uint64_t{1} << (static_cast<std::uint32_t>(std::countr_zero(b)) ^ tau);
      }
      walk(depth + 1, grown, sum ^ tau, prod * w);
    }
  }
};

std::string int128_to_string(__int128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  std::string s;
  while (u > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  return neg ? "-" + s : s;
}

}  // namespace

Rational leading_term(const AVector& a) {
  const int t = a.t();
  if (t < 2 || t > kMaxCatalogT) throw std::invalid_argument("leading_term: t must be in 2..5");
  TupleWalker walker{t, a.dense()};
  walker.walk(0, std::uint64_t{1}, 0, 1);
  Count factorial = 1;
  for (int i = 2; i <= t + 1; ++i) factorial *= i;
  return Rational(BigInt(int128_to_string(walker.total)), BigInt(factorial));
}

Count projective_basis_sum(const AVector& a, const MGCatalog& catalog) {
  if (catalog.t() != a.t()) throw std::invalid_argument("projective_basis_sum: t mismatch");
  const auto dense = a.dense();
  Count sum = 0;
  for (TauSet s : catalog.sets_of_size(a.t() + 1)) sum += product(dense, s);
  return sum;
}

}  // namespace mincw
