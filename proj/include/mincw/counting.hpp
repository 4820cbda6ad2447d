#pragma once

// M(C) as a function of the counting vector a(C):
//   M = k + sum_{tau != 0} C(a_tau, 2) + sum_{S minimal generating, 2 <= |S| <= t+1} prod_{tau in S} a_tau.

#include <map>

#include "mincw/avector.hpp"
#include "mincw/mgsets.hpp"
#include "mincw/rational.hpp"

namespace mincw {

struct CountBreakdown {
  Count singletons = 0;  // k
  Count pair_term = 0;   // sum over tau != 0 of C(a_tau, 2)
  std::map<int, Count> mg_terms_by_size;
  Count total = 0;
};

CountBreakdown count_breakdown(const AVector& a, const MGCatalog& catalog);

// Requires catalog.t() == a.t(). t = 0 returns k without consulting the catalog.
Count count_general(const AVector& a, const MGCatalog& catalog);

// Uses the shared catalog for a.t() (t <= 5).
Count count_general(const AVector& a);

// Closed forms. Each must agree with count_general.
Count count_t1(const AVector& a);
Count count_t2(const AVector& a);
Count count_t3(const AVector& a);

// Valid when a vanishes off {0, e_1, ..., e_t, 1}; throws DomainError otherwise.
Count count_canonical_base(const AVector& a);

// Degree-(t+1) part of M: the ordered-tuple sum over tau_1..tau_t with each
// tau_i outside the span of its predecessors, weighted by a_{tau_1 + ... + tau_t},
// divided by (t+1)!. 2 <= t <= 5.
Rational leading_term(const AVector& a);

// The same quantity read off the catalog: sum over projective bases of prod a_tau.
Count projective_basis_sum(const AVector& a, const MGCatalog& catalog);

}  // namespace mincw
