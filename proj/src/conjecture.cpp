#include "mincw/conjecture.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <random>
#include <stdexcept>

#include "mincw/counting.hpp"
#include "mincw/mgsets.hpp"

namespace mincw {

std::string to_string(ConjectureMode mode) {
  switch (mode) {
    case ConjectureMode::Exhaustive:
      return "exhaustive";
    case ConjectureMode::LocalSearch:
      return "local-search";
    case ConjectureMode::Auto:
      return "auto";
  }
  return "unknown";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Equal:
      return "equal";
    case Verdict::Unequal:
      return "unequal";
    case Verdict::NoBetterFound:
      return "no-better-found";
    case Verdict::Counterexample:
      return "counterexample";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

AVector conjectured_t3_avector(int k) {
  if (k < 4) throw std::invalid_argument("conjectured_t3_avector: k must be at least 4");
  // tau encodings of 100, 010, 001, 110, 101, 011, 111.
  constexpr std::array<std::uint64_t, 7> order = {0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};
  AVector a(3);
  if (k <= 26) {
    static constexpr std::array<std::array<int, 7>, 7> offsets = {{
        {0, 0, 0, 1, 1, 1, 1},
        {0, 0, 0, 1, 1, 1, 2},
        {0, 0, 0, 1, 1, 2, 2},
        {0, 0, 0, 1, 2, 2, 2},
        {1, 0, 0, 2, 2, 1, 2},
        {1, 0, 0, 2, 2, 2, 2},
        {1, 1, 0, 2, 2, 2, 2},
    }};
    const int l = (k - 4) / 7;
    const auto& row = offsets[static_cast<std::size_t>((k - 4) % 7)];
    for (std::size_t i = 0; i < 7; ++i) a.set(order[i], l + row[i]);
    return a;
  }
  if (k % 4 != 0) {
    a.set(0b001, k / 4);
    a.set(0b010, (k + 1) / 4);
    a.set(0b101, (k + 2) / 4);
    a.set(0b110, (k + 3) / 4);
  } else {
    a.set(0b001, k / 4);
    a.set(0b010, k / 4 - 1);
    a.set(0b101, k / 4 + 1);
    a.set(0b110, k / 4);
  }
  return a;
}

bool ConjectureT3Report::supported() const {
  return std::none_of(rows.begin(), rows.end(), [](const ConjectureT3Row& r) {
    return r.verdict == Verdict::Unequal || r.verdict == Verdict::Counterexample || r.verdict == Verdict::Inconclusive;
  });
}

bool LeadingReport::supported() const {
  return exact && std::all_of(rows.begin(), rows.end(), [](const LeadingRow& r) { return r.holds; });
}

namespace {

using Point = std::array<Count, 8>;

// M for t = 3 evaluated straight from the catalog on a dense point.
class T3Objective {
 public:
  T3Objective() : catalog_(cached_catalog(3)) {}

  Count operator()(const Point& a) const {
    Count m = 0;
    for (std::size_t tau = 0; tau < 8; ++tau) {
      m += a[tau];
      if (tau != 0) m += a[tau] * (a[tau] - 1) / 2;
    }
    for (TauSet s : catalog_.sets()) {
      Count p = 1;
      for (TauSet b = s; b != 0 && p != 0; b &= b - 1) p *= a[static_cast<std::size_t>(std::countr_zero(b))];
      m += p;
    }
    return m;
  }

 private:
  const MGCatalog& catalog_;
};

Point to_point(const AVector& a) {
  Point p{};
  const auto d = a.dense();
  std::copy(d.begin(), d.end(), p.begin());
  return p;
}

AVector to_avector(const Point& p) { return AVector::from_dense(3, std::vector<Count>(p.begin(), p.end())); }

struct ClimbResult {
  Point point;
  Count value;
  bool complete;  // false when the evaluation budget ran out
};

ClimbResult climb(Point p, const T3Objective& f, std::uint64_t& evaluations, std::uint64_t budget) {
  Count value = f(p);
  ++evaluations;
  while (true) {
    Count best = value;
    int from = -1;
    int to = -1;
    for (int i = 0; i < 8; ++i) {
      if (p[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; j < 8; ++j) {
        if (i == j) continue;
        if (evaluations >= budget) return {p, value, false};
        --p[static_cast<std::size_t>(i)];
        ++p[static_cast<std::size_t>(j)];
        const Count v = f(p);
        ++evaluations;
        ++p[static_cast<std::size_t>(i)];
        --p[static_cast<std::size_t>(j)];
        if (v > best) {
          best = v;
          from = i;
          to = j;
        }
      }
    }
    if (from < 0) return {p, value, true};
    --p[static_cast<std::size_t>(from)];
    ++p[static_cast<std::size_t>(to)];
    value = best;
  }
}

Point random_point(int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> cut(0, k);
  std::array<int, 7> cuts{};
  for (int& c : cuts) c = cut(rng);
  std::sort(cuts.begin(), cuts.end());
  Point p{};
  int prev = 0;
  for (std::size_t i = 0; i < 7; ++i) {
    p[i] = cuts[i] - prev;
    prev = cuts[i];
  }
  p[7] = k - prev;
  return p;
}

ConjectureT3Row local_row(int k, std::uint64_t seed, std::uint64_t budget) {
  const T3Objective f;
  ConjectureT3Row row;
  row.k = k;
  row.mode = ConjectureMode::LocalSearch;
  row.conjectured = conjectured_t3_avector(k);
  row.conjectured_value = count_t3(row.conjectured);

  std::uint64_t evaluations = 0;
  bool complete = true;
  const auto start = climb(to_point(row.conjectured), f, evaluations, budget);
  complete = complete && start.complete;
  row.conjectured_is_local_max = start.complete && start.value == row.conjectured_value;
  Point best = start.point;
  Count best_value = start.value;

  std::seed_seq seq{seed, static_cast<std::uint64_t>(k)};
  std::mt19937_64 rng(seq);
  for (int r = 0; r < kLocalSearchRestarts && complete; ++r) {
    const auto c = climb(random_point(k, rng), f, evaluations, budget);
    complete = complete && c.complete;
    if (c.value > best_value) {
      best_value = c.value;
      best = c.point;
    }
  }
  row.found = to_avector(best);
  row.found_value = count_t3(row.found);
  if (row.found_value > row.conjectured_value) {
    row.verdict = Verdict::Counterexample;
  } else if (!complete) {
    row.verdict = Verdict::Inconclusive;
  } else {
    row.verdict = Verdict::NoBetterFound;
  }
  return row;
}

}  // namespace

ConjectureT3Report check_conjecture_t3(int k_min, int k_max, ConjectureMode mode, std::uint64_t seed,
                                       const SearchOptions& options) {
  if (k_min < 4) throw std::invalid_argument("check_conjecture_t3: k_min must be at least 4");
  if (k_max < k_min) throw std::invalid_argument("check_conjecture_t3: k_max must be at least k_min");
  if (mode == ConjectureMode::Exhaustive && k_max > kExhaustiveConjectureMaxK) {
    throw std::invalid_argument("check_conjecture_t3: exhaustive mode is limited to k <= 40");
  }

  ConjectureT3Report report;
  report.k_min = k_min;
  report.k_max = k_max;
  report.seed = seed;

  const int exhaustive_max = mode == ConjectureMode::LocalSearch ? k_min - 1
                                                                  : std::min(k_max, kExhaustiveConjectureMaxK);
  std::optional<CompositionSearchResult> search;
  if (exhaustive_max >= k_min) search = search_compositions(Objective::full_count(3), exhaustive_max, options);

  for (int k = k_min; k <= k_max; ++k) {
    if (k > exhaustive_max) {
      report.rows.push_back(local_row(k, seed, options.budget));
      continue;
    }
    ConjectureT3Row row;
    row.k = k;
    row.mode = ConjectureMode::Exhaustive;
    row.conjectured = conjectured_t3_avector(k);
    row.conjectured_value = count_t3(row.conjectured);
    Count best = -1;
    int best_m = 0;
    for (int m = 0; m <= k; ++m) {
      const Count v = search->by_total[static_cast<std::size_t>(k - m)].value;
      if (v >= 0 && m + v > best) {
        best = m + v;
        best_m = m;
      }
    }
    auto dense = search->by_total[static_cast<std::size_t>(k - best_m)].witness;
    dense[0] = best_m;
    row.found = AVector::from_dense(3, dense);
    row.found_value = best;
    if (!search->exact) {
      row.verdict = row.found_value > row.conjectured_value ? Verdict::Counterexample : Verdict::Inconclusive;
    } else {
      row.verdict = row.found_value == row.conjectured_value ? Verdict::Equal : Verdict::Unequal;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

bool near_equal_on_basis(const std::vector<Count>& dense, const std::vector<TauSet>& bases) {
  TauSet support = 0;
  for (std::size_t tau = 1; tau < dense.size(); ++tau) {
    if (dense[tau] > 0) support |= TauSet{1} << tau;
  }
  if (dense[0] != 0) return false;
  for (TauSet b : bases) {
    if ((support & ~b) != 0) continue;
    Count lo = -1;
    Count hi = -1;
    for (TauSet m = b; m != 0; m &= m - 1) {
      const Count v = dense[static_cast<std::size_t>(std::countr_zero(m))];
      lo = lo < 0 ? v : std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (hi - lo <= 1) return true;
  }
  return false;
}

}  // namespace

LeadingReport check_conjecture_leading(int t, int k_min, int k_max, const SearchOptions& options) {
  if (t != 2 && t != 3) throw std::invalid_argument("check_conjecture_leading: t must be 2 or 3");
  if (k_min < 1 || k_max < k_min) throw std::invalid_argument("check_conjecture_leading: need 1 <= k_min <= k_max");

  LeadingReport report;
  report.t = t;
  report.k_min = k_min;
  report.k_max = k_max;

  const auto search = search_compositions(Objective::leading(t), k_max, options, kLeadingMaximizerCap);
  report.exact = search.exact;
  const auto bases = projective_bases(t);
  const auto& catalog = cached_catalog(t);
  const std::uint64_t ones = (std::uint64_t{1} << t) - 1;

  for (int k = k_min; k <= k_max; ++k) {
    const auto& b = search.by_total[static_cast<std::size_t>(k)];
    LeadingRow row;
    row.k = k;
    row.max_value = b.value;
    row.maximizers_truncated = b.maximizers_truncated;
    for (const auto& m : b.maximizers) row.maximizers.push_back(AVector::from_dense(t, m));

    row.projective_point = AVector(t);
    for (int i = 1; i <= t + 1; ++i) {
      const std::uint64_t tau = i <= t ? (std::uint64_t{1} << (i - 1)) : ones;
      row.projective_point.add(tau, (k + i - 1) / (t + 1));
    }
    row.projective_point_value = projective_basis_sum(row.projective_point, catalog);

    row.all_on_projective_basis = !row.maximizers_truncated &&
                                  std::all_of(b.maximizers.begin(), b.maximizers.end(),
                                              [&](const std::vector<Count>& m) { return near_equal_on_basis(m, bases); });
    // Below k = t + 1 every point scores 0 and the statement is vacuous.
    row.holds = row.projective_point_value == row.max_value && (row.max_value == 0 || row.all_on_projective_basis);
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace mincw
