#include "mincw/optimize.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <iomanip>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mincw/census.hpp"
#include "mincw/counting.hpp"
#include "mincw/mgsets.hpp"

namespace mincw {

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::string to_string(Method m) {
  switch (m) {
    case Method::ClosedFormT0:
      return "closed-form-t0";
    case Method::ClosedFormT1:
      return "closed-form-t1";
    case Method::ClosedFormT2:
      return "closed-form-t2";
    case Method::FormulaMax:
      return "formula-max";
    case Method::Census:
      return "census";
  }
  return "unknown";
}

Count Composition::total() const { return std::accumulate(parts.begin(), parts.end(), Count{0}); }

Objective Objective::full_count(int t) {
  Objective o;
  o.t = t;
  return o;
}

Objective Objective::leading(int t) {
  Objective o;
  o.t = t;
  o.linear = false;
  o.pairs = false;
  o.min_set_size = t + 1;
  o.max_set_size = t + 1;
  return o;
}

namespace {

std::vector<std::vector<int>> bit_permutations(int t) {
  std::vector<int> perm(static_cast<std::size_t>(t));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// tau -> image of tau, one table per permutation of the t bit positions.
std::vector<std::vector<std::uint32_t>> tau_maps(int t) {
  std::vector<std::vector<std::uint32_t>> maps;
  for (const auto& perm : bit_permutations(t)) {
    std::vector<std::uint32_t> m(std::size_t{1} << t);
    for (std::uint32_t tau = 0; tau < m.size(); ++tau) m[tau] = permute_tau(tau, perm);
    maps.push_back(std::move(m));
  }
  return maps;
}

std::vector<Count> canonical_with(const std::vector<std::vector<std::uint32_t>>& maps, const std::vector<Count>& dense) {
  std::vector<Count> best;
  std::vector<Count> image(dense.size());
  for (const auto& m : maps) {
    for (std::size_t tau = 0; tau < dense.size(); ++tau) image[m[tau]] = dense[tau];
    if (best.empty() || image < best) best = image;
  }
  return best;
}

void merge_best(TotalBest& into, const TotalBest& from, std::size_t keep) {
  if (from.value < 0) return;
  if (from.value > into.value) {
    into = from;
    return;
  }
  if (from.value < into.value) return;
  into.maximizers_truncated = into.maximizers_truncated || from.maximizers_truncated;
  for (const auto& m : from.maximizers) {
    if (std::find(into.maximizers.begin(), into.maximizers.end(), m) != into.maximizers.end()) continue;
    if (into.maximizers.size() < keep) {
      into.maximizers.push_back(m);
    } else {
      into.maximizers_truncated = true;
    }
  }
}

// Catalog sets as a trie over search positions, members taken in ascending
// position order. Node 0 is the empty prefix.
struct TermTrie {
  std::vector<std::array<std::int32_t, 32>> child;
  std::vector<std::uint8_t> complete;  // the prefix is a whole catalog set
  std::vector<std::uint8_t> extends;   // some catalog set continues past it

  TermTrie() { add_node(); }

  std::int32_t add_node() {
    std::array<std::int32_t, 32> none;
    none.fill(-1);
    child.push_back(none);
    complete.push_back(0);
    extends.push_back(0);
    return static_cast<std::int32_t>(child.size() - 1);
  }

  void insert(const std::vector<int>& positions) {
    std::int32_t node = 0;
    for (int p : positions) {
      extends[static_cast<std::size_t>(node)] = 1;
      auto& slot = child[static_cast<std::size_t>(node)][static_cast<std::size_t>(p)];
      if (slot < 0) {
        const std::int32_t fresh = add_node();
        child[static_cast<std::size_t>(node)][static_cast<std::size_t>(p)] = fresh;
        node = fresh;
      } else {
        node = slot;
      }
    }
    complete[static_cast<std::size_t>(node)] = 1;
  }
};

// Depth-first enumeration of compositions, one coordinate per level. The
// objective is accumulated incrementally: the stack of active trie prefixes
// holds every catalog-set prefix lying inside the current support together
// with the product of its counts, so a catalog set contributes the moment
// its last member is assigned.
class Engine {
 public:
  Engine(const Objective& obj, int max_total, bool symmetry, std::size_t keep, std::uint64_t budget)
      : t_(obj.t),
        r_((1 << obj.t) - 1),
        max_total_(max_total),
        symmetry_(symmetry),
        keep_(keep),
        budget_(budget),
        linear_(obj.linear),
        pairs_(obj.pairs),
        maps_(tau_maps(obj.t)) {
    for (int i = 0; i < t_; ++i) order_.push_back(1U << i);
    for (std::uint32_t tau = 1; tau <= static_cast<std::uint32_t>(r_); ++tau) {
      if (std::popcount(tau) != 1) order_.push_back(tau);
    }
    std::vector<int> pos_of(std::size_t{1} << t_, -1);
    for (int p = 0; p < r_; ++p) pos_of[order_[static_cast<std::size_t>(p)]] = p;

    const int max_size = obj.max_set_size == 0 ? t_ + 1 : obj.max_set_size;
    const auto& catalog = cached_catalog(t_);
    for (int s = obj.min_set_size; s <= max_size; ++s) {
      for (TauSet set : catalog.sets_of_size(s)) {
        std::vector<int> positions;
        for (TauSet b = set; b != 0; b &= b - 1) positions.push_back(pos_of[static_cast<std::size_t>(std::countr_zero(b))]);
        std::sort(positions.begin(), positions.end());
        trie_.insert(positions);
      }
    }
  }

  struct Task {
    std::vector<int> prefix;  // forced values of the first positions
  };

  std::vector<Task> make_tasks() const {
    std::vector<Task> tasks;
    const int depth = std::min(2, r_);
    std::vector<int> prefix;
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
      if (pos == depth) {
        tasks.push_back({prefix});
        return;
      }
      int vmax = remaining;
      if (symmetry_ && pos >= 1 && pos < t_) vmax = std::min(vmax, prefix.back());
      for (int v = vmax; v >= 0; --v) {
        prefix.push_back(v);
        self(self, pos + 1, remaining - v);
        prefix.pop_back();
      }
    };
    rec(rec, 0, max_total_);
    return tasks;
  }

  std::vector<TotalBest> run_task(const Task& task, std::atomic<std::uint64_t>& leaves, std::atomic<bool>& abort) {
    State st;
    st.best.assign(static_cast<std::size_t>(max_total_) + 1, TotalBest{});
    st.leaves = &leaves;
    st.abort = &abort;
    st.prefix = task.prefix;
    st.active.push_back({0, 1, 1});
    dfs(st, 0, max_total_, 0);
    flush(st);
    return std::move(st.best);
  }

 private:
  struct Active {
    std::int32_t node;
    Count base;     // product over the prefix without its newest member
    Count product;  // product over the whole prefix
  };

  struct State {
    std::array<Count, 32> a{};
    std::vector<int> prefix;
    std::vector<Active> active;
    std::vector<TotalBest> best;
    std::uint64_t pending = 0;
    std::atomic<std::uint64_t>* leaves = nullptr;
    std::atomic<bool>* abort = nullptr;
  };

  void flush(State& st) {
    if (st.pending == 0) return;
    const std::uint64_t total = st.leaves->fetch_add(st.pending, std::memory_order_relaxed) + st.pending;
    st.pending = 0;
    if (total > budget_) st.abort->store(true, std::memory_order_relaxed);
  }

  std::vector<Count> dense(const State& st) const {
    std::vector<Count> d(std::size_t{1} << t_, 0);
    for (int p = 0; p < r_; ++p) d[order_[static_cast<std::size_t>(p)]] = st.a[static_cast<std::size_t>(p)];
    return d;
  }

  // The enumeration runs in descending lexicographic order of the search
  // coordinates, so the first maximizer met is the one reported.
  void leaf(State& st, int total, Count value) {
    if (++st.pending >= 65536) flush(st);
    TotalBest& b = st.best[static_cast<std::size_t>(total)];
    if (value < b.value) return;
    if (value > b.value) {
      b.value = value;
      b.witness = dense(st);
      b.maximizers.clear();
      b.maximizers_truncated = false;
      if (keep_ > 0) b.maximizers.push_back(canonical_with(maps_, b.witness));
      return;
    }
    if (keep_ == 0) return;
    auto canon = canonical_with(maps_, dense(st));
    if (std::find(b.maximizers.begin(), b.maximizers.end(), canon) != b.maximizers.end()) return;
    if (b.maximizers.size() < keep_) {
      b.maximizers.push_back(std::move(canon));
    } else {
      b.maximizers_truncated = true;
    }
  }

  void dfs(State& st, int pos, int remaining, Count value) {
    if (st.abort->load(std::memory_order_relaxed)) return;
    // Once nothing is left every later coordinate is zero and adds nothing.
    if (pos == r_ || remaining == 0) {
      leaf(st, max_total_ - remaining, value);
      return;
    }

    // Sets completed by this position, and prefixes it extends.
    Count completed = 0;
    const std::size_t below = st.active.size();
    for (std::size_t i = 0; i < below; ++i) {
      const Active& e = st.active[i];
      const std::int32_t c = trie_.child[static_cast<std::size_t>(e.node)][static_cast<std::size_t>(pos)];
      if (c < 0) continue;
      if (trie_.complete[static_cast<std::size_t>(c)]) completed += e.product;
      if (trie_.extends[static_cast<std::size_t>(c)]) st.active.push_back({c, e.product, 0});
    }
    const std::size_t above = st.active.size();

    int vmin = 0;
    int vmax = remaining;
    if (symmetry_ && pos >= 1 && pos < t_) vmax = std::min<int>(vmax, static_cast<int>(st.a[static_cast<std::size_t>(pos - 1)]));
    if (static_cast<std::size_t>(pos) < st.prefix.size()) vmin = vmax = st.prefix[static_cast<std::size_t>(pos)];

    for (int v = vmax; v >= vmin; --v) {
      st.a[static_cast<std::size_t>(pos)] = v;
      if (v == 0) {
        st.active.resize(below);
        dfs(st, pos + 1, remaining, value);
        continue;
      }
      for (std::size_t i = below; i < above; ++i) st.active[i].product = st.active[i].base * v;
      Count delta = v * completed;
      if (linear_) delta += v;
      if (pairs_) delta += static_cast<Count>(v) * (v - 1) / 2;
      dfs(st, pos + 1, remaining - v, value + delta);
    }
    st.a[static_cast<std::size_t>(pos)] = 0;
    st.active.resize(below);
  }

  int t_;
  int r_;
  int max_total_;
  bool symmetry_;
  std::size_t keep_;
  std::uint64_t budget_;
  bool linear_;
  bool pairs_;
  std::vector<std::vector<std::uint32_t>> maps_;
  std::vector<std::uint32_t> order_;
  TermTrie trie_;
};

}  // namespace

std::vector<Count> canonical_form(int t, const std::vector<Count>& dense) {
  if (t < 0 || t > kMaxCatalogT) throw std::invalid_argument("canonical_form: t must be in 0..5");
  if (dense.size() != (std::size_t{1} << t)) throw std::invalid_argument("canonical_form: expected 2^t entries");
  return canonical_with(tau_maps(t), dense);
}

CompositionSearchResult search_compositions(const Objective& objective, int max_total, const SearchOptions& options,
                                            std::size_t keep_maximizers) {
  if (objective.t < 1 || objective.t > kMaxCatalogT) {
    throw std::invalid_argument("search_compositions: t must be in 1..5");
  }
  if (max_total < 0) throw std::invalid_argument("search_compositions: negative total");

  Engine engine(objective, max_total, options.symmetry, keep_maximizers, options.budget);
  const auto tasks = engine.make_tasks();
  std::vector<std::vector<TotalBest>> results(tasks.size());
  std::atomic<std::uint64_t> leaves{0};
  std::atomic<bool> abort{false};
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      results[i] = engine.run_task(tasks[i], leaves, abort);
    }
  };
  const unsigned threads = std::min<unsigned>(resolve_threads(options.threads), static_cast<unsigned>(tasks.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  CompositionSearchResult out;
  out.by_total.assign(static_cast<std::size_t>(max_total) + 1, TotalBest{});
  for (const auto& r : results) {
    for (std::size_t j = 0; j < r.size(); ++j) merge_best(out.by_total[j], r[j], keep_maximizers);
  }
  out.leaves = leaves.load();
  out.exact = !abort.load();
  return out;
}

std::uint64_t search_leaf_estimate(int t, int max_total) {
  if (t < 1 || t > kMaxCatalogT || max_total < 0) throw std::invalid_argument("search_leaf_estimate: bad arguments");
  const int r = (1 << t) - 1;
  BigInt c = binomial(max_total + r, r);
  for (int i = 2; i <= t; ++i) c /= i;
  if (c > BigInt(std::numeric_limits<std::uint64_t>::max())) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(c);
}

MaxMinResult maxmin(int n, int k, const SearchOptions& options) {
  if (k < 1) throw std::invalid_argument("maxmin: k must be at least 1");
  const int t = n - k;
  if (t < 0) throw std::invalid_argument("maxmin: n must be at least k");
  if (t > kMaxCatalogT) throw std::invalid_argument("maxmin: the exhaustive path needs n - k <= 5");

  MaxMinResult out;
  out.n = n;
  out.k = k;
  out.t = t;
  if (t == 0) {
    out.value = k;
    AVector w(0);
    w.set(0, k);
    out.witness = w;
    out.method = Method::ClosedFormT0;
    return out;
  }

  const auto search = search_compositions(Objective::full_count(t), k, options);
  out.method = Method::FormulaMax;
  out.exact = search.exact;
  out.nodes = search.leaves;

  // a_0 = m rows with zero information part each add exactly one minimal codeword.
  int best_m = -1;
  Count best = -1;
  for (int m = 0; m <= k; ++m) {
    const auto& b = search.by_total[static_cast<std::size_t>(k - m)];
    if (b.value < 0) continue;
    if (m + b.value > best) {
      best = m + b.value;
      best_m = m;
    }
  }
  out.value = best;
  if (best_m >= 0) {
    auto dense = search.by_total[static_cast<std::size_t>(k - best_m)].witness;
    if (dense.empty()) dense.assign(std::size_t{1} << t, 0);
    dense[0] = best_m;
    out.witness = AVector::from_dense(t, dense);
  }
  return out;
}

Count maxmin_closed_t1(int k) {
  if (k < 1) throw std::invalid_argument("maxmin_closed_t1: k must be at least 1");
  return static_cast<Count>(k + 1) * k / 2;
}

Count maxmin_closed_t2(int k) {
  if (k < 1) throw std::invalid_argument("maxmin_closed_t2: k must be at least 1");
  const Count kk = k;
  return kk + kk * (kk - 1) / 2 + ((kk - 1) / 3) * (kk / 3) * ((kk + 1) / 3);
}

BigInt elementary_symmetric(const std::vector<Count>& x, int s) {
  if (s < 0) throw std::invalid_argument("elementary_symmetric: negative degree");
  std::vector<BigInt> e(static_cast<std::size_t>(s) + 1, 0);
  e[0] = 1;
  for (Count v : x) {
    for (int d = s; d >= 1; --d) e[static_cast<std::size_t>(d)] += e[static_cast<std::size_t>(d - 1)] * v;
  }
  return e[static_cast<std::size_t>(s)];
}

SymmetricOptimum symmetric_opt(int m, int r, int s) {
  if (m < 0) throw std::invalid_argument("symmetric_opt: m must be non-negative");
  if (r < 1 || s < 1 || s > r) throw std::invalid_argument("symmetric_opt: need 1 <= s <= r");
  SymmetricOptimum out;
  for (int i = 1; i <= r; ++i) out.assignment.parts.push_back((m + i - 1) / r);
  out.value = elementary_symmetric(out.assignment.parts, s);
  Rational per = Rational(m, r);
  Rational pow = 1;
  for (int i = 0; i < s; ++i) pow *= per;
  out.real_value = Rational(binomial(r, s)) * pow;
  return out;
}

namespace {

// Row n lists M_2(n, 1..n).
constexpr std::array<std::array<int, 15>, 15> kReference = {{
    {1},
    {1, 2},
    {1, 3, 3},
    {1, 3, 6, 4},
    {1, 3, 6, 10, 5},
    {1, 3, 7, 11, 15, 6},
    {1, 3, 7, 14, 17, 21, 7},
    {1, 3, 7, 14, 22, 25, 28, 8},
    {1, 3, 7, 15, 26, 33, 36, 36, 9},
    {1, 3, 7, 15, 30, 42, 48, 48, 45, 10},
    {1, 3, 7, 15, 30, 52, 66, 69, 63, 55, 11},
    {1, 3, 7, 15, 30, 54, 90, 103, 95, 82, 66, 12},
    {1, 3, 7, 15, 31, 58, 94, 151, 149, 130, 102, 78, 13},
    {1, 3, 7, 15, 31, 62, 106, 159, 245, 217, 175, 126, 91, 14},
    {1, 3, 7, 15, 31, 63, 110, 183, 257, 385, 308, 221, 155, 196, 15},
}};

}  // namespace

std::optional<Count> reference_value(int n, int k) {
  if (n < 1 || n > 15 || k < 1 || k > n) return std::nullopt;
  return kReference[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)];
}

const TableCell& TableResult::at(int n, int k) const {
  for (const auto& c : cells) {
    if (c.n == n && c.k == k) return c;
  }
  throw std::out_of_range("table cell (" + std::to_string(n) + "," + std::to_string(k) + ") not present");
}

TableResult table(int n_max, int t_cap, const SearchOptions& options) {
  if (n_max < 1 || n_max > kMaxLength) throw std::invalid_argument("table: n_max must be in 1..64");
  if (t_cap < 0 || t_cap > kMaxCatalogT) throw std::invalid_argument("table: t_cap must be in 0..5");

  TableResult out;
  out.n_max = n_max;
  out.t_cap = t_cap;

  // One composition search per t covers every k in the column band, and one
  // census scan per k covers every n.
  std::vector<std::optional<CompositionSearchResult>> searches(static_cast<std::size_t>(kMaxCatalogT) + 1);
  for (int t = 3; t <= std::min(t_cap, n_max - 1); ++t) {
    searches[static_cast<std::size_t>(t)] = search_compositions(Objective::full_count(t), n_max - t, options);
  }
  std::vector<std::vector<CensusResult>> census(static_cast<std::size_t>(kCensusMaxK) + 1);
  for (int k = 1; k <= std::min(kCensusMaxK, n_max); ++k) {
    int reach = 0;
    for (int n = k + t_cap + 1; n <= n_max; ++n) {
      const std::uint64_t work = census_folded_work(n, k);
      if (work <= kCensusTableWork && work <= options.budget) reach = n;
    }
    if (reach > 0) census[static_cast<std::size_t>(k)] = census_folded_series(reach, k, options);
  }

  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      TableCell cell;
      cell.n = n;
      cell.k = k;
      cell.reference = reference_value(n, k);
      const int t = n - k;
      MaxMinResult r;
      r.n = n;
      r.k = k;
      r.t = t;
      if (t == 0) {
        r.value = k;
        r.method = Method::ClosedFormT0;
        cell.result = r;
      } else if (t == 1 && t <= t_cap) {
        r.value = maxmin_closed_t1(k);
        r.method = Method::ClosedFormT1;
        cell.result = r;
      } else if (t == 2 && t <= t_cap) {
        r.value = maxmin_closed_t2(k);
        r.method = Method::ClosedFormT2;
        cell.result = r;
      } else if (t <= t_cap) {
        const auto& s = *searches[static_cast<std::size_t>(t)];
        Count best = -1;
        int best_m = 0;
        for (int m = 0; m <= k; ++m) {
          const Count v = s.by_total[static_cast<std::size_t>(k - m)].value;
          if (v >= 0 && m + v > best) {
            best = m + v;
            best_m = m;
          }
        }
        r.value = best;
        r.method = Method::FormulaMax;
        r.exact = s.exact;
        r.nodes = s.leaves;
        auto dense = s.by_total[static_cast<std::size_t>(k - best_m)].witness;
        if (dense.empty()) dense.assign(std::size_t{1} << t, 0);
        dense[0] = best_m;
        r.witness = AVector::from_dense(t, dense);
        cell.result = r;
        if (!s.exact) cell.note = "budget exceeded; value is a lower bound";
      } else if (k <= kCensusMaxK && static_cast<std::size_t>(n - k) < census[static_cast<std::size_t>(k)].size()) {
        const auto& c = census[static_cast<std::size_t>(k)][static_cast<std::size_t>(n - k)];
        r.value = c.max_m;
        r.method = Method::Census;
        r.nodes = c.codes_scanned;
        cell.result = r;
      }
      if (cell.result && cell.reference && *cell.reference != cell.result->value) {
        cell.inconsistent_reference = true;
        cell.note = "reference value " + std::to_string(*cell.reference) + " disagrees with computed " +
                    std::to_string(cell.result->value);
      }
      out.cells.push_back(std::move(cell));
    }
  }
  return out;
}

std::string table_csv(const TableResult& t) {
  std::ostringstream os;
  os << "n\\k";
  for (int k = 1; k <= t.n_max; ++k) os << ',' << k;
  os << '\n';
  for (int n = 1; n <= t.n_max; ++n) {
    os << n;
    for (int k = 1; k <= t.n_max; ++k) {
      os << ',';
      if (k > n) continue;
      const auto& c = t.at(n, k);
      if (c.result) {
        os << c.result->value;
      } else {
        os << "—";
      }
    }
    os << '\n';
  }
  for (const auto& c : t.cells) {
    if (c.inconsistent_reference || !c.note.empty()) {
      os << "# (" << c.n << "," << c.k << ") " << c.note << '\n';
    }
  }
  return os.str();
}

std::string table_text(const TableResult& t) {
  std::ostringstream os;
  const int w = 5;
  os << std::setw(4) << "n\\k";
  for (int k = 1; k <= t.n_max; ++k) os << std::setw(w) << k;
  os << '\n';
  for (int n = 1; n <= t.n_max; ++n) {
    os << std::setw(4) << n;
    for (int k = 1; k <= n; ++k) {
      const auto& c = t.at(n, k);
      if (c.result) {
        os << std::setw(w) << c.result->value;
      } else {
        // The dash is one column wide but three bytes long.
        os << std::string(static_cast<std::size_t>(w - 1), ' ') << "—";
      }
    }
    os << '\n';
  }
  os << "\nmethod (0/1/2 closed form for t = 0/1/2, F formula search, C census, - unavailable):\n";
  for (int n = 1; n <= t.n_max; ++n) {
    os << std::setw(4) << n << ' ';
    for (int k = 1; k <= n; ++k) {
      const auto& c = t.at(n, k);
      char tag = '-';
      if (c.result) {
        switch (c.result->method) {
          case Method::ClosedFormT0:
            tag = '0';
            break;
          case Method::ClosedFormT1:
            tag = '1';
            break;
          case Method::ClosedFormT2:
            tag = '2';
            break;
          case Method::FormulaMax:
            tag = 'F';
            break;
          case Method::Census:
            tag = 'C';
            break;
        }
      }
      os << tag;
    }
    os << '\n';
  }
  bool header = false;
  for (const auto& c : t.cells) {
    if (!c.inconsistent_reference && c.note.empty()) continue;
    if (!header) {
      os << "\nnotes:\n";
      header = true;
    }
    os << "  (" << c.n << "," << c.k << ") " << c.note << '\n';
  }
  return os.str();
}

}  // namespace mincw
