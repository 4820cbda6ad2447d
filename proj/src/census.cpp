#include "mincw/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>

#include "mincw/codewords.hpp"

namespace mincw {

namespace {

std::uint64_t choose_saturating(int n, int r) {
  if (r < 0 || r > n) return 0;
  unsigned __int128 acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

void check_census_args(int n, int k) {
  if (k < 1 || k > kCensusMaxK) throw std::invalid_argument("census: k must be in 1..5");
  if (n < k || n > kMaxLength) throw std::invalid_argument("census: need k <= n <= 64");
}

// Columns are the nonzero vectors v = 1..2^k-1, stored at index v - 1 of a
// 31-bit set. For a full-rank column set C, the codeword of message u is
// minimal iff the columns orthogonal to u span the hyperplane u^perp. Each
// hyperplane gets its own numbering of its 2^(k-1) - 1 nonzero members so the
// orthogonal part of C becomes a small index into a precomputed span table.
struct Kernel {
  int k = 0;
  int columns = 0;                          // 2^k - 1
  std::array<std::uint32_t, 32> odd{};      // odd[u]: columns c with <u, c> = 1
  std::array<std::array<std::uint16_t, 32>, 32> slot{};  // slot[u][c]: bit of c in u's numbering
  std::array<std::vector<std::uint8_t>, 32> spans{};     // spans[u][index]: spans u^perp

  explicit Kernel(int k_) : k(k_), columns((1 << k_) - 1) {
    for (int u = 1; u <= columns; ++u) {
      std::vector<std::uint32_t> members;
      for (int c = 1; c <= columns; ++c) {
        if (std::popcount(static_cast<unsigned>(u & c)) & 1) {
          odd[static_cast<std::size_t>(u)] |= 1U << (c - 1);
        } else {
          slot[static_cast<std::size_t>(u)][static_cast<std::size_t>(c - 1)] =
              static_cast<std::uint16_t>(1U << members.size());
          members.push_back(static_cast<std::uint32_t>(c));
        }
      }
      auto& table = spans[static_cast<std::size_t>(u)];
      table.resize(std::size_t{1} << members.size());
      for (std::size_t mask = 0; mask < table.size(); ++mask) {
        std::vector<BitVec> chosen;
        for (std::size_t i = 0; i < members.size(); ++i) {
          if ((mask >> i) & 1U) chosen.emplace_back(k, members[i]);
        }
        table[mask] = rank(chosen) == k - 1 ? 1 : 0;
      }
    }
  }
};

struct LevelBest {
  Count value = -1;
  std::vector<int> witness;  // column indices, ascending
  std::uint64_t full_rank = 0;
};

// Depth-first scan of all column sets of size 1..max_size in lexicographic
// order, starting from a fixed first column.
class Scan {
 public:
  Scan(const Kernel& kernel, int max_size) : kernel_(kernel), max_size_(max_size), best_(static_cast<std::size_t>(max_size) + 1) {}

  void run(int first) {
    std::array<std::uint16_t, 32> index{};
    chosen_.clear();
    descend(first, 0, index);
  }

  const std::vector<LevelBest>& best() const { return best_; }

 private:
  void descend(int c, std::uint32_t set, std::array<std::uint16_t, 32> index) {
    set |= 1U << c;
    for (int u = 1; u <= kernel_.columns; ++u) index[static_cast<std::size_t>(u)] |= kernel_.slot[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)];
    chosen_.push_back(c);
    evaluate(set, index);
    if (static_cast<int>(chosen_.size()) < max_size_) {
      for (int next = c + 1; next < kernel_.columns; ++next) descend(next, set, index);
    }
    chosen_.pop_back();
  }

  void evaluate(std::uint32_t set, const std::array<std::uint16_t, 32>& index) {
    const int size = static_cast<int>(chosen_.size());
    if (size < kernel_.k) return;
    for (int u = 1; u <= kernel_.columns; ++u) {
      if ((kernel_.odd[static_cast<std::size_t>(u)] & set) == 0) return;
    }
    Count m = 0;
    for (int u = 1; u <= kernel_.columns; ++u) m += kernel_.spans[static_cast<std::size_t>(u)][index[static_cast<std::size_t>(u)]];
    LevelBest& b = best_[static_cast<std::size_t>(size)];
    ++b.full_rank;
    if (m > b.value) {
      b.value = m;
      b.witness = chosen_;
    }
  }

  const Kernel& kernel_;
  int max_size_;
  std::vector<LevelBest> best_;
  std::vector<int> chosen_;
};

std::vector<LevelBest> scan_all(int max_size, int k, const SearchOptions& options) {
  const Kernel kernel(k);
  const int size = std::min(max_size, kernel.columns);
  std::vector<std::vector<LevelBest>> per_first(static_cast<std::size_t>(kernel.columns));
  std::atomic<int> next{0};
  auto worker = [&] {
    while (true) {
      const int first = next.fetch_add(1);
      if (first >= kernel.columns) return;
      Scan local(kernel, size);
      local.run(first);
      per_first[static_cast<std::size_t>(first)] = local.best();
    }
  };
  const unsigned threads = std::min<unsigned>(resolve_threads(options.threads), static_cast<unsigned>(kernel.columns));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  // Earlier first columns are lexicographically smaller, so they win ties.
  std::vector<LevelBest> merged(static_cast<std::size_t>(max_size) + 1);
  for (const auto& part : per_first) {
    for (std::size_t s = 0; s < part.size(); ++s) {
      merged[s].full_rank += part[s].full_rank;
      if (part[s].value > merged[s].value) {
        merged[s].value = part[s].value;
        merged[s].witness = part[s].witness;
      }
    }
  }
  return merged;
}

CensusResult to_result(int n, int k, const LevelBest& b) {
  CensusResult r;
  r.n = n;
  r.k = k;
  r.max_m = std::max<Count>(b.value, 0);
  for (int c : b.witness) r.witness_columns.emplace_back(k, static_cast<std::uint64_t>(c + 1));
  return r;
}

}  // namespace

std::uint64_t census_folded_work(int n, int k) {
  if (k < 1 || k > kCensusMaxK) return std::numeric_limits<std::uint64_t>::max();
  const int columns = (1 << k) - 1;
  std::uint64_t total = 0;
  for (int s = 1; s <= std::min(n, columns); ++s) {
    const std::uint64_t c = choose_saturating(columns, s);
    if (total > std::numeric_limits<std::uint64_t>::max() - c) return std::numeric_limits<std::uint64_t>::max();
    total += c;
  }
  return total;
}

CensusResult census_max(int n, int k, const SearchOptions& options) {
  check_census_args(n, k);
  const std::uint64_t work = census_folded_work(n, k);
  if (work > options.budget) {
    throw BudgetExceeded("census (" + std::to_string(n) + "," + std::to_string(k) + ") needs " + std::to_string(work) +
                         " column sets, budget is " + std::to_string(options.budget));
  }
  const auto levels = scan_all(n, k, options);
  CensusResult r = to_result(n, k, levels[static_cast<std::size_t>(n)]);
  r.codes_scanned = levels[static_cast<std::size_t>(n)].full_rank;
  return r;
}

std::vector<CensusResult> census_folded_series(int n_max, int k, const SearchOptions& options) {
  check_census_args(n_max, k);
  const std::uint64_t work = census_folded_work(n_max, k);
  if (work > options.budget) {
    throw BudgetExceeded("census (" + std::to_string(n_max) + "," + std::to_string(k) + ") needs " +
                         std::to_string(work) + " column sets, budget is " + std::to_string(options.budget));
  }
  const auto levels = scan_all(n_max, k, options);
  std::vector<CensusResult> out;
  std::size_t best = 0;
  std::uint64_t scanned = 0;
  for (int n = 1; n <= n_max; ++n) {
    const auto s = static_cast<std::size_t>(n);
    scanned += levels[s].full_rank;
    if (levels[s].value > levels[best].value) best = s;
    if (n < k) continue;
    CensusResult r = to_result(n, k, levels[best]);
    r.codes_scanned = scanned;
    out.push_back(std::move(r));
  }
  return out;
}

CensusResult census_max_folded(int n, int k, const SearchOptions& options) {
  return census_folded_series(n, k, options).back();
}

AVector projective_base_avector(int k, int t) {
  if (t < 0 || t > 20) throw std::invalid_argument("projective base: t must be in 0..20");
  if (k < t + 1) throw std::invalid_argument("projective base: need k >= t + 1");
  AVector a(t);
  if (t == 0) {
    a.set(0, k);
    return a;
  }
  const std::uint64_t ones = (std::uint64_t{1} << t) - 1;
  for (int i = 1; i <= t + 1; ++i) {
    const std::uint64_t tau = i <= t ? (std::uint64_t{1} << (i - 1)) : ones;
    a.add(tau, (k + i - 1) / (t + 1));
  }
  return a;
}

BinaryCode construct_projective_base_code(int k, int t) { return code_from_avector(projective_base_avector(k, t)); }

AVector double_unit_avector(int k, int t) {
  if (t < 0 || t > 20) throw std::invalid_argument("double-unit code: t must be in 0..20");
  if (k < 2 * t || k < 1) throw std::invalid_argument("double-unit code: need k >= 2t and k >= 1");
  AVector a(t);
  for (int i = 0; i < t; ++i) a.set(std::uint64_t{1} << i, 2);
  a.set(0, k - 2 * t);
  return a;
}

BinaryCode construct_double_unit_code(int k, int t) { return code_from_avector(double_unit_avector(k, t)); }

bool is_projective(const BinaryCode& code) {
  std::set<std::uint64_t> seen;
  for (const auto& c : code.columns()) {
    if (c.is_zero() || !seen.insert(c.bits()).second) return false;
  }
  return true;
}

}  // namespace mincw
