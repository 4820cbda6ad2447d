#include "mincw/codewords.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

namespace mincw {

namespace {

std::uint64_t binomial_saturating(int n, int r) {
  if (r < 0 || r > n) return 0;
  unsigned __int128 acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

// Columns outside supp(word) span a hyperplane of the message space.
bool minimal_by_rank(const BitVec& word, const BinaryCode& code) {
  std::vector<BitVec> outside;
  for (int j = 0; j < code.n(); ++j) {
    if (!word.test(j)) outside.push_back(code.column(j));
  }
  return rank(outside) == code.k() - 1;
}

}  // namespace

bool is_minimal_in(const BitVec& word, const BinaryCode& code) {
  if (!code.contains(word)) throw DomainError("word " + word.to_string() + " is not a codeword");
  if (word.is_zero()) return false;
  if (code.k() > kBruteForceMaxK) return minimal_by_rank(word, code);
  for (const auto& c : code.codewords()) {
    if (!c.is_zero() && support_strictly_contained(c, word)) return false;
  }
  return true;
}

MinimalSet minimal_codewords_bruteforce(const BinaryCode& code) {
  if (code.k() > kBruteForceMaxK) {
    throw BudgetExceeded("brute-force enumeration is limited to k <= 20 (k = " + std::to_string(code.k()) + ")");
  }
  auto words = code.codewords();
  std::vector<std::uint64_t> nonzero;
  nonzero.reserve(words.size());
  for (const auto& w : words) {
    if (!w.is_zero()) nonzero.push_back(w.bits());
  }
  MinimalSet out{code, {}};
  for (std::uint64_t c : nonzero) {
    bool minimal = true;
    for (std::uint64_t d : nonzero) {
      if (d != c && (d & ~c) == 0) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.words.emplace_back(code.n(), c);
  }
  std::sort(out.words.begin(), out.words.end());
  return out;
}

std::uint64_t systematic_subset_count(int k, int t) {
  const int max_size = std::min(k, t + 1);
  std::uint64_t total = 0;
  for (int s = 1; s <= max_size; ++s) {
    const std::uint64_t c = binomial_saturating(k, s);
    if (total > std::numeric_limits<std::uint64_t>::max() - c) return std::numeric_limits<std::uint64_t>::max();
    total += c;
  }
  return total;
}

void for_each_minimal_subset(const SystematicCode& sc, std::uint64_t budget,
                             const std::function<void(std::uint64_t, std::uint64_t)>& visit) {
  const int k = sc.k;
  const int max_size = std::min(k, sc.t + 1);
  const std::uint64_t work = systematic_subset_count(k, sc.t);
  if (work > budget) {
    throw BudgetExceeded("systematic enumeration needs " + std::to_string(work) +
                         " subsets, budget is " + std::to_string(budget) +
                         "; use the brute-force enumerator or raise the budget");
  }
  if (max_size > 24) throw BudgetExceeded("subset cardinality above 24 is not supported");

  std::vector<std::uint64_t> info(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) info[static_cast<std::size_t>(i)] = sc.info_rows[static_cast<std::size_t>(i)].bits();

  using u128 = unsigned __int128;
  const u128 limit = u128{1} << k;
  std::uint64_t members[64];

  for (int s = 1; s <= max_size; ++s) {
    // Gosper's hack walks the s-subsets in increasing integer (colex) order.
    for (u128 mask = (u128{1} << s) - 1; mask < limit;) {
      const auto subset = static_cast<std::uint64_t>(mask);
      int m = 0;
      std::uint64_t total = 0;
      for (std::uint64_t b = subset; b != 0; b &= b - 1) {
        members[m] = info[static_cast<std::size_t>(std::countr_zero(b))];
        total ^= members[m++];
      }

      // Walk every nonempty proper subset T of S by Gray code. c^S is minimal
      // iff no c^T_I vanishes and, when c^S_I != 0, no c^T_I has support
      // strictly inside supp(c^S_I).
      bool minimal = true;
      std::uint64_t partial = 0;
      const std::uint64_t full = (std::uint64_t{1} << m) - 1;
      for (std::uint64_t g = 1; g <= full; ++g) {
        partial ^= members[std::countr_zero(g)];
        if ((g ^ (g >> 1)) == full) continue;
        if (partial == 0 || (total != 0 && (partial & ~total) == 0 && partial != total)) {
          minimal = false;
          break;
        }
      }
      if (minimal) visit(subset, total);

      const u128 lowest = mask & (~mask + 1);
      const u128 ripple = mask + lowest;
      mask = ((((ripple ^ mask) >> 2) / lowest)) | ripple;
    }
  }
}

MinimalSet minimal_codewords_systematic(const BinaryCode& code, std::uint64_t budget) {
  const SystematicCode sc = to_systematic(code);
  MinimalSet out{code, {}};
  for_each_minimal_subset(sc, budget, [&](std::uint64_t subset, std::uint64_t info_sum) {
    const std::uint64_t sys = subset | (sc.t > 0 ? info_sum << sc.k : 0);
    out.words.push_back(sc.to_original(BitVec(sc.n(), sys)));
  });
  std::sort(out.words.begin(), out.words.end());
  return out;
}

AVector a_vector(const SystematicCode& sc) {
  AVector a(sc.t);
  for (const auto& row : sc.info_rows) a.add(row.bits(), 1);
  return a;
}

BinaryCode code_from_avector(const AVector& a) {
  const Count k = a.k();
  const int t = a.t();
  if (k < 1) throw InvalidCodeError("a-vector must have k >= 1");
  if (k + t > kMaxLength) throw InvalidCodeError("code length k + t exceeds 64");
  const int n = static_cast<int>(k) + t;
  std::vector<BitVec> rows;
  int i = 0;
  for (const auto& [tau, c] : a.nonzero()) {
    for (Count r = 0; r < c; ++r, ++i) {
      rows.emplace_back(n, (std::uint64_t{1} << i) | (tau << k));
    }
  }
  return BinaryCode(std::move(rows));
}

std::string to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::ZeroColumn:
      return "zero-column";
    case ReductionKind::DuplicateColumn:
      return "duplicate-column";
    case ReductionKind::WeightOneCoordinate:
      return "weight-one-coordinate";
    case ReductionKind::ZeroInfoRow:
      return "zero-info-row";
    case ReductionKind::DirectSumSplit:
      return "direct-sum-split";
  }
  return "unknown";
}

namespace {

// A code held as its columns (each of length k) plus the original 1-indexed
// coordinate each column came from.
struct Work {
  int k = 0;
  std::vector<BitVec> cols;
  std::vector<int> labels;
};

std::string label_list(const std::vector<int>& labels) {
  std::string s = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(labels[i]);
  }
  return s + "}";
}

class Reducer {
 public:
  Reducer(ReductionOrder order, Reduction& out) : order_(order), out_(out) {}

  void run(Work w) {
    while (true) {
      if (w.k == 0) {
        for (int label : w.labels) {
          step(ReductionKind::ZeroColumn, "coordinate " + std::to_string(label));
        }
        return;
      }
      if (order_ == ReductionOrder::SplitFirst && try_split(w)) return;
      if (strip_zero_columns(w)) continue;
      if (strip_duplicate_columns(w)) continue;
      if (strip_weight_one(w)) continue;
      if (try_split(w)) return;
      out_.components.push_back(BinaryCode::from_columns(w.k, w.cols));
      return;
    }
  }

 private:
  void step(ReductionKind kind, std::string detail) { out_.trace.steps.push_back({kind, std::move(detail)}); }

  bool strip_zero_columns(Work& w) {
    bool changed = false;
    for (std::size_t j = 0; j < w.cols.size();) {
      if (w.cols[j].is_zero()) {
        step(ReductionKind::ZeroColumn, "coordinate " + std::to_string(w.labels[j]));
        w.cols.erase(w.cols.begin() + static_cast<std::ptrdiff_t>(j));
        w.labels.erase(w.labels.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
      } else {
        ++j;
      }
    }
    return changed;
  }

  bool strip_duplicate_columns(Work& w) {
    bool changed = false;
    for (std::size_t j = 1; j < w.cols.size();) {
      auto first = std::find(w.cols.begin(), w.cols.begin() + static_cast<std::ptrdiff_t>(j), w.cols[j]);
      if (first != w.cols.begin() + static_cast<std::ptrdiff_t>(j)) {
        const int original = w.labels[static_cast<std::size_t>(first - w.cols.begin())];
        step(ReductionKind::DuplicateColumn,
             "coordinate " + std::to_string(w.labels[j]) + " duplicates coordinate " + std::to_string(original));
        w.cols.erase(w.cols.begin() + static_cast<std::ptrdiff_t>(j));
        w.labels.erase(w.labels.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
      } else {
        ++j;
      }
    }
    return changed;
  }

  // A weight-one codeword e_p exists iff some systematic row has a zero
  // information part; p is that row's pivot column.
  bool strip_weight_one(Work& w) {
    const auto sc = to_systematic(BinaryCode::from_columns(w.k, w.cols));
    for (int i = 0; i < sc.k; ++i) {
      if (!sc.info_rows[static_cast<std::size_t>(i)].is_zero()) continue;
      const int p = sc.col_perm[static_cast<std::size_t>(i)] - 1;
      step(ReductionKind::WeightOneCoordinate, "coordinate " + std::to_string(w.labels[static_cast<std::size_t>(p)]));
      out_.trace.delta += 1;

      // Shorten: drop row i of the systematic generator and column p.
      const auto rows = sc.generator().rows();
      Work next;
      next.k = w.k - 1;
      for (std::size_t j = 0; j < w.cols.size(); ++j) {
        if (static_cast<int>(j) == p) continue;
        BitVec col(next.k);
        int r = 0;
        for (int row = 0; row < sc.k; ++row) {
          if (row == i) continue;
          if (rows[static_cast<std::size_t>(row)].test(static_cast<int>(j))) col.set(r);
          ++r;
        }
        next.cols.push_back(col);
        next.labels.push_back(w.labels[j]);
      }
      w = std::move(next);
      return true;
    }
    return false;
  }

  // Blocks are the connected components of the bipartite graph linking each
  // pivot column to the information columns its row touches.
  bool try_split(Work& w) {
    const int n = static_cast<int>(w.cols.size());
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    const auto sc = to_systematic(BinaryCode::from_columns(w.k, w.cols));
    for (int i = 0; i < sc.k; ++i) {
      const int pivot = sc.col_perm[static_cast<std::size_t>(i)] - 1;
      for (int c = 0; c < sc.t; ++c) {
        if (sc.info_rows[static_cast<std::size_t>(i)].test(c)) {
          const int other = sc.col_perm[static_cast<std::size_t>(sc.k + c)] - 1;
          parent[static_cast<std::size_t>(find(pivot))] = find(other);
        }
      }
    }
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of(static_cast<std::size_t>(n), -1);
    for (int j = 0; j < n; ++j) {
      const int root = find(j);
      if (block_of[static_cast<std::size_t>(root)] < 0) {
        block_of[static_cast<std::size_t>(root)] = static_cast<int>(blocks.size());
        blocks.emplace_back();
      }
      blocks[static_cast<std::size_t>(block_of[static_cast<std::size_t>(root)])].push_back(j);
    }
    if (blocks.size() < 2) return false;

    std::string detail;
    for (const auto& b : blocks) {
      std::vector<int> labels;
      for (int j : b) labels.push_back(w.labels[static_cast<std::size_t>(j)]);
      if (!detail.empty()) detail += " | ";
      detail += label_list(labels);
    }
    step(ReductionKind::DirectSumSplit, detail);

    const auto rows = sc.generator().rows();
    for (const auto& b : blocks) {
      std::vector<int> block_rows;
      for (int i = 0; i < sc.k; ++i) {
        const int pivot = sc.col_perm[static_cast<std::size_t>(i)] - 1;
        if (std::find(b.begin(), b.end(), pivot) != b.end()) block_rows.push_back(i);
      }
      Work part;
      part.k = static_cast<int>(block_rows.size());
      for (int j : b) {
        BitVec col(part.k);
        for (int r = 0; r < part.k; ++r) {
          if (rows[static_cast<std::size_t>(block_rows[static_cast<std::size_t>(r)])].test(j)) col.set(r);
        }
        part.cols.push_back(col);
        part.labels.push_back(w.labels[static_cast<std::size_t>(j)]);
      }
      run(std::move(part));
    }
    return true;
  }

  ReductionOrder order_;
  Reduction& out_;
};

}  // namespace

Reduction reduce(const BinaryCode& code, ReductionOrder order) {
  Reduction out;
  Work w;
  w.k = code.k();
  w.cols = code.columns();
  for (int j = 0; j < code.n(); ++j) w.labels.push_back(j + 1);
  Reducer(order, out).run(std::move(w));
  return out;
}

}  // namespace mincw
