#include "mincw/gf2.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mincw {

BitVec::BitVec(int length, std::uint64_t bits) : length_(length), bits_(bits) {
  if (length < 0 || length > kMaxLength) {
    throw std::invalid_argument("BitVec length must be in 0..64, got " + std::to_string(length));
  }
  if (bits & ~length_mask(length)) {
    throw std::invalid_argument("BitVec has bits set beyond its length");
  }
}

BitVec BitVec::parse(std::string_view text) {
  if (text.empty()) throw FormatError("empty bit string");
  if (text.size() > static_cast<std::size_t>(kMaxLength)) {
    throw FormatError("bit string longer than 64 characters");
  }
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '1') {
      bits |= std::uint64_t{1} << i;
    } else if (c != '0') {
      throw FormatError(std::string("illegal character '") + c + "' in bit string");
    }
  }
  return BitVec(static_cast<int>(text.size()), bits);
}

BitVec BitVec::unit(int length, int index) {
  if (index < 0 || index >= length) throw std::out_of_range("unit vector index out of range");
  return BitVec(length, std::uint64_t{1} << index);
}

BitVec BitVec::ones(int length) { return BitVec(length, length_mask(length)); }

int BitVec::weight() const { return std::popcount(bits_); }

void BitVec::set(int i, bool value) {
  if (i < 0 || i >= length_) throw std::out_of_range("bit index out of range");
  if (value) {
    bits_ |= std::uint64_t{1} << i;
  } else {
    bits_ &= ~(std::uint64_t{1} << i);
  }
}

static void require_same_length(const BitVec& a, const BitVec& b) {
  if (a.length() != b.length()) {
    throw std::invalid_argument("length mismatch: " + std::to_string(a.length()) + " vs " +
                                std::to_string(b.length()));
  }
}

BitVec BitVec::operator^(const BitVec& o) const {
  require_same_length(*this, o);
  return BitVec(length_, bits_ ^ o.bits_);
}

BitVec BitVec::operator&(const BitVec& o) const {
  require_same_length(*this, o);
  return BitVec(length_, bits_ & o.bits_);
}

BitVec& BitVec::operator^=(const BitVec& o) {
  require_same_length(*this, o);
  bits_ ^= o.bits_;
  return *this;
}

std::strong_ordering BitVec::operator<=>(const BitVec& o) const {
  if (auto c = length_ <=> o.length_; c != 0) return c;
  return bits_ <=> o.bits_;
}

std::string BitVec::to_string() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if (test(i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const BitVec& v) { return os << v.to_string(); }

std::vector<int> support(const BitVec& v) {
  std::vector<int> out;
  for (std::uint64_t b = v.bits(); b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

bool support_strictly_contained(const BitVec& a, const BitVec& b) {
  require_same_length(a, b);
  return (a.bits() & ~b.bits()) == 0 && a.bits() != b.bits();
}

namespace {

// Reduces `rows` in place to a basis; returns the rank.
int eliminate(std::vector<std::uint64_t>& rows) {
  int r = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::uint64_t v = rows[i];
    for (int j = 0; j < r; ++j) {
      const std::uint64_t p = rows[static_cast<std::size_t>(j)];
      // Each basis row is keyed by its lowest set bit.
      if (v & (p & (~p + 1))) v ^= p;
    }
    if (v != 0) {
      // Keep the basis fully reduced on its pivot bits.
      const std::uint64_t pivot = v & (~v + 1);
      for (int j = 0; j < r; ++j) {
        if (rows[static_cast<std::size_t>(j)] & pivot) rows[static_cast<std::size_t>(j)] ^= v;
      }
      rows[static_cast<std::size_t>(r++)] = v;
    }
  }
  rows.resize(static_cast<std::size_t>(r));
  return r;
}

}  // namespace

int rank(std::span<const BitVec> rows) {
  std::vector<std::uint64_t> words;
  words.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.length() != rows.front().length()) {
      throw std::invalid_argument("rank: rows of unequal length");
    }
    words.push_back(r.bits());
  }
  return eliminate(words);
}

std::vector<BitVec> span_enumerate(std::span<const BitVec> vectors, int length) {
  if (vectors.size() > static_cast<std::size_t>(kMaxSpanGenerators)) {
    throw BudgetExceeded("span_enumerate: more than 20 generators");
  }
  for (const auto& v : vectors) {
    if (v.length() != length) throw std::invalid_argument("span_enumerate: length mismatch");
  }
  std::vector<std::uint64_t> basis;
  for (const auto& v : vectors) basis.push_back(v.bits());
  const int r = eliminate(basis);

  std::vector<BitVec> out;
  out.reserve(std::size_t{1} << r);
  std::uint64_t acc = 0;
  out.emplace_back(length, 0);
  // Gray code walk over the basis.
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << r); ++i) {
    acc ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    out.emplace_back(length, acc);
  }
  std::sort(out.begin(), out.end());
  return out;
}

BinaryCode::BinaryCode(std::vector<BitVec> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw InvalidCodeError("a code needs at least one generator row");
  n_ = rows_.front().length();
  if (n_ < 1) throw InvalidCodeError("code length must be at least 1");
  for (const auto& r : rows_) {
    if (r.length() != n_) throw InvalidCodeError("generator rows have unequal lengths");
  }
  if (k() > n_) throw InvalidCodeError("rows dependent: more rows than columns");
  if (rank(rows_) != k()) throw InvalidCodeError("rows dependent: generator matrix is not full rank");
}

BinaryCode BinaryCode::from_columns(int k, std::span<const BitVec> columns) {
  if (columns.empty() || columns.size() > static_cast<std::size_t>(kMaxLength)) {
    throw InvalidCodeError("column count must be in 1..64");
  }
  const int n = static_cast<int>(columns.size());
  std::vector<BitVec> rows(static_cast<std::size_t>(k), BitVec(n));
  for (int j = 0; j < n; ++j) {
    const auto& col = columns[static_cast<std::size_t>(j)];
    if (col.length() != k) throw InvalidCodeError("column length differs from k");
    for (int i = 0; i < k; ++i) {
      if (col.test(i)) rows[static_cast<std::size_t>(i)].set(j);
    }
  }
  return BinaryCode(std::move(rows));
}

BitVec BinaryCode::column(int j) const {
  BitVec c(k());
  for (int i = 0; i < k(); ++i) {
    if (rows_[static_cast<std::size_t>(i)].test(j)) c.set(i);
  }
  return c;
}

std::vector<BitVec> BinaryCode::columns() const {
  std::vector<BitVec> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) out.push_back(column(j));
  return out;
}

bool BinaryCode::contains(const BitVec& word) const {
  if (word.length() != n_) return false;
  std::vector<BitVec> stacked = rows_;
  stacked.push_back(word);
  return rank(stacked) == k();
}

std::vector<BitVec> BinaryCode::codewords() const {
  if (k() > 20) throw BudgetExceeded("codeword listing limited to k <= 20");
  const std::uint64_t count = std::uint64_t{1} << k();
  std::vector<BitVec> out(count, BitVec(n_));
  std::uint64_t acc = 0;
  std::uint64_t gray_prev = 0;
  for (std::uint64_t i = 1; i < count; ++i) {
    const std::uint64_t gray = i ^ (i >> 1);
    const int flipped = std::countr_zero(gray ^ gray_prev);
    acc ^= rows_[static_cast<std::size_t>(flipped)].bits();
    out[gray] = BitVec(n_, acc);
    gray_prev = gray;
  }
  return out;
}

SystematicCode SystematicCode::from_info_rows(int t, std::vector<BitVec> info_rows) {
  SystematicCode sc;
  sc.k = static_cast<int>(info_rows.size());
  sc.t = t;
  for (const auto& r : info_rows) {
    if (r.length() != t) throw std::invalid_argument("information row length differs from t");
  }
  sc.info_rows = std::move(info_rows);
  sc.col_perm.resize(static_cast<std::size_t>(sc.n()));
  for (int j = 0; j < sc.n(); ++j) sc.col_perm[static_cast<std::size_t>(j)] = j + 1;
  return sc;
}

BitVec SystematicCode::to_original(const BitVec& w) const {
  BitVec out(n());
  for (std::uint64_t b = w.bits(); b != 0; b &= b - 1) {
    const int j = std::countr_zero(b);
    out.set(col_perm[static_cast<std::size_t>(j)] - 1);
  }
  return out;
}

BinaryCode SystematicCode::generator() const {
  std::vector<BitVec> rows;
  rows.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const std::uint64_t sys =
        (std::uint64_t{1} << i) |
        (t > 0 ? info_rows[static_cast<std::size_t>(i)].bits() << k : std::uint64_t{0});
    rows.push_back(to_original(BitVec(n(), sys)));
  }
  return BinaryCode(std::move(rows));
}

SystematicCode to_systematic(const BinaryCode& code) {
  const int k = code.k();
  const int n = code.n();
  std::vector<std::uint64_t> m;
  for (const auto& r : code.rows()) m.push_back(r.bits());

  std::vector<int> pivots;
  for (int i = 0; i < k; ++i) {
    auto& row = m[static_cast<std::size_t>(i)];
    if (row == 0) throw InvalidCodeError("rows dependent: generator matrix is not full rank");
    const int p = std::countr_zero(row);
    const std::uint64_t bit = std::uint64_t{1} << p;
    for (int r = 0; r < k; ++r) {
      if (r != i && (m[static_cast<std::size_t>(r)] & bit)) m[static_cast<std::size_t>(r)] ^= row;
    }
    pivots.push_back(p);
  }

  SystematicCode sc;
  sc.k = k;
  sc.t = n - k;
  std::uint64_t pivot_mask = 0;
  for (int p : pivots) {
    sc.col_perm.push_back(p + 1);
    pivot_mask |= std::uint64_t{1} << p;
  }
  std::vector<int> free_cols;
  for (int j = 0; j < n; ++j) {
    if (!((pivot_mask >> j) & 1U)) {
      free_cols.push_back(j);
      sc.col_perm.push_back(j + 1);
    }
  }
  for (int i = 0; i < k; ++i) {
    BitVec info(sc.t);
    for (int c = 0; c < sc.t; ++c) {
      if ((m[static_cast<std::size_t>(i)] >> free_cols[static_cast<std::size_t>(c)]) & 1U) info.set(c);
    }
    sc.info_rows.push_back(info);
  }
  return sc;
}

std::vector<BitVec> parse_matrix(std::istream& in) {
  std::vector<BitVec> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string_view body(line.data() + first, last - first + 1);
    try {
      rows.push_back(BitVec::parse(body));
    } catch (const FormatError& e) {
      throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (rows.back().length() != rows.front().length()) {
      throw FormatError("line " + std::to_string(line_no) + ": row length " +
                        std::to_string(rows.back().length()) + " differs from " +
                        std::to_string(rows.front().length()));
    }
  }
  if (rows.empty()) throw FormatError("matrix file contains no rows");
  return rows;
}

BinaryCode read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  auto rows = parse_matrix(in);
  return BinaryCode(std::move(rows));
}

}  // namespace mincw
