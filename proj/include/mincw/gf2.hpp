#pragma once

// Bit-level linear algebra over F_2. Every vector fits in one 64-bit word:
// bit i holds coordinate i+1. Coordinates are 1-indexed wherever they are
// shown to a user.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mincw {

inline constexpr int kMaxLength = 64;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidCodeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BitVec {
 public:
  BitVec() = default;

  // Length 0 is reserved for the empty information part of a code with t = 0.
  explicit BitVec(int length, std::uint64_t bits = 0);

  static BitVec parse(std::string_view text);
  static BitVec unit(int length, int index);  // 0-based index
  static BitVec ones(int length);

  int length() const { return length_; }
  std::uint64_t bits() const { return bits_; }
  bool test(int i) const { return (bits_ >> i) & 1U; }
  bool is_zero() const { return bits_ == 0; }
  int weight() const;

  void set(int i, bool value = true);

  BitVec operator^(const BitVec& o) const;
  BitVec operator&(const BitVec& o) const;
  BitVec& operator^=(const BitVec& o);

  bool operator==(const BitVec&) const = default;
  // Orders by length first, then by the integer encoding of the bits.
  std::strong_ordering operator<=>(const BitVec& o) const;

  std::string to_string() const;

 private:
  int length_ = 0;
  std::uint64_t bits_ = 0;
};

std::ostream& operator<<(std::ostream& os, const BitVec& v);

inline std::uint64_t length_mask(int length) {
  return length >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << length) - 1);
}

// 1-indexed coordinates of the nonzero entries.
std::vector<int> support(const BitVec& v);

// supp(a) is a proper subset of supp(b).
bool support_strictly_contained(const BitVec& a, const BitVec& b);

int rank(std::span<const BitVec> rows);

// All F_2 linear combinations of `vectors` (zero included), sorted and
// deduplicated. `length` fixes the word length when `vectors` is empty.
std::vector<BitVec> span_enumerate(std::span<const BitVec> vectors, int length);

inline constexpr int kMaxSpanGenerators = 20;

// Generator matrix of a binary linear code: k full-rank rows of length n.
class BinaryCode {
 public:
  BinaryCode() = default;
  explicit BinaryCode(std::vector<BitVec> rows);

  // Builds the k x n matrix whose j-th column is columns[j].
  static BinaryCode from_columns(int k, std::span<const BitVec> columns);

  int n() const { return n_; }
  int k() const { return static_cast<int>(rows_.size()); }
  const std::vector<BitVec>& rows() const { return rows_; }

  // Column j (0-based) as a vector of length k.
  BitVec column(int j) const;
  std::vector<BitVec> columns() const;

  // Membership test by rank.
  bool contains(const BitVec& word) const;

  // Every codeword u*G for u in [0, 2^k), indexed by u. Requires k <= 20.
  std::vector<BitVec> codewords() const;

 private:
  int n_ = 0;
  std::vector<BitVec> rows_;
};

// [I_k | A] together with the column permutation back to the source code.
struct SystematicCode {
  int k = 0;
  int t = 0;
  std::vector<BitVec> info_rows;  // k rows of length t (the matrix A)
  std::vector<int> col_perm;      // systematic column j -> original column col_perm[j], 1-indexed

  int n() const { return k + t; }

  // The code [I_k | A] with identity column permutation.
  static SystematicCode from_info_rows(int t, std::vector<BitVec> info_rows);

  // Generator matrix in the original coordinates.
  BinaryCode generator() const;

  // Maps a word in systematic coordinates to the original coordinates.
  BitVec to_original(const BitVec& systematic_word) const;
};

// Gauss-Jordan elimination row by row; the pivot of each row is its leftmost
// remaining nonzero column. Throws InvalidCodeError on rank deficiency.
SystematicCode to_systematic(const BinaryCode& code);

// Reads one generator row per line ('0'/'1', no separators). Blank lines and
// lines starting with '#' are skipped. Errors carry the 1-based line number.
std::vector<BitVec> parse_matrix(std::istream& in);
BinaryCode read_matrix_file(const std::string& path);

}  // namespace mincw
