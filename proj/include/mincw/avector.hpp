#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mincw {

using Count = std::int64_t;

// Multiplicities of the information vectors tau in F_2^t among the rows of a
// systematic generator matrix. Zero entries are implicit; the sum is k.
class AVector {
 public:
  AVector() = default;
  explicit AVector(int t);

  // Dense construction, counts indexed by the integer encoding of tau. Requires t <= 20.
  static AVector from_dense(int t, const std::vector<Count>& counts);

  int t() const { return t_; }
  Count k() const { return k_; }

  Count operator[](std::uint64_t tau) const;
  void set(std::uint64_t tau, Count value);
  void add(std::uint64_t tau, Count delta);

  const std::map<std::uint64_t, Count>& nonzero() const { return nonzero_; }

  // 2^t entries. Requires t <= 20.
  std::vector<Count> dense() const;

  // "00:0 10:1 01:1 11:1" for t <= 5, otherwise only nonzero entries.
  std::string to_string() const;

  bool operator==(const AVector&) const = default;

 private:
  int t_ = 0;
  Count k_ = 0;
  std::map<std::uint64_t, Count> nonzero_;
};

// tau as a bit string of length t (bit i is character i); "ε" when t = 0.
std::string tau_string(int t, std::uint64_t tau);

}  // namespace mincw
