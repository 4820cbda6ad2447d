#include "mincw/avector.hpp"

#include <stdexcept>

#include "mincw/gf2.hpp"

namespace mincw {

AVector::AVector(int t) : t_(t) {
  if (t < 0 || t > kMaxLength) throw std::invalid_argument("AVector: t out of range");
}

AVector AVector::from_dense(int t, const std::vector<Count>& counts) {
  if (t > 20) throw std::invalid_argument("AVector::from_dense: t too large");
  if (counts.size() != (std::size_t{1} << t)) {
    throw std::invalid_argument("AVector::from_dense: expected 2^t counts");
  }
  AVector a(t);
  for (std::size_t tau = 0; tau < counts.size(); ++tau) a.set(tau, counts[tau]);
  return a;
}

Count AVector::operator[](std::uint64_t tau) const {
  auto it = nonzero_.find(tau);
  return it == nonzero_.end() ? 0 : it->second;
}

void AVector::set(std::uint64_t tau, Count value) {
  if (value < 0) throw std::invalid_argument("AVector: negative count");
  if (t_ < 64 && (tau >> t_) != 0) throw std::out_of_range("AVector: tau outside F_2^t");
  k_ += value - (*this)[tau];
  if (value == 0) {
    nonzero_.erase(tau);
  } else {
    nonzero_[tau] = value;
  }
}

void AVector::add(std::uint64_t tau, Count delta) { set(tau, (*this)[tau] + delta); }

std::vector<Count> AVector::dense() const {
  if (t_ > 20) throw std::invalid_argument("AVector::dense: t too large");
  std::vector<Count> out(std::size_t{1} << t_, 0);
  for (const auto& [tau, c] : nonzero_) out[tau] = c;
  return out;
}

std::string tau_string(int t, std::uint64_t tau) {
  if (t == 0) return "ε";
  return BitVec(t, tau).to_string();
}

std::string AVector::to_string() const {
  std::string out;
  auto append = [&](std::uint64_t tau, Count c) {
    if (!out.empty()) out += ' ';
    out += tau_string(t_, tau) + ":" + std::to_string(c);
  };
  if (t_ <= 5) {
    for (std::uint64_t tau = 0; tau < (std::uint64_t{1} << t_); ++tau) append(tau, (*this)[tau]);
  } else {
    for (const auto& [tau, c] : nonzero_) append(tau, c);
  }
  return out;
}

}  // namespace mincw
