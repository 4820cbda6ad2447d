#include "mincw/rational.hpp"

#include <stdexcept>

namespace mincw {

BigInt binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigInt acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc *= n - r + i;
    acc /= i;
  }
  return acc;
}

BigInt floor_of(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& r) {
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

std::string to_decimal(const Rational& r, int digits) {
  if (digits < 0) throw std::invalid_argument("to_decimal: negative digit count");
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool negative = r < 0;
  const Rational mag = negative ? Rational(-r) : r;
  // Round half up at the last shown digit.
  const BigInt scaled = floor_of(mag * scale + Rational(1, 2));
  const BigInt whole = scaled / scale;
  std::string frac = BigInt(scaled % scale).str();
  if (digits > 0) frac = std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
  std::string out = (negative ? "-" : "") + whole.str();
  if (digits > 0) out += "." + frac;
  return out;
}

}  // namespace mincw
