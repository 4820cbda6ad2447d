#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace mincw {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(int n, int r);
BigInt floor_of(const Rational& r);

// "p/q" or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);

// Decimal approximation for display only.
std::string to_decimal(const Rational& r, int digits = 4);

}  // namespace mincw
