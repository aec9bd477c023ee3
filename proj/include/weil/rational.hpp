#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace weil {

// Exact arbitrary-precision integers and rationals. All combinatorial
// quantities in this library are exact; floating point appears only in the
// dense-matrix verification layer.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int pow_int(const Int& base, unsigned long exp) {
  Int r = 1;
  for (unsigned long i = 0; i < exp; ++i) r *= base;
  return r;
}

// Integer part of the k-th root, by bisection.
inline Int iroot(const Int& n, unsigned k) {
  if (n < 0) throw std::invalid_argument("iroot: negative argument");
  if (n <= 1 || k == 1) return n;
  Int lo = 1, hi = n;
  while (lo < hi) {
    Int mid = (lo + hi + 1) / 2;
    if (pow_int(mid, k) <= n)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

bool is_prime_u64(std::uint64_t n);

// Writes q = p^k with p prime, k >= 1. Returns false if q is not a prime
// power.
bool prime_power_decompose(std::uint64_t q, std::uint64_t& p, unsigned& k);

inline std::string rat_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace weil
