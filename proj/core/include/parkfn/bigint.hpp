#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>

#include "parkfn/errors.hpp"

namespace parkfn {

// Coefficients and counts grow like (n+1)^(m-1); exact arbitrary precision
// everywhere, never floating point.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt int_pow(const BigInt& base, int exp) {
  if (exp < 0) throw ParameterOutOfRange("int_pow: negative exponent");
  BigInt r = 1, b = base;
  int e = exp;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - i + 1;
    r /= i;
  }
  return r;
}

// Multinomial coefficient n! / (k1! k2! ...); zero unless all parts are
// non-negative and sum to n.
inline BigInt multinomial(int n, std::initializer_list<int> parts) {
  if (n < 0) return 0;
  int sum = 0;
  for (int p : parts) {
    if (p < 0) return 0;
    sum += p;
  }
  if (sum != n) return 0;
  BigInt r = 1;
  int upper = 0;
  for (int p : parts) {
    for (int i = 1; i <= p; ++i) {
      r *= upper + i;
      r /= i;
    }
    upper += p;
  }
  return r;
}

}  // namespace parkfn
