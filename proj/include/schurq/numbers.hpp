#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace schurq {

// Unbounded exact integers and rationals. Every quantity in this library is
// exact; there is no floating point anywhere in the core.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when an arithmetic step that is guaranteed exact by a proven
// identity (hook-content divisibility, q-binomial quotients, the two
// q-Narayana formulas agreeing) leaves a remainder or mismatch. Reaching
// this is an implementation bug, not a data error.
class identity_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Int binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace schurq
