#pragma once

#include <map>
#include <string>

#include "schurq/numbers.hpp"

namespace schurq {

// Exact Laurent polynomial in one variable q: a sparse table from integer
// exponent (possibly negative) to nonzero unbounded-integer coefficient.
// The zero polynomial is the empty table.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Int& constant);  // NOLINT: implicit by design
  LaurentPoly(long long constant) : LaurentPoly(Int(constant)) {}

  static LaurentPoly monomial(long long exponent, Int coeff = 1);

  bool is_zero() const { return coeffs_.empty(); }
  Int coefficient(long long exponent) const;
  // Lowest / highest stored exponent; requires a nonzero polynomial.
  long long min_exponent() const;
  long long max_exponent() const;
  const std::map<long long, Int>& terms() const { return coeffs_; }

  LaurentPoly& operator+=(const LaurentPoly& r);
  LaurentPoly& operator-=(const LaurentPoly& r);
  LaurentPoly& operator*=(const LaurentPoly& r);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly&) const = default;

  // All stored coefficients nonnegative (true for 0).
  bool is_nonnegative() const;
  // p(q^{-1}): negates every exponent; involutive.
  LaurentPoly substitute_q_inverse() const;
  // Termwise derivative c*q^e -> c*e*q^{e-1}.
  LaurentPoly derivative() const;
  Int eval_at_one() const;
  Rational eval_rational(const Rational& x) const;

  // Rendering with exponents ascending, terms joined by " + ":
  // `1*q^-2 + 3 + -2*q^3`; the zero polynomial renders as `0`.
  std::string to_string() const;

 private:
  void set(long long exponent, Int value);
  std::map<long long, Int> coeffs_;
};

// Exact quotient; throws identity_error when the division leaves a
// remainder (every in-scope division is provably exact, so a remainder
// signals a broken identity) and std::invalid_argument on a zero divisor.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

// [k] = 1 + q + ... + q^{k-1}; [0] = 0.
LaurentPoly q_int(long long k);
// [k]! = [1][2]...[k]; [0]! = 1.
LaurentPoly q_factorial(long long k);
// [n choose j] = [n]! / ([j]! [n-j]!), computed by exact division;
// zero when j > n.
LaurentPoly q_binomial(long long n, long long j);

}  // namespace schurq
