#include "schurq/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace schurq {

LaurentPoly::LaurentPoly(const Int& constant) {
  if (constant != 0) coeffs_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(long long exponent, Int coeff) {
  LaurentPoly p;
  if (coeff != 0) p.coeffs_[exponent] = std::move(coeff);
  return p;
}

Int LaurentPoly::coefficient(long long exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Int(0) : it->second;
}

long long LaurentPoly::min_exponent() const {
  if (coeffs_.empty()) throw std::logic_error("zero polynomial has no degree");
  return coeffs_.begin()->first;
}

long long LaurentPoly::max_exponent() const {
  if (coeffs_.empty()) throw std::logic_error("zero polynomial has no degree");
  return coeffs_.rbegin()->first;
}

void LaurentPoly::set(long long exponent, Int value) {
  if (value == 0)
    coeffs_.erase(exponent);
  else
    coeffs_[exponent] = std::move(value);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& r) {
  for (const auto& [e, c] : r.coeffs_) set(e, coefficient(e) + c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& r) {
  for (const auto& [e, c] : r.coeffs_) set(e, coefficient(e) - c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) {
      long long e = ea + eb;
      auto [it, inserted] = out.coeffs_.try_emplace(e, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) out.coeffs_.erase(it);
      }
    }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& r) {
  *this = *this * r;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_[e] = -c;
  return out;
}

bool LaurentPoly::is_nonnegative() const {
  for (const auto& [e, c] : coeffs_)
    if (c < 0) return false;
  return true;
}

LaurentPoly LaurentPoly::substitute_q_inverse() const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_[-e] = c;
  return out;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_)
    if (e != 0) out.coeffs_[e - 1] = c * e;
  return out;
}

Int LaurentPoly::eval_at_one() const {
  Int sum = 0;
  for (const auto& [e, c] : coeffs_) sum += c;
  return sum;
}

Rational LaurentPoly::eval_rational(const Rational& x) const {
  Rational sum = 0;
  for (const auto& [e, c] : coeffs_) {
    if (e < 0 && x == 0)
      throw std::invalid_argument("negative exponent at x = 0");
    Rational pw = 1;
    long long n = e < 0 ? -e : e;
    for (long long i = 0; i < n; ++i) pw *= x;
    if (e < 0) pw = 1 / pw;
    sum += Rational(c) * pw;
  }
  return sum;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (!first) out << " + ";
    first = false;
    if (e == 0) {
      out << c;
    } else {
      out << c << "*q^" << e;
    }
  }
  return out.str();
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (num.is_zero()) return LaurentPoly{};
  const long long den_lo = den.min_exponent();
  const Int& den_lead = den.terms().begin()->second;
  const long long degree_bound = num.max_exponent() - den.max_exponent();

  LaurentPoly rem = num;
  LaurentPoly quot;
  while (!rem.is_zero()) {
    long long e = rem.min_exponent();
    Int c = rem.terms().begin()->second;
    if (c % den_lead != 0 || e - den_lo > degree_bound)
      throw identity_error("exact_div: nonzero remainder");
    LaurentPoly t = LaurentPoly::monomial(e - den_lo, c / den_lead);
    quot += t;
    rem -= t * den;
  }
  return quot;
}

LaurentPoly q_int(long long k) {
  LaurentPoly p;
  for (long long e = 0; e < k; ++e) p += LaurentPoly::monomial(e);
  return p;
}

LaurentPoly q_factorial(long long k) {
  LaurentPoly p(1);
  for (long long i = 2; i <= k; ++i) p *= q_int(i);
  return p;
}

LaurentPoly q_binomial(long long n, long long j) {
  if (j < 0 || j > n) return LaurentPoly{};
  // [n]...[n-j+1] / [j]!, one exact division at the end.
  LaurentPoly num(1);
  for (long long i = 0; i < j; ++i) num *= q_int(n - i);
  return exact_div(num, q_factorial(j));
}

}  // namespace schurq
