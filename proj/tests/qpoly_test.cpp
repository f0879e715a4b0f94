#include "schurq/qpoly.hpp"

#include <random>

#include "doctest.h"
#include "schurq/numbers.hpp"

using namespace schurq;

namespace {

LaurentPoly random_poly(std::mt19937& rng, bool allow_huge) {
  LaurentPoly p;
  int terms = std::uniform_int_distribution<int>(0, 5)(rng);
  for (int t = 0; t < terms; ++t) {
    long long e = std::uniform_int_distribution<int>(-6, 6)(rng);
    Int c = std::uniform_int_distribution<int>(-9, 9)(rng);
    if (allow_huge && std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
      Int big = Int("1000000000000000000000000000000");  // 10^30
      c *= big;
    }
    p += LaurentPoly::monomial(e, c);
  }
  return p;
}

}  // namespace

TEST_CASE("ring arithmetic basics") {
  LaurentPoly one_plus_q = LaurentPoly(1) + LaurentPoly::monomial(1);
  LaurentPoly sq = one_plus_q * one_plus_q;
  CHECK(sq.coefficient(0) == 1);
  CHECK(sq.coefficient(1) == 2);
  CHECK(sq.coefficient(2) == 1);

  std::mt19937 rng(1);
  LaurentPoly p = random_poly(rng, false);
  CHECK(p + LaurentPoly{} == p);

  LaurentPoly shifted = (LaurentPoly::monomial(-1) + LaurentPoly(1)) *
                        LaurentPoly::monomial(1);
  CHECK(shifted == LaurentPoly(1) + LaurentPoly::monomial(1));
}

TEST_CASE("ring axioms on random triples with huge coefficients") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 150; ++trial) {
    LaurentPoly a = random_poly(rng, true);
    LaurentPoly b = random_poly(rng, true);
    LaurentPoly c = random_poly(rng, true);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == LaurentPoly{});
  }
}

TEST_CASE("exact division") {
  CHECK(exact_div(LaurentPoly(1) - LaurentPoly::monomial(2),
                  LaurentPoly(1) - LaurentPoly::monomial(1)) == q_int(2));
  LaurentPoly p = q_int(5) * q_int(3);
  CHECK(exact_div(p, p) == LaurentPoly(1));
  CHECK_THROWS_AS(exact_div(q_int(3), q_int(2)), identity_error);
  CHECK_THROWS_AS(exact_div(q_int(3), LaurentPoly{}), std::invalid_argument);

  // q-factorial identity: [6 choose 3] [3]! [3]! = [6]!
  CHECK(q_binomial(6, 3) * q_factorial(3) * q_factorial(3) == q_factorial(6));

  std::mt19937 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    LaurentPoly p1 = random_poly(rng, false);
    LaurentPoly r = random_poly(rng, false);
    if (r.is_zero()) continue;
    CHECK(exact_div(p1 * r, r) == p1);
  }
}

TEST_CASE("q-integers, factorials, binomials") {
  CHECK(q_int(1) == LaurentPoly(1));
  CHECK(q_int(0) == LaurentPoly{});
  CHECK(q_binomial(4, 2).to_string() == "1 + 1*q^1 + 2*q^2 + 1*q^3 + 1*q^4");
  for (int n = 0; n <= 8; ++n) CHECK(q_binomial(n, 0) == LaurentPoly(1));
  CHECK(q_binomial(3, 5).is_zero());

  for (int n = 0; n <= 20; ++n)
    for (int j = 0; j <= n; ++j) {
      CHECK(q_binomial(n, j) == q_binomial(n, n - j));
      CHECK(q_binomial(n, j).eval_at_one() == binomial(n, j));
    }
}

TEST_CASE("substitute q inverse") {
  LaurentPoly p = LaurentPoly(1) + LaurentPoly::monomial(1);
  CHECK(p.substitute_q_inverse() ==
        LaurentPoly(1) + LaurentPoly::monomial(-1));
  CHECK(LaurentPoly(7).substitute_q_inverse() == LaurentPoly(7));
  LaurentPoly r = LaurentPoly::monomial(2) - LaurentPoly::monomial(1);
  CHECK(r.substitute_q_inverse() ==
        LaurentPoly::monomial(-2) - LaurentPoly::monomial(-1));

  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly p1 = random_poly(rng, true);
    CHECK(p1.substitute_q_inverse().substitute_q_inverse() == p1);
  }
}

TEST_CASE("coefficient access and nonnegativity") {
  LaurentPoly p = LaurentPoly(1) + LaurentPoly::monomial(1, 2);
  CHECK(p.is_nonnegative());
  CHECK((LaurentPoly::monomial(1) - LaurentPoly::monomial(2))
            .is_nonnegative() == false);
  LaurentPoly n3 = LaurentPoly(1) + LaurentPoly::monomial(1, 3) +
                   LaurentPoly::monomial(2);
  CHECK(n3.coefficient(1) == 3);
  CHECK(n3.coefficient(17) == 0);
}

TEST_CASE("rendering") {
  CHECK(LaurentPoly{}.to_string() == "0");
  LaurentPoly p = LaurentPoly::monomial(-2) + LaurentPoly(3) +
                  LaurentPoly::monomial(3, -2);
  CHECK(p.to_string() == "1*q^-2 + 3 + -2*q^3");
}

TEST_CASE("derivative") {
  // d/dq (q^3 - 2q + 5 + q^-1) = 3q^2 - 2 - q^-2
  LaurentPoly p = LaurentPoly::monomial(3) + LaurentPoly::monomial(1, -2) +
                  LaurentPoly(5) + LaurentPoly::monomial(-1);
  LaurentPoly d = LaurentPoly::monomial(2, 3) + LaurentPoly(-2) +
                  LaurentPoly::monomial(-2, -1);
  CHECK(p.derivative() == d);
}
