#include "schurq/specialize.hpp"

#include <random>

#include "doctest.h"
#include "schurq/narayana.hpp"

using namespace schurq;

TEST_CASE("ps basics") {
  CHECK(ps(Partition{}, 0) == LaurentPoly(1));
  CHECK(ps(Partition{}, 7) == LaurentPoly(1));
  CHECK(ps(Partition{1}, 3) == q_int(3));
  CHECK(ps(Partition{2, 2}, 3) ==
        ssyt_weight_sum(SkewShape(Partition{2, 2}, Partition{}), 3));
  CHECK(ps(Partition{1, 1, 1, 1, 1}, 4).is_zero());
}

TEST_CASE("ps1 basics") {
  CHECK(ps1(Partition{2}, 2) == 3);      // SSYT 11, 12, 22
  CHECK(ps1(Partition{2, 2}, 2) == 1);   // the single 2x2 filling
  // ps1((2^k), n-1) = N(n,k); recomputed through the Dyck-path oracle.
  CHECK(dyck_peak_oracle(4, 1) == 6);
  CHECK(ps1(Partition{2, 2}, 3) == 6);
  CHECK(ps1(Partition{1, 1, 1, 1, 1}, 4) == 0);
}

TEST_CASE("hook content vs brute force enumeration") {
  for (long long n = 0; n <= 8; ++n)
    for (const Partition& la : all_partitions(n))
      for (int vars = 0; vars <= 5; ++vars)
        CHECK(ps(la, vars) ==
              ssyt_weight_sum(SkewShape(la, Partition{}), vars));
}

TEST_CASE("ps coefficients nonnegative and agree with ps1 at q=1") {
  for (long long n = 0; n <= 12; ++n)
    for (const Partition& la : all_partitions(n))
      for (int vars = 0; vars <= 8; ++vars) {
        LaurentPoly p = ps(la, vars);
        CHECK(p.is_nonnegative());
        CHECK(p.eval_at_one() == ps1(la, vars));
      }
}

TEST_CASE("linear extensions") {
  CHECK(ps_sum(SchurSum{}, 5).is_zero());
  CHECK(ps_sum(SchurSum::one(), 7) == LaurentPoly(1));
  SchurSum f = parse_schur_sum("s[2] + s[1,1]");
  CHECK(ps_sum(f, 2) == ps(Partition{1}, 2) * ps(Partition{1}, 2));
  CHECK(ps1_sum(f, 2) == 4);
}

TEST_CASE("geometric evaluation") {
  CHECK(eval_geometric(Partition{2}, GeomVarSet{1, 1}) ==
        LaurentPoly::monomial(2));

  // N_q(4,1) via the closed q-binomial formula.
  LaurentPoly nq41 = exact_div(q_binomial(4, 1) * q_binomial(4, 2), q_int(4)) *
                     LaurentPoly::monomial(2);
  CHECK(eval_geometric(Partition{2, 2}, GeomVarSet::x(4)) == nq41);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    long long n = std::uniform_int_distribution<long long>(0, 6)(rng);
    auto shapes = all_partitions(n);
    const Partition& la =
        shapes[std::uniform_int_distribution<size_t>(0, shapes.size() - 1)(rng)];
    int r = std::uniform_int_distribution<int>(1, 5)(rng);
    // Inverse variable set = substitute q -> 1/q.
    CHECK(eval_geometric(la, GeomVarSet::x_inv(r)) ==
          eval_geometric(la, GeomVarSet::x(r)).substitute_q_inverse());
    // Homogeneity: X_n evaluation is a degree shift of ps.
    CHECK(eval_geometric(la, GeomVarSet::x(r)) ==
          LaurentPoly::monomial(la.size()) * ps(la, r - 1));
  }
}

TEST_CASE("ps recurrences") {
  CHECK(ps_recurrence_check(1, 2).passed);
  CHECK(ps_recurrence_check(3, 5).passed);
  for (int k = 1; k <= 6; ++k)
    for (int n = 2; n <= 8; ++n) CHECK(ps_recurrence_check(k, n).passed);
}

TEST_CASE("convolution identity") {
  for (int k = 0; k <= 4; ++k) CHECK(convolution_check(4, 4, k).passed);
  CHECK(convolution_check(5, 3, 2).passed);
  CHECK(convolution_check(8, 4, 3).passed);
  for (int m = 1; m <= 8; ++m)
    for (int n = 1; n <= m; ++n)
      for (int k = 0; k <= 6; ++k) CHECK(convolution_check(m, n, k).passed);
  CHECK_FALSE(convolution_check(2, 3, 1).passed);  // refused: m < n
}
