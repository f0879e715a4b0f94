#pragma once

#include "schurq/numbers.hpp"
#include "schurq/partition.hpp"
#include "schurq/qpoly.hpp"
#include "schurq/report.hpp"
#include "schurq/schur.hpp"

namespace schurq {

// The geometric variable set {q^start, q^{start+1}, ..., q^{start+count-1}}.
// X_r is {q, ..., q^{r-1}} (start 1, count r-1); X_r^{-1} its inverse set.
struct GeomVarSet {
  long long start = 0;
  int count = 0;

  static GeomVarSet x(int r) { return {1, r > 0 ? r - 1 : 0}; }
  static GeomVarSet x_inv(int r) {
    return {r > 0 ? -(r - 1) : 0, r > 0 ? r - 1 : 0};
  }
  // Z = {q^{n-1}, ..., q^{m-1}} and its inverse set.
  static GeomVarSet z(int m, int n) { return {n - 1, m - n + 1}; }
  static GeomVarSet z_inv(int m, int n) { return {-(m - 1), m - n + 1}; }
};

// Principal specialization ps_n(s_lambda) = s_lambda(1, q, ..., q^{n-1})
// by the hook-content formula, computed as one exact division of full
// products. Returns 0 when the shape has more rows than variables.
LaurentPoly ps(const Partition& lambda, int n);

// ps_n^1(s_lambda) = s_lambda(1^n), exact integer hook-content product.
Int ps1(const Partition& lambda, int n);

// Linear extensions to Schur sums.
LaurentPoly ps_sum(const SchurSum& f, int n);
Int ps1_sum(const SchurSum& f, int n);

// s_lambda over a geometric variable set, via homogeneity:
// s_lambda(q^a, ..., q^{a+r-1}) = q^{a|lambda|} ps_r(s_lambda).
LaurentPoly eval_geometric(const Partition& lambda, GeomVarSet vars);
LaurentPoly eval_geometric(const SchurSum& f, GeomVarSet vars);

// Verifies the four two-column specialization recurrences (the ps_n pair
// and their q = 1 companions) by computing both sides independently.
CheckReport ps_recurrence_check(int k, int n);

// Verifies the convolution identity
// ps_m^1(s_{(2^k)}) = sum_{0<=a<=b<=m-n} ps_n^1(s_{(2^{k-b},1^{b-a})})
//                     * ps_{m-n}^1(s_{(2^a,1^{b-a})}).
CheckReport convolution_check(int m, int n, int k);

}  // namespace schurq
