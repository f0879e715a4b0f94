#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schurq/narayana.hpp"
#include "schurq/numbers.hpp"
#include "schurq/partition.hpp"
#include "schurq/qpoly.hpp"
#include "schurq/report.hpp"
#include "schurq/schur.hpp"

namespace schurq {

// Index of the family D_{m,i} = D^{(1)} + D^{(2)} - D^{(3)} built from
// products of two-column Schur functions.
struct DFamilyIndex {
  int m = 0;
  int i = 0;
};

// Index of the family D(a,b,k,r) = D_1 + D_2 - D_3.
struct DabkrIndex {
  int a = 0;
  int b = 0;
  int k = 0;
  int r = 0;
};

// D^{(j)}_{m,i} for j in {1,2,3}; the s_{(2^i,1^j)} = 0 convention for
// negative indices applies throughout.
SchurSum d_component(const DFamilyIndex& idx, int j);
SchurSum d_family(const DFamilyIndex& idx);

SchurSum dabkr_component(const DabkrIndex& idx, int j);
SchurSum dabkr(const DabkrIndex& idx);

// The six expansion formulas of the odd lemma (m = 2k+1) and the six of
// the even lemma (m = 2k), checked against the LR product. The observed
// multiplicity-2 sets are carried in the witness.
CheckReport check_lemm_odd_even(int k);

// The closed forms of D_{m,k} for m = 2k+1 and m = 2k, the Delta^{(2)}
// recurrences of part (ii) of both theorems, and the four Delta^{(2)}
// product identities (checked at n = k, k+1, k+2).
CheckReport check_theo_odd_even(int k);

// Sign pattern of D_{m,i}: s-positive up to the middle index, s-negative
// after, zero at i = m.
CheckReport check_coro_signs(int m);

// sum_i (s_{(2^{i-1})}s_{(2^{m-i})} + s_{(2^{i-2},1^2)}s_{(2^{m-i})}
//        - s_{(2^{i-1},1)}s_{(2^{m-i-1},1)})  ==  sum over Par_{{2,4}}(2m-2).
CheckReport check_theo_s(int m);

// D(a,b,k,r) = D(a-1,b-1,k-1,r-1) for a,b,k,r >= 1.
CheckReport check_dabkr_shift(const DabkrIndex& idx);

// D_j(a,b,k,r) = tilde-Delta^{(1),(3)}(D_j(a,b-1,k-1,r-1),
//                                      D_j(a,b-1,k-1,r-2)) for j = 1,2,3.
CheckReport check_lemm_two(int a, int b, int k, int r);

// sum_{k=0}^r D(a,b,k,r) is s-positive.
CheckReport check_mainconj(int a, int b, int r);

// q-log-convexity / -concavity checkers over a polynomial sequence.
CheckReport is_q_log_convex(const PolySequence& s);
CheckReport is_strongly_q_log_convex(const PolySequence& s);
CheckReport is_q_log_concave(const PolySequence& s);
CheckReport is_strongly_q_log_concave(const PolySequence& s);

// Butler-Flanigan variant: f_{m-1} f_{n+1} - q^{n-m+1} f_m f_n nonnegative
// for n >= m >= 1. Narayana input is expected to fail with a witness.
CheckReport check_butler_flanigan(const PolySequence& s);

// The quartic f = f1 + f2 - 2 f3 of the transformation proof, evaluated
// exactly; valid for n >= 1 and 0 <= r <= 2n.
Rational quartic_f(int n, int r, const Rational& x);
// The quartic as an exact polynomial in x.
LaurentPoly quartic_f_poly(int n, int r);

// (a) f'(x) = 2(2x - r) g(x) as exact polynomials, and (b) the chain
// f(0) >= f(1) >= ... >= f(floor(r/2)); needs 0 <= r < 2n.
CheckReport check_lem1(int n, int r);

// alpha(n,r,k) = N(n+1,k)N(n-1,r-k) + N(n+1,r-k)N(n-1,k) - 2N(n,r-k)N(n,k),
// with N(0,j) = [j = 0].
Int alpha(int n, int r, int k);
// alpha'(n,r,k): alpha halved exactly at k = r/2 when r is even.
Rational alpha_prime(int n, int r, int k);

// A sign threshold k' exists: alpha >= 0 for k <= k', <= 0 after.
CheckReport check_alpha_threshold(int n, int r);

// For every r <= 2n: sum_k alpha'(n,r,k) equals the coefficient of q^r in
// N_{n-1}(q) N_{n+1}(q) - N_n(q)^2 and is nonnegative.
CheckReport check_alpha_sum(int n);

// Narayana transform preserves log-convexity; refuses inputs that are not
// positive or not log-convex (the report names the failing index).
CheckReport check_transform_preserves(const RealSequence& a, int count);

// The two q-series identities of the section-6 lemma, as exact Laurent
// polynomial identities built from geometric evaluations.
CheckReport check_sect6_identities(int m, int n, int k);

// Strong q-log-concavity of N_q(n,k): fixed n over 1 <= l <= k <= max_k,
// and fixed k over 1 <= n <= m <= max_n.
CheckReport check_qn_concave_fixed_n(int n, int max_k);
CheckReport check_qn_concave_fixed_k(int k, int max_n);

// s_{(2^{k-1})} s_{(2^k)/I} - s_{(2^{k-1})/I} s_{(2^k)} and the companion
// with (2^{k-1},1) and J are s-positive for every subshape I, J.
CheckReport check_sect6_coro(int k);

// Finite-instance check of the lattice-permutation-product theorem:
// s_{s1 v s2} s_{s1 ^ s2} - s_{s1} s_{s2} is s-positive.
CheckReport check_lpp_small(const SkewShape& s1, const SkewShape& s2);

// Embedded expansions of the two tables, transcribed from the source data.
struct GoldenDFamilyRow {
  int m;
  int i;
  const char* expansion;
};
struct GoldenDabkrRow {
  int a;
  int b;
  int k;
  int r;
  const char* expansion;
};
const std::vector<GoldenDFamilyRow>& golden_table1();
const std::vector<GoldenDabkrRow>& golden_table2();

// Recompute a table block and diff it against the golden rows
// (reproduce-style: the witness always carries the computed rows).
CheckReport check_table1(int m);
CheckReport check_table2(int a, int b, int r);

}  // namespace schurq
