#pragma once

#include <vector>

#include "schurq/numbers.hpp"
#include "schurq/qpoly.hpp"

namespace schurq {

// Sequences indexed contiguously from 0.
using PolySequence = std::vector<LaurentPoly>;
using RealSequence = std::vector<Rational>;

// C_n = binom(2n, n) / (n + 1).
Int catalan(int n);

// N(n, k) = binom(n,k) binom(n,k+1) / n; zero for k >= n. Requires n >= 1.
Int narayana_num(int n, int k);

// Brute-force count of Dyck paths from (0,0) to (2n,0) with exactly k+1
// peaks. The ground truth for narayana_num; refuses n > 14 (the walk is
// exponential in n).
Int dyck_peak_oracle(int n, int k);

// N_n(q) = sum_k N(n,k) q^k, with N_0(q) = 1.
LaurentPoly narayana_poly(int n);

// First count+1 Narayana polynomials N_0..N_count.
PolySequence narayana_poly_sequence(int count);

// q-Narayana number N_q(n,k) = (1/[n]) [n choose k][n choose k+1] q^{k^2+k},
// computed by exact division and cross-checked internally against the Schur
// specialization s_{(2^k)}(q, ..., q^{n-1}); a mismatch between the two
// formulas throws identity_error. Requires n >= 1.
LaurentPoly q_narayana(int n, int k);

// b_n = sum_{k<=n} N(n,k) a_k for 0 <= n < count (missing a_k read as 0).
RealSequence narayana_transform(const RealSequence& a, int count);

}  // namespace schurq
