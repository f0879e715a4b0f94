#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "schurq/numbers.hpp"
#include "schurq/partition.hpp"
#include "schurq/qpoly.hpp"

namespace schurq {

// A finite formal integer-linear combination of Schur functions, keyed by
// index partition in decreasing-lex order. No zero coefficients stored;
// the zero element is the empty sum.
class SchurSum {
 public:
  SchurSum() = default;

  static SchurSum basis(Partition lambda, Int coeff = 1);
  static SchurSum one() { return basis(Partition{}); }

  bool is_zero() const { return terms_.empty(); }
  Int coefficient(const Partition& lambda) const;
  const std::map<Partition, Int, DecLexLess>& terms() const { return terms_; }
  void add_term(const Partition& lambda, const Int& coeff);

  SchurSum& operator+=(const SchurSum& r);
  SchurSum& operator-=(const SchurSum& r);
  friend SchurSum operator+(SchurSum a, const SchurSum& b) { return a += b; }
  friend SchurSum operator-(SchurSum a, const SchurSum& b) { return a -= b; }
  SchurSum operator-() const;
  friend SchurSum operator*(const Int& c, const SchurSum& f);
  bool operator==(const SchurSum&) const = default;

  bool is_s_positive() const;  // all coefficients >= 0
  bool is_s_negative() const;  // all coefficients <= 0

  enum class PartitionStyle { expanded, compact };
  // `s[3,1] + s[2,2] - 2*s[2,1,1]` (expanded) or `s[2^6]` (compact);
  // zero renders as `0`. Terms in decreasing-lex order.
  std::string to_string(PartitionStyle style = PartitionStyle::expanded) const;

 private:
  std::map<Partition, Int, DecLexLess> terms_;
};

// Parses the to_string form (either partition style, optional integer
// multipliers, leading sign); `0` is the zero sum.
SchurSum parse_schur_sum(const std::string& text);

// s_{(2^a,1^b)} as a SchurSum, honoring the convention that it is 0 for
// a < 0 or b < 0. All of the paper's D-families go through this.
SchurSum two_column(long long a, long long b = 0);

// A semistandard filling of a skew shape: rows() holds the entries of the
// skew cells of each row, top to bottom, left to right.
class Tableau {
 public:
  Tableau() = default;
  Tableau(SkewShape shape, std::vector<std::vector<int>> rows);

  const SkewShape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  // Weakly increasing rows, strictly increasing columns.
  bool is_semistandard() const;
  // Number of entries equal to i, as a composition starting at 1.
  std::vector<int> type() const;

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

// Every prefix contains at least as many i's as (i+1)'s.
bool is_lattice_word(std::span<const int> word);

// Rows read right to left, concatenated top to bottom.
std::vector<int> reverse_reading_word(const Tableau& t);

// c^lambda_{mu,nu}: the number of semistandard fillings of lambda/mu of
// type nu whose reverse reading word is a lattice permutation. Zero when
// mu is not contained in lambda or |lambda| != |mu| + |nu|. Memoized;
// safe for concurrent callers.
Int lr_coefficient(const Partition& lambda, const Partition& mu,
                   const Partition& nu);

// All Littlewood-Richardson tableaux of shape lambda/mu and type nu, in
// the order the backtracking search discovers them (reading-order cells,
// smaller entries first).
std::vector<Tableau> lr_tableaux(const Partition& lambda, const Partition& mu,
                                 const Partition& nu);

// s_mu * s_nu expanded in the Schur basis; extended bilinearly.
SchurSum lr_product(const SchurSum& f, const SchurSum& g);

// Pieri expansions: sum of s_lambda over lambda containing mu with
// lambda/mu a horizontal (resp. vertical) strip of size n.
SchurSum pieri_row(const Partition& mu, int n);
SchurSum pieri_col(const Partition& mu, int n);

// Schur expansion of the skew function s_{outer/inner}.
SchurSum skew_to_schur(const SkewShape& s);

// Delta^mu: sends sum a_lambda s_lambda to sum a_lambda s_{lambda u mu}.
SchurSum delta(const Partition& mu, const SchurSum& f);

// Coefficientwise max of delta(lambda, f1) and delta(mu, f2), absent
// terms read as 0.
SchurSum tilde_delta(const Partition& lambda, const Partition& mu,
                     const SchurSum& f1, const SchurSum& f2);

// Brute-force SSYT generating function: sum over semistandard fillings of
// the skew shape with entries <= n of q^{sum (entry - 1)}. Equals
// ps_n(s_{outer/inner}) by definition; the independent oracle for both the
// LR enumeration and the hook-content formula.
LaurentPoly ssyt_weight_sum(const SkewShape& s, int n);

}  // namespace schurq
