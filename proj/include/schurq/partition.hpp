#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace schurq {

// An integer partition: weakly decreasing positive parts. The empty
// sequence is the empty partition. Zero parts are never stored, so
// structural equality is partition equality.
class Partition {
 public:
  Partition() = default;
  // Accepts a weakly decreasing sequence, possibly with trailing zeros
  // (which are stripped). Throws std::invalid_argument otherwise.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  long long size() const;
  bool empty() const { return parts_.empty(); }
  // Part i (1-indexed); 0 beyond the length.
  int part(int i) const;

  bool operator==(const Partition&) const = default;

  // Text form `4,3^2,1`; the empty partition renders as `-`.
  std::string to_string() const;
  // Expanded form `4,3,3,1` (used inside s[...] renderings).
  std::string to_string_expanded() const;

 private:
  std::vector<int> parts_;
};

// Strict decreasing-lexicographic order: (4) before (3,1) before (2,2).
// A proper prefix sorts after its extensions ((2,2,1) before (2,2)).
bool dec_lex_less(const Partition& a, const Partition& b);

struct DecLexLess {
  bool operator()(const Partition& a, const Partition& b) const {
    return dec_lex_less(a, b);
  }
};

using PartitionSet = std::set<Partition, DecLexLess>;

// Parses `4,3^2,1` (exponent shorthand optional) or `-` for the empty
// partition. Throws std::invalid_argument on malformed input.
Partition parse_partition(const std::string& text);

// A cell (row, col), 1-indexed from the top-left of a Young diagram.
struct Cell {
  int row = 0;
  int col = 0;
};

// lambda' with lambda'_j = #{i : lambda_i >= j}; involutive.
Partition conjugate(const Partition& lambda);

// True iff mu is contained in lambda (lambda_i >= mu_i for all i).
bool contains(const Partition& mu, const Partition& lambda);

// Multiset union of parts, sorted weakly decreasing.
Partition union_of(const Partition& lambda, const Partition& mu);

// Union of k copies of lambda; k = 0 gives the empty partition.
Partition union_power(const Partition& lambda, int k);

// Hook length lambda_i + lambda'_j - i - j + 1 of a cell inside lambda.
// Throws std::invalid_argument if the cell lies outside the diagram.
int hook_length(const Partition& lambda, Cell c);

// Content j - i.
inline int content(Cell c) { return c.col - c.row; }

// A skew shape outer/inner with inner contained in outer.
class SkewShape {
 public:
  SkewShape() = default;
  // Throws std::invalid_argument unless inner is contained in outer.
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  long long cell_count() const { return outer_.size() - inner_.size(); }

  bool operator==(const SkewShape&) const = default;
  std::string to_string() const;  // "outer/inner", e.g. "3,1/1"

 private:
  Partition outer_;
  Partition inner_;
};

// No two cells of outer/inner in the same column (resp. row).
bool is_horizontal_strip(const SkewShape& s);
bool is_vertical_strip(const SkewShape& s);

// Componentwise max / min of outers and inners. Always yields a valid
// skew shape when the inputs are valid.
SkewShape join(const SkewShape& s1, const SkewShape& s2);
SkewShape meet(const SkewShape& s1, const SkewShape& s2);

// All partitions of n with parts drawn from S, in decreasing-lex order.
std::vector<Partition> partitions_with_parts_in(const std::set<int>& allowed,
                                                long long n);

// Q_mu(n): all partitions of n of the form
// mu u (4)^a u (3,1)^b u (2,2)^c, deduplicated, decreasing-lex order.
std::vector<Partition> q_family(const Partition& mu, long long n);

// All partitions of n, decreasing-lex order.
std::vector<Partition> all_partitions(long long n);

// All partitions of n with parts <= max_part and length <= max_len,
// decreasing-lex order.
std::vector<Partition> partitions_bounded(long long n, int max_part,
                                          int max_len);

// All sub-partitions nu with nu contained in mu, decreasing-lex order.
std::vector<Partition> subpartitions(const Partition& mu);

}  // namespace schurq
