#include "schurq/schur.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace schurq {

SchurSum SchurSum::basis(Partition lambda, Int coeff) {
  SchurSum f;
  if (coeff != 0) f.terms_.emplace(std::move(lambda), std::move(coeff));
  return f;
}

Int SchurSum::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Int(0) : it->second;
}

void SchurSum::add_term(const Partition& lambda, const Int& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SchurSum& SchurSum::operator+=(const SchurSum& r) {
  for (const auto& [la, c] : r.terms_) add_term(la, c);
  return *this;
}

SchurSum& SchurSum::operator-=(const SchurSum& r) {
  for (const auto& [la, c] : r.terms_) add_term(la, -c);
  return *this;
}

SchurSum SchurSum::operator-() const {
  SchurSum out;
  for (const auto& [la, c] : terms_) out.terms_.emplace(la, -c);
  return out;
}

SchurSum operator*(const Int& c, const SchurSum& f) {
  SchurSum out;
  if (c == 0) return out;
  for (const auto& [la, v] : f.terms()) out.add_term(la, c * v);
  return out;
}

bool SchurSum::is_s_positive() const {
  for (const auto& [la, c] : terms_)
    if (c < 0) return false;
  return true;
}

bool SchurSum::is_s_negative() const {
  for (const auto& [la, c] : terms_)
    if (c > 0) return false;
  return true;
}

std::string SchurSum::to_string(PartitionStyle style) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [la, c] : terms_) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) out << mag << '*';
    out << "s["
        << (la.empty() || style == PartitionStyle::compact
                ? la.to_string()
                : la.to_string_expanded())
        << ']';
  }
  return out.str();
}

SchurSum parse_schur_sum(const std::string& text) {
  SchurSum out;
  std::string stripped;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) stripped += ch;
  if (stripped.empty() || stripped == "0") return out;
  size_t pos = 0;
  while (pos < stripped.size()) {
    int sign = 1;
    if (stripped[pos] == '+' || stripped[pos] == '-') {
      if (stripped[pos] == '-') sign = -1;
      ++pos;
    }
    size_t star = stripped.find("s[", pos);
    if (star == std::string::npos)
      throw std::invalid_argument("expected s[...] in '" + text + "'");
    Int mag = 1;
    if (star > pos) {
      std::string coeff = stripped.substr(pos, star - pos);
      if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
      if (coeff.empty())
        throw std::invalid_argument("bad coefficient in '" + text + "'");
      mag = Int(coeff);
    }
    size_t close = stripped.find(']', star);
    if (close == std::string::npos)
      throw std::invalid_argument("unterminated s[ in '" + text + "'");
    std::string inner = stripped.substr(star + 2, close - star - 2);
    Partition la = inner.empty() ? Partition{} : parse_partition(inner);
    out.add_term(la, sign * mag);
    pos = close + 1;
  }
  return out;
}

SchurSum two_column(long long a, long long b) {
  if (a < 0 || b < 0) return SchurSum{};
  std::vector<int> parts;
  parts.insert(parts.end(), a, 2);
  parts.insert(parts.end(), b, 1);
  return SchurSum::basis(Partition(std::move(parts)));
}

Tableau::Tableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.outer().length())
    throw std::invalid_argument("tableau row count mismatch");
  for (int r = 1; r <= shape_.outer().length(); ++r) {
    int want = shape_.outer().part(r) - shape_.inner().part(r);
    if (static_cast<int>(rows_[r - 1].size()) != want)
      throw std::invalid_argument("tableau row length mismatch");
  }
}

bool Tableau::is_semistandard() const {
  const Partition& outer = shape_.outer();
  const Partition& inner = shape_.inner();
  auto entry = [&](int r, int c) -> int {  // 0 when (r,c) is not a skew cell
    if (r < 1 || r > outer.length()) return 0;
    if (c <= inner.part(r) || c > outer.part(r)) return 0;
    return rows_[r - 1][c - inner.part(r) - 1];
  };
  for (int r = 1; r <= outer.length(); ++r)
    for (int c = inner.part(r) + 1; c <= outer.part(r); ++c) {
      int v = entry(r, c);
      if (v < 1) return false;
      int left = entry(r, c - 1);
      if (left != 0 && left > v) return false;
      int above = entry(r - 1, c);
      if (above != 0 && above >= v) return false;
    }
  return true;
}

std::vector<int> Tableau::type() const {
  std::vector<int> counts;
  for (const auto& row : rows_)
    for (int v : row) {
      if (static_cast<int>(counts.size()) < v) counts.resize(v, 0);
      ++counts[v - 1];
    }
  return counts;
}

bool is_lattice_word(std::span<const int> word) {
  std::vector<int> counts;
  for (int v : word) {
    if (v < 1) return false;
    if (static_cast<int>(counts.size()) < v) counts.resize(v, 0);
    ++counts[v - 1];
    if (v > 1 && counts[v - 1] > counts[v - 2]) return false;
  }
  return true;
}

std::vector<int> reverse_reading_word(const Tableau& t) {
  std::vector<int> word;
  for (const auto& row : t.rows())
    word.insert(word.end(), row.rbegin(), row.rend());
  return word;
}

namespace {

// Backtracking enumeration of Littlewood-Richardson tableaux of shape
// lambda/mu and type nu. Cells are visited in reverse reading order
// (row-major, right to left within each row) so the lattice-prefix test
// is incremental. Prunes on column strictness, row weakness, the lattice
// condition, and remaining-type feasibility.
class LrSearch {
 public:
  LrSearch(const Partition& lambda, const Partition& mu, const Partition& nu)
      : lambda_(lambda), mu_(mu), nu_(nu) {
    int len = lambda.length();
    grid_.assign(len, {});
    for (int r = 1; r <= len; ++r) {
      grid_[r - 1].assign(lambda.part(r), 0);
      for (int c = lambda.part(r); c > mu.part(r); --c)
        cells_.push_back({r, c});
    }
    suffix_cells_.assign(len + 2, 0);
    for (int r = len; r >= 1; --r)
      suffix_cells_[r] =
          suffix_cells_[r + 1] + (lambda.part(r) - mu.part(r));
    counts_.assign(nu.length() + 1, 0);
  }

  Int count() {
    counting_ = true;
    run(0);
    return count_;
  }

  std::vector<Tableau> enumerate() {
    counting_ = false;
    run(0);
    return std::move(found_);
  }

 private:
  void run(size_t idx) {
    if (idx == cells_.size()) {
      if (counting_) {
        ++count_;
      } else {
        std::vector<std::vector<int>> rows(lambda_.length());
        for (int r = 1; r <= lambda_.length(); ++r)
          for (int c = mu_.part(r) + 1; c <= lambda_.part(r); ++c)
            rows[r - 1].push_back(grid_[r - 1][c - 1]);
        found_.emplace_back(SkewShape(lambda_, mu_), std::move(rows));
      }
      return;
    }
    auto [r, c] = cells_[idx];
    int lo = 1;
    if (r > 1 && c > mu_.part(r - 1)) lo = grid_[r - 2][c - 1] + 1;
    int hi = std::min(r, nu_.length());
    if (c < lambda_.part(r)) hi = std::min(hi, grid_[r - 1][c]);
    long long remaining = static_cast<long long>(cells_.size()) - idx - 1;
    for (int v = lo; v <= hi; ++v) {
      if (counts_[v] >= nu_.part(v)) continue;
      if (v > 1 && counts_[v - 1] <= counts_[v]) continue;  // lattice prefix
      ++counts_[v];
      grid_[r - 1][c - 1] = v;
      if (feasible(r, remaining)) run(idx + 1);
      grid_[r - 1][c - 1] = 0;
      --counts_[v];
    }
  }

  // Every still-needed copy of value w must fit into unfilled cells in
  // rows >= w (LR entries in row r never exceed r).
  bool feasible(int row, long long remaining) const {
    for (int w = 1; w <= nu_.length(); ++w) {
      long long need = nu_.part(w) - counts_[w];
      long long room = w <= row ? remaining : suffix_cells_[std::min(
                                      w, lambda_.length() + 1)];
      if (need > room) return false;
    }
    return true;
  }

  const Partition& lambda_;
  const Partition& mu_;
  const Partition& nu_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<std::vector<int>> grid_;
  std::vector<int> suffix_cells_;
  std::vector<int> counts_;
  bool counting_ = true;
  Int count_ = 0;
  std::vector<Tableau> found_;
};

using PartsKey = std::vector<int>;

std::mutex& memo_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

Int lr_coefficient(const Partition& lambda, const Partition& mu,
                   const Partition& nu) {
  if (lambda.size() != mu.size() + nu.size()) return 0;
  if (!contains(mu, lambda) || !contains(nu, lambda)) return 0;
  // c^lambda_{mu nu} = c^lambda_{nu mu}; enumerate over the smaller type
  // (fewer cells to fill) and key the memo on the normalized pair.
  const Partition* inner = &mu;
  const Partition* type = &nu;
  if (mu.size() < nu.size() ||
      (mu.size() == nu.size() && dec_lex_less(mu, nu)))
    std::swap(inner, type);

  static std::map<std::tuple<PartsKey, PartsKey, PartsKey>, Int> memo;
  std::tuple<PartsKey, PartsKey, PartsKey> key{lambda.parts(), inner->parts(),
                                               type->parts()};
  {
    std::lock_guard<std::mutex> lock(memo_mutex());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  Int value = LrSearch(lambda, *inner, *type).count();
  std::lock_guard<std::mutex> lock(memo_mutex());
  return memo.emplace(std::move(key), std::move(value)).first->second;
}

std::vector<Tableau> lr_tableaux(const Partition& lambda, const Partition& mu,
                                 const Partition& nu) {
  if (lambda.size() != mu.size() + nu.size() || !contains(mu, lambda))
    return {};
  return LrSearch(lambda, mu, nu).enumerate();
}

namespace {

SchurSum lr_basis_product(const Partition& mu, const Partition& nu) {
  const Partition* a = &mu;
  const Partition* b = &nu;
  if (dec_lex_less(*a, *b)) std::swap(a, b);
  static std::map<std::pair<PartsKey, PartsKey>, SchurSum> memo;
  std::pair<PartsKey, PartsKey> key{a->parts(), b->parts()};
  {
    std::lock_guard<std::mutex> lock(memo_mutex());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  SchurSum out;
  int max_part = (mu.empty() ? 0 : mu.parts()[0]) +
                 (nu.empty() ? 0 : nu.parts()[0]);
  int max_len = mu.length() + nu.length();
  for (const Partition& la :
       partitions_bounded(mu.size() + nu.size(), max_part, max_len)) {
    Int c = lr_coefficient(la, mu, nu);
    if (c != 0) out.add_term(la, c);
  }
  std::lock_guard<std::mutex> lock(memo_mutex());
  return memo.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace

SchurSum lr_product(const SchurSum& f, const SchurSum& g) {
  SchurSum out;
  for (const auto& [mu, cf] : f.terms())
    for (const auto& [nu, cg] : g.terms())
      out += (cf * cg) * lr_basis_product(mu, nu);
  return out;
}

namespace {

void pieri_walk(const Partition& mu, int row, int max_rows, int remaining,
                bool horizontal, std::vector<int>& acc, SchurSum& out) {
  if (row > max_rows || remaining == 0) {
    if (remaining == 0) {
      std::vector<int> parts = acc;
      parts.resize(max_rows, 0);
      for (int r = static_cast<int>(acc.size()) + 1; r <= max_rows; ++r)
        parts[r - 1] = mu.part(r);
      out.add_term(Partition(std::move(parts)), 1);
    }
    return;
  }
  int cap;
  if (horizontal) {
    // lambda_row <= mu_{row-1} keeps the added cells in distinct columns.
    cap = row == 1 ? remaining
                   : std::min(remaining, mu.part(row - 1) - mu.part(row));
  } else {
    cap = std::min(remaining, 1);
    // weak decrease against the row above after additions
    if (row > 1 && mu.part(row) + 1 > acc[row - 2]) cap = 0;
  }
  for (int a = 0; a <= cap; ++a) {
    acc.push_back(mu.part(row) + a);
    pieri_walk(mu, row + 1, max_rows, remaining - a, horizontal, acc, out);
    acc.pop_back();
  }
}

}  // namespace

SchurSum pieri_row(const Partition& mu, int n) {
  if (n <= 0) throw std::invalid_argument("pieri strip size must be positive");
  SchurSum out;
  std::vector<int> acc;
  pieri_walk(mu, 1, mu.length() + 1, n, true, acc, out);
  return out;
}

SchurSum pieri_col(const Partition& mu, int n) {
  if (n <= 0) throw std::invalid_argument("pieri strip size must be positive");
  SchurSum out;
  std::vector<int> acc;
  pieri_walk(mu, 1, mu.length() + n, n, false, acc, out);
  return out;
}

SchurSum skew_to_schur(const SkewShape& s) {
  SchurSum out;
  long long d = s.cell_count();
  if (d == 0) return SchurSum::one();
  int max_part = s.outer().parts()[0];
  for (const Partition& nu :
       partitions_bounded(d, max_part, s.outer().length())) {
    Int c = lr_coefficient(s.outer(), s.inner(), nu);
    if (c != 0) out.add_term(nu, c);
  }
  return out;
}

SchurSum delta(const Partition& mu, const SchurSum& f) {
  SchurSum out;
  for (const auto& [la, c] : f.terms()) out.add_term(union_of(la, mu), c);
  return out;
}

SchurSum tilde_delta(const Partition& lambda, const Partition& mu,
                     const SchurSum& f1, const SchurSum& f2) {
  SchurSum a = delta(lambda, f1);
  SchurSum b = delta(mu, f2);
  SchurSum out;
  for (const auto& [la, c] : a.terms()) out.add_term(la, std::max(c, b.coefficient(la)));
  for (const auto& [la, c] : b.terms())
    if (a.coefficient(la) == 0) out.add_term(la, std::max(c, Int(0)));
  return out;
}

namespace {

// Row-major, left-to-right SSYT filler; accumulates q^{sum(entry-1)}.
class SsytSearch {
 public:
  SsytSearch(const SkewShape& shape, int n) : shape_(shape), n_(n) {
    const Partition& outer = shape.outer();
    const Partition& inner = shape.inner();
    grid_.assign(outer.length(), {});
    for (int r = 1; r <= outer.length(); ++r) {
      grid_[r - 1].assign(outer.part(r), 0);
      for (int c = inner.part(r) + 1; c <= outer.part(r); ++c)
        cells_.push_back({r, c});
    }
    // Cells strictly below a given cell in its column bound the entry:
    // a column of depth d below forces entry <= n - d.
    below_.assign(outer.length() + 1, std::vector<int>(outer.part(1) + 2, 0));
    for (int r = outer.length(); r >= 1; --r)
      for (int c = 1; c <= outer.part(1); ++c) {
        bool cell_here = c > inner.part(r) && c <= outer.part(r);
        below_[r - 1][c] = below_[r][c] + (cell_here ? 1 : 0);
      }
  }

  LaurentPoly run() {
    walk(0, 0);
    return std::move(acc_);
  }

 private:
  void walk(size_t idx, long long weight) {
    if (idx == cells_.size()) {
      acc_ += LaurentPoly::monomial(weight);
      return;
    }
    auto [r, c] = cells_[idx];
    int lo = 1;
    if (c > shape_.inner().part(r) + 1)
      lo = std::max(lo, grid_[r - 1][c - 2]);
    if (r > 1 && c > shape_.inner().part(r - 1) &&
        c <= shape_.outer().part(r - 1))
      lo = std::max(lo, grid_[r - 2][c - 1] + 1);
    int hi = n_ - below_[r][c];
    for (int v = lo; v <= hi; ++v) {
      grid_[r - 1][c - 1] = v;
      walk(idx + 1, weight + v - 1);
    }
    grid_[r - 1][c - 1] = 0;
  }

  const SkewShape& shape_;
  int n_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<std::vector<int>> grid_;
  std::vector<std::vector<int>> below_;
  LaurentPoly acc_;
};

}  // namespace

LaurentPoly ssyt_weight_sum(const SkewShape& s, int n) {
  if (n < 0) throw std::invalid_argument("variable count must be nonnegative");
  if (n == 0) return s.cell_count() == 0 ? LaurentPoly(1) : LaurentPoly{};
  return SsytSearch(s, n).run();
}

}  // namespace schurq
