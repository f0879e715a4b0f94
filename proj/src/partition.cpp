#include "schurq/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schurq {

namespace {

void validate_weakly_decreasing(const std::vector<int>& parts) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw std::invalid_argument("negative partition part");
    if (i + 1 < parts.size() && parts[i] < parts[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  validate_weakly_decreasing(parts_);
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

long long Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::part(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[i - 1];
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::ostringstream out;
  for (size_t i = 0; i < parts_.size();) {
    size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (i > 0) out << ',';
    out << parts_[i];
    if (j - i > 1) out << '^' << (j - i);
    i = j;
  }
  return out.str();
}

std::string Partition::to_string_expanded() const {
  std::ostringstream out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out << ',';
    out << parts_[i];
  }
  return out.str();
}

bool dec_lex_less(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                      a.parts().begin(), a.parts().end());
}

Partition parse_partition(const std::string& text) {
  if (text == "-") return Partition{};
  if (text.empty()) throw std::invalid_argument("empty partition text");
  std::vector<int> parts;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    size_t caret = token.find('^');
    std::string base = token.substr(0, caret);
    long long mult = 1;
    try {
      size_t pos = 0;
      long long value = std::stoll(base, &pos);
      if (pos != base.size()) throw std::invalid_argument(token);
      if (caret != std::string::npos) {
        std::string exp = token.substr(caret + 1);
        mult = std::stoll(exp, &pos);
        if (pos != exp.size()) throw std::invalid_argument(token);
      }
      if (value <= 0 || mult <= 0 || value > 1'000'000 || mult > 1'000'000)
        throw std::invalid_argument(token);
      for (long long i = 0; i < mult; ++i)
        parts.push_back(static_cast<int>(value));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition token '" + token + "' in '" +
                                  text + "'");
    }
  }
  if (text.back() == ',')
    throw std::invalid_argument("trailing comma in '" + text + "'");
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols;
  if (!lambda.empty()) {
    cols.assign(lambda.parts()[0], 0);
    for (int p : lambda.parts())
      for (int j = 0; j < p; ++j) ++cols[j];
  }
  return Partition(std::move(cols));
}

bool contains(const Partition& mu, const Partition& lambda) {
  if (mu.length() > lambda.length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (lambda.part(i) < mu.part(i)) return false;
  return true;
}

Partition union_of(const Partition& lambda, const Partition& mu) {
  std::vector<int> parts = lambda.parts();
  parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

Partition union_power(const Partition& lambda, int k) {
  Partition result;
  for (int i = 0; i < k; ++i) result = union_of(result, lambda);
  return result;
}

int hook_length(const Partition& lambda, Cell c) {
  if (c.row < 1 || c.col < 1 || c.col > lambda.part(c.row))
    throw std::invalid_argument("cell outside diagram");
  Partition conj = conjugate(lambda);
  return lambda.part(c.row) + conj.part(c.col) - c.row - c.col + 1;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!contains(inner_, outer_))
    throw std::invalid_argument("skew shape requires inner within outer");
}

std::string SkewShape::to_string() const {
  return outer_.to_string() + "/" + inner_.to_string();
}

bool is_horizontal_strip(const SkewShape& s) {
  // No two cells share a column iff row i+1 of outer fits under inner row i.
  for (int i = 1; i < s.outer().length(); ++i)
    if (s.outer().part(i + 1) > s.inner().part(i)) return false;
  return true;
}

bool is_vertical_strip(const SkewShape& s) {
  for (int i = 1; i <= s.outer().length(); ++i)
    if (s.outer().part(i) - s.inner().part(i) > 1) return false;
  return true;
}

namespace {

Partition componentwise(const Partition& a, const Partition& b,
                        bool take_max) {
  int len = std::max(a.length(), b.length());
  std::vector<int> parts(len);
  for (int i = 1; i <= len; ++i)
    parts[i - 1] =
        take_max ? std::max(a.part(i), b.part(i)) : std::min(a.part(i), b.part(i));
  return Partition(std::move(parts));
}

}  // namespace

SkewShape join(const SkewShape& s1, const SkewShape& s2) {
  return SkewShape(componentwise(s1.outer(), s2.outer(), true),
                   componentwise(s1.inner(), s2.inner(), true));
}

SkewShape meet(const SkewShape& s1, const SkewShape& s2) {
  return SkewShape(componentwise(s1.outer(), s2.outer(), false),
                   componentwise(s1.inner(), s2.inner(), false));
}

namespace {

// Emits weakly decreasing sequences in decreasing-lex order by always
// trying the largest admissible next part first.
void gen_restricted(long long remaining, int max_part, int max_len,
                    const std::set<int>* allowed, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  if (max_len == 0) return;
  if (allowed) {
    for (auto it = allowed->rbegin(); it != allowed->rend(); ++it) {
      int p = *it;
      if (p > max_part || p > remaining) continue;
      acc.push_back(p);
      gen_restricted(remaining - p, p, max_len - 1, allowed, acc, out);
      acc.pop_back();
    }
  } else {
    int hi = static_cast<int>(std::min<long long>(max_part, remaining));
    for (int p = hi; p >= 1; --p) {
      acc.push_back(p);
      gen_restricted(remaining - p, p, max_len - 1, allowed, acc, out);
      acc.pop_back();
    }
  }
}

}  // namespace

std::vector<Partition> partitions_with_parts_in(const std::set<int>& allowed,
                                                long long n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> acc;
  int max_part = allowed.empty() ? 0 : *allowed.rbegin();
  gen_restricted(n, max_part, n > 0 ? static_cast<int>(n) : 0, &allowed, acc,
                 out);
  return out;
}

std::vector<Partition> all_partitions(long long n) {
  return partitions_bounded(n, static_cast<int>(std::max<long long>(n, 0)),
                            static_cast<int>(std::max<long long>(n, 0)));
}

std::vector<Partition> partitions_bounded(long long n, int max_part,
                                          int max_len) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> acc;
  gen_restricted(n, max_part, max_len, nullptr, acc, out);
  return out;
}

std::vector<Partition> q_family(const Partition& mu, long long n) {
  std::vector<Partition> out;
  long long excess = n - mu.size();
  if (excess < 0 || excess % 4 != 0) return out;
  long long blocks = excess / 4;
  PartitionSet seen;
  const Partition four{4}, three_one{3, 1}, two_two{2, 2};
  for (long long a = 0; a <= blocks; ++a)
    for (long long b = 0; a + b <= blocks; ++b) {
      long long c = blocks - a - b;
      Partition lambda = mu;
      lambda = union_of(lambda, union_power(four, static_cast<int>(a)));
      lambda = union_of(lambda, union_power(three_one, static_cast<int>(b)));
      lambda = union_of(lambda, union_power(two_two, static_cast<int>(c)));
      seen.insert(lambda);
    }
  out.assign(seen.begin(), seen.end());
  return out;
}

std::vector<Partition> subpartitions(const Partition& mu) {
  std::vector<Partition> out;
  std::vector<int> acc;
  std::function<void(int, int)> walk = [&](int row, int bound) {
    if (row > mu.length() || bound == 0) {
      out.push_back(Partition(acc));
      return;
    }
    int hi = std::min(bound, mu.part(row));
    for (int p = hi; p >= 1; --p) {
      acc.push_back(p);
      walk(row + 1, p);
      acc.pop_back();
    }
    out.push_back(Partition(acc));  // stop here: all remaining rows zero
  };
  walk(1, mu.empty() ? 0 : mu.parts()[0]);
  std::sort(out.begin(), out.end(), dec_lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace schurq
