// Command-line frontend: Schur expansions, table regeneration, and the
// named verification suites.

#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "schurq/narayana.hpp"
#include "schurq/partition.hpp"
#include "schurq/qpoly.hpp"
#include "schurq/schur.hpp"
#include "schurq/specialize.hpp"
#include "schurq/verify.hpp"

namespace {

using namespace schurq;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

enum class Format { text, structured };

struct Ranges {
  std::map<std::string, long long> overrides;
  long long get(const std::string& key, long long fallback) const {
    auto it = overrides.find(key);
    return it == overrides.end() ? fallback : it->second;
  }
};

// A suite's outcome: ok means every case met its expected result
// (expected failures included).
struct SuiteResult {
  std::vector<CheckReport> reports;
  bool ok = true;
};

SuiteResult all_pass(std::vector<CheckReport> reports) {
  SuiteResult result;
  result.reports = std::move(reports);
  for (const CheckReport& r : result.reports) result.ok = result.ok && r.passed;
  return result;
}

// ---------------------------------------------------------------------
// Suite runners
// ---------------------------------------------------------------------

SuiteResult run_theo_s(const Ranges& r) {
  std::vector<CheckReport> reports;
  for (int m = 0; m <= r.get("max-m", 12); ++m)
    reports.push_back(check_theo_s(m));
  return all_pass(std::move(reports));
}

SuiteResult run_mainconj(const Ranges& r) {
  std::vector<CheckReport> reports;
  long long ab = r.get("max-ab", 4), max_r = r.get("max-r", 10);
  for (int a = 0; a <= ab; ++a)
    for (int b = a; b <= ab; ++b)
      for (int rr = 0; rr <= max_r; ++rr)
        reports.push_back(check_mainconj(a, b, rr));
  return all_pass(std::move(reports));
}

SuiteResult run_lemm_odd_even(const Ranges& r) {
  std::vector<CheckReport> reports;
  for (int k = 1; k <= r.get("max-k", 3); ++k)
    reports.push_back(check_lemm_odd_even(k));
  return all_pass(std::move(reports));
}

SuiteResult run_theo_odd_even(const Ranges& r) {
  std::vector<CheckReport> reports;
  for (int k = 1; k <= r.get("max-k", 3); ++k)
    reports.push_back(check_theo_odd_even(k));
  return all_pass(std::move(reports));
}

SuiteResult run_coro_signs(const Ranges& r) {
  std::vector<CheckReport> reports;
  for (int m = 2; m <= r.get("max-m", 9); ++m)
    reports.push_back(check_coro_signs(m));
  return all_pass(std::move(reports));
}

SuiteResult run_lemm_two(const Ranges& r) {
  std::vector<CheckReport> reports;
  long long max_b = r.get("max-b", 2), max_r = r.get("max-r", 8);
  for (int a = 0; a <= max_b; ++a)
    for (int b = a; b <= max_b; ++b)
      for (int k = std::max(b, 1); k <= max_r; ++k)
        for (int rr = std::max(k, 2); rr <= max_r; ++rr)
          reports.push_back(check_lemm_two(a, b, k, rr));
  return all_pass(std::move(reports));
}

SuiteResult run_dabkr_shift(const Ranges& r) {
  std::vector<CheckReport> reports;
  long long max_r = r.get("max-r", 9);
  for (int a = 1; a <= 2; ++a)
    for (int b = a; b <= 3; ++b)
      for (int k = 1; k <= max_r; ++k)
        for (int rr = k; rr <= max_r; ++rr)
          reports.push_back(check_dabkr_shift({a, b, k, rr}));
  return all_pass(std::move(reports));
}

SuiteResult run_table1(const Ranges&) {
  std::vector<CheckReport> reports;
  for (int m : {7, 8, 9}) reports.push_back(check_table1(m));
  return all_pass(std::move(reports));
}

SuiteResult run_table2(const Ranges&) {
  std::vector<CheckReport> reports;
  reports.push_back(check_table2(0, 1, 8));
  reports.push_back(check_table2(0, 1, 9));
  reports.push_back(check_table2(0, 2, 10));
  return all_pass(std::move(reports));
}

SuiteResult run_lemm_ps(const Ranges& r) {
  std::vector<CheckReport> reports;
  for (int k = 1; k <= r.get("max-k", 6); ++k)
    for (int n = 2; n <= r.get("max-n", 8); ++n)
      reports.push_back(ps_recurrence_check(k, n));
  return all_pass(std::move(reports));
}

SuiteResult run_lemm_general(const Ranges& r) {
  std::vector<CheckReport> reports;
  for (int m = 1; m <= r.get("max-m", 8); ++m)
    for (int n = 1; n <= m; ++n)
      for (int k = 0; k <= r.get("max-k", 6); ++k)
        reports.push_back(convolution_check(m, n, k));
  return all_pass(std::move(reports));
}

SuiteResult run_narayana_strong_qlc(const Ranges& r) {
  PolySequence seq =
      narayana_poly_sequence(static_cast<int>(r.get("max-n", 14)));
  std::vector<CheckReport> reports;
  reports.push_back(is_strongly_q_log_convex(seq));
  return all_pass(std::move(reports));
}

// The introduction's sequence: q-log-convex but not strongly so.
SuiteResult run_qlc_counterexample(const Ranges&) {
  auto poly = [](int c1, int c2, int c3) {
    return LaurentPoly::monomial(1, c1) + LaurentPoly::monomial(2, c2) +
           LaurentPoly::monomial(3, c3);
  };
  PolySequence seq = {poly(2, 1, 3), poly(1, 2, 2), poly(1, 2, 2),
                      poly(2, 1, 3)};
  SuiteResult result;
  result.reports.push_back(is_q_log_convex(seq));
  result.reports.push_back(is_strongly_q_log_convex(seq));
  result.ok = result.reports[0].passed && !result.reports[1].passed &&
              !result.reports[1].witness.is_null();
  return result;
}

SuiteResult run_butler_flanigan_narayana(const Ranges& r) {
  PolySequence seq =
      narayana_poly_sequence(static_cast<int>(r.get("max-n", 8)));
  SuiteResult result;
  result.reports.push_back(check_butler_flanigan(seq));
  result.ok =
      !result.reports[0].passed && !result.reports[0].witness.is_null();
  return result;
}

SuiteResult run_lem1(const Ranges& r) {
  std::vector<CheckReport> reports;
  for (int n = 1; n <= r.get("max-n", 10); ++n)
    for (int rr = 0; rr < 2 * n; ++rr) reports.push_back(check_lem1(n, rr));
  return all_pass(std::move(reports));
}

SuiteResult run_alpha_threshold(const Ranges& r) {
  std::vector<CheckReport> reports;
  for (int n = 1; n <= r.get("max-n", 12); ++n)
    for (int rr = 0; rr <= 2 * n; ++rr)
      reports.push_back(check_alpha_threshold(n, rr));
  return all_pass(std::move(reports));
}

SuiteResult run_alpha_sum(const Ranges& r) {
  std::vector<CheckReport> reports;
  for (int n = 1; n <= r.get("max-n", 12); ++n)
    reports.push_back(check_alpha_sum(n));
  return all_pass(std::move(reports));
}

RealSequence random_log_convex_sequence(std::mt19937& rng, int len) {
  auto rational = [&rng](int lo, int hi, int max_den) {
    int den = std::uniform_int_distribution<int>(1, max_den)(rng);
    int num = std::uniform_int_distribution<int>(lo, hi)(rng);
    return Rational(num, den);
  };
  RealSequence a;
  Rational value = rational(1, 6, 3);
  Rational ratio = rational(1, 4, 3);
  a.push_back(value);
  for (int k = 1; k < len; ++k) {
    value *= ratio;
    a.push_back(value);
    ratio += rational(0, 3, 4);  // nondecreasing ratios keep it log-convex
  }
  return a;
}

SuiteResult run_trans(const Ranges& r) {
  std::mt19937 rng(static_cast<unsigned>(r.get("seed", 20260810)));
  int len = static_cast<int>(r.get("len", 12));
  std::vector<CheckReport> reports;
  for (int i = 0; i < r.get("count", 100); ++i) {
    CheckReport rep = check_transform_preserves(
        random_log_convex_sequence(rng, len), len);
    rep.params["case"] = i;
    reports.push_back(std::move(rep));
  }
  return all_pass(std::move(reports));
}

SuiteResult run_trans_counterexample(const Ranges& r) {
  int len = static_cast<int>(r.get("len", 12));
  RealSequence alternating;
  for (int k = 0; k < len; ++k)
    alternating.push_back(k % 2 == 0 ? 1 : -1);
  SuiteResult result;
  CheckReport refused = check_transform_preserves(alternating, len);
  result.reports.push_back(refused);

  RealSequence b = narayana_transform(alternating, len);
  bool convex = true;
  int witness = -1;
  for (int n = 1; n + 1 < len; ++n)
    if (b[n + 1] * b[n - 1] < b[n] * b[n]) {
      convex = false;
      witness = n;
      break;
    }
  CheckReport raw;
  raw.suite_id = "trans-counterexample";
  raw.params = {{"len", len}};
  raw.passed = convex;
  if (!convex) raw.witness = {{"index", witness}};
  result.reports.push_back(raw);

  result.ok = !refused.passed && refused.witness.contains("refused") &&
              !convex;
  return result;
}

SuiteResult run_sect6_identities(const Ranges& r) {
  std::vector<CheckReport> reports;
  for (int m = 1; m <= r.get("max-mn", 8); ++m)
    for (int n = 1; n <= m; ++n)
      for (int k = 1; k <= r.get("max-k", 5); ++k)
        reports.push_back(check_sect6_identities(m, n, k));
  return all_pass(std::move(reports));
}

SuiteResult run_qn_concave_fixed_n(const Ranges& r) {
  std::vector<CheckReport> reports;
  for (int n = 1; n <= r.get("max-n", 10); ++n)
    reports.push_back(
        check_qn_concave_fixed_n(n, static_cast<int>(r.get("max-k", 10))));
  return all_pass(std::move(reports));
}

SuiteResult run_qn_concave_fixed_k(const Ranges& r) {
  std::vector<CheckReport> reports;
  for (int k = 1; k <= r.get("max-k", 4); ++k)
    reports.push_back(
        check_qn_concave_fixed_k(k, static_cast<int>(r.get("max-n", 10))));
  return all_pass(std::move(reports));
}

SuiteResult run_sect6_coro(const Ranges& r) {
  std::vector<CheckReport> reports;
  for (int k = 1; k <= r.get("max-k", 4); ++k)
    reports.push_back(check_sect6_coro(k));
  return all_pass(std::move(reports));
}

SuiteResult run_lpp_small(const Ranges& r) {
  std::mt19937 rng(static_cast<unsigned>(r.get("seed", 20260810)));
  auto random_skew = [&rng]() {
    while (true) {
      std::vector<int> outer;
      int prev = std::uniform_int_distribution<int>(1, 4)(rng);
      int len = std::uniform_int_distribution<int>(1, 3)(rng);
      long long total = 0;
      for (int i = 0; i < len; ++i) {
        outer.push_back(prev);
        total += prev;
        prev = std::uniform_int_distribution<int>(1, prev)(rng);
      }
      if (total > 8) continue;
      Partition out(outer);
      std::vector<int> inner;
      int bound = out.parts()[0];
      for (int i = 0; i < out.length(); ++i) {
        int v = std::uniform_int_distribution<int>(
            0, std::min(bound, out.part(i + 1)))(rng);
        inner.push_back(v);
        bound = v;
        if (v == 0) break;
      }
      return SkewShape(out, Partition(inner));
    }
  };
  std::vector<CheckReport> reports;
  for (int i = 0; i < r.get("count", 30); ++i) {
    SkewShape s1 = random_skew(), s2 = random_skew();
    CheckReport rep = check_lpp_small(s1, s2);
    rep.params["case"] = i;
    reports.push_back(std::move(rep));
  }
  return all_pass(std::move(reports));
}

SuiteResult run_formula_b(const Ranges& r) {
  std::vector<CheckReport> reports;
  for (int n = 1; n <= r.get("max-n", 12); ++n) {
    nlohmann::json params{{"n", n}};
    CheckReport rep = make_pass("formula-b", params);
    for (int k = 0; k < n; ++k) {
      LaurentPoly closed =
          exact_div(q_binomial(n, k) * q_binomial(n, k + 1) *
                        LaurentPoly::monomial(static_cast<long long>(k) * k + k),
                    q_int(n));
      LaurentPoly via_schur =
          eval_geometric(two_column(k, 0), GeomVarSet::x(n));
      if (closed != via_schur) {
        rep = make_fail("formula-b", params,
                        {{"k", k},
                         {"closed", closed.to_string()},
                         {"schur", via_schur.to_string()}});
        break;
      }
    }
    reports.push_back(std::move(rep));
  }
  return all_pass(std::move(reports));
}

SuiteResult run_lr_oracle(const Ranges& r) {
  long long max_total = r.get("max-total", 10);
  int vars = static_cast<int>(r.get("vars", 6));
  std::map<Partition, LaurentPoly, DecLexLess> weight_cache;
  auto weight = [&](const Partition& la) {
    auto it = weight_cache.find(la);
    if (it == weight_cache.end())
      it = weight_cache
               .emplace(la, ssyt_weight_sum(SkewShape(la, Partition{}), vars))
               .first;
    return it->second;
  };
  std::vector<CheckReport> reports;
  for (long long sm = 0; sm <= max_total; ++sm)
    for (long long sn = sm; sn + sm <= max_total; ++sn) {
      nlohmann::json params{{"size1", sm}, {"size2", sn}, {"vars", vars}};
      CheckReport rep = make_pass("lr-oracle", params);
      for (const Partition& mu : all_partitions(sm)) {
        for (const Partition& nu : all_partitions(sn)) {
          LaurentPoly direct = weight(mu) * weight(nu);
          LaurentPoly expanded;
          for (const auto& [la, c] :
               lr_product(SchurSum::basis(mu), SchurSum::basis(nu)).terms())
            expanded += LaurentPoly(c) * weight(la);
          if (direct != expanded) {
            rep = make_fail("lr-oracle", params,
                            {{"mu", mu.to_string()}, {"nu", nu.to_string()}});
            break;
          }
        }
        if (!rep.passed) break;
      }
      reports.push_back(std::move(rep));
    }
  return all_pass(std::move(reports));
}

SuiteResult run_hook_content_oracle(const Ranges& r) {
  std::vector<CheckReport> reports;
  for (long long size = 0; size <= r.get("max-size", 8); ++size)
    for (int n = 0; n <= r.get("max-n", 5); ++n) {
      nlohmann::json params{{"size", size}, {"n", n}};
      CheckReport rep = make_pass("hook-content-oracle", params);
      for (const Partition& la : all_partitions(size))
        if (ps(la, n) != ssyt_weight_sum(SkewShape(la, Partition{}), n)) {
          rep = make_fail("hook-content-oracle", params,
                          {{"lambda", la.to_string()}});
          break;
        }
      reports.push_back(std::move(rep));
    }
  return all_pass(std::move(reports));
}

SuiteResult run_pieri_oracle(const Ranges& r) {
  std::vector<CheckReport> reports;
  for (long long size = 0; size <= r.get("max-size", 8); ++size)
    for (int n = 1; n <= r.get("max-n", 4); ++n) {
      nlohmann::json params{{"size", size}, {"n", n}};
      CheckReport rep = make_pass("pieri-oracle", params);
      for (const Partition& mu : all_partitions(size)) {
        SchurSum row = lr_product(
            SchurSum::basis(mu), SchurSum::basis(Partition(std::vector<int>(1, n))));
        SchurSum col = lr_product(
            SchurSum::basis(mu), SchurSum::basis(Partition(std::vector<int>(n, 1))));
        if (pieri_row(mu, n) != row || pieri_col(mu, n) != col) {
          rep = make_fail("pieri-oracle", params, {{"mu", mu.to_string()}});
          break;
        }
      }
      reports.push_back(std::move(rep));
    }
  return all_pass(std::move(reports));
}

SuiteResult run_narayana_oracle(const Ranges& r) {
  std::vector<CheckReport> reports;
  for (int n = 1; n <= r.get("max-n", 10); ++n) {
    nlohmann::json params{{"n", n}};
    CheckReport rep = make_pass("narayana-oracle", params);
    for (int k = 0; k < n; ++k)
      if (narayana_num(n, k) != dyck_peak_oracle(n, k)) {
        rep = make_fail("narayana-oracle", params, {{"k", k}});
        break;
      }
    reports.push_back(std::move(rep));
  }
  return all_pass(std::move(reports));
}

SuiteResult run_lrrule_example(const Ranges&) {
  Partition la{9, 5, 3, 3, 1}, mu{4, 2, 1}, nu{7, 4, 3};
  nlohmann::json params{
      {"lambda", la.to_string()}, {"mu", mu.to_string()}, {"nu", nu.to_string()}};
  auto tableaux = lr_tableaux(la, mu, nu);
  nlohmann::json words = nlohmann::json::array();
  for (const Tableau& t : tableaux) words.push_back(reverse_reading_word(t));
  bool ok = lr_coefficient(la, mu, nu) == 3 && tableaux.size() == 3;
  std::vector<int> first_word{1, 1, 1, 1, 1, 2, 1, 1, 2, 2, 3, 3, 2, 3};
  ok = ok && !tableaux.empty() &&
       reverse_reading_word(tableaux[0]) == first_word;
  CheckReport rep;
  rep.suite_id = "lrrule-example";
  rep.params = params;
  rep.passed = ok;
  rep.witness = {{"reading_words", words}};
  return all_pass({rep});
}

using SuiteFn = std::function<SuiteResult(const Ranges&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"lrrule-example", run_lrrule_example},
      {"lr-oracle", run_lr_oracle},
      {"hook-content-oracle", run_hook_content_oracle},
      {"pieri-oracle", run_pieri_oracle},
      {"narayana-oracle", run_narayana_oracle},
      {"lemm-ps", run_lemm_ps},
      {"lemm-general", run_lemm_general},
      {"lemm-odd-even", run_lemm_odd_even},
      {"theo-odd-even", run_theo_odd_even},
      {"coro-signs", run_coro_signs},
      {"theo-s", run_theo_s},
      {"lemm-two", run_lemm_two},
      {"dabkr-shift", run_dabkr_shift},
      {"mainconj", run_mainconj},
      {"table-1", run_table1},
      {"table-2", run_table2},
      {"formula-b", run_formula_b},
      {"narayana-strong-qlc", run_narayana_strong_qlc},
      {"qlc-counterexample", run_qlc_counterexample},
      {"butler-flanigan-narayana", run_butler_flanigan_narayana},
      {"lem1", run_lem1},
      {"alpha-threshold", run_alpha_threshold},
      {"alpha-sum", run_alpha_sum},
      {"trans", run_trans},
      {"trans-counterexample", run_trans_counterexample},
      {"sect6-identities", run_sect6_identities},
      {"qn-concave-fixed-n", run_qn_concave_fixed_n},
      {"qn-concave-fixed-k", run_qn_concave_fixed_k},
      {"sect6-coro", run_sect6_coro},
      {"lpp-small", run_lpp_small},
  };
  return suites;
}

void print_reports(const SuiteResult& result, Format format,
                   const std::string& suite) {
  if (format == Format::structured) {
    for (const CheckReport& r : result.reports)
      std::cout << r.to_line() << '\n';
    return;
  }
  int passed = 0;
  for (const CheckReport& r : result.reports) {
    if (r.passed) ++passed;
    std::cout << (r.passed ? "ok   " : "FAIL ") << r.suite_id << ' '
              << r.params.dump();
    if (!r.passed && !r.witness.is_null())
      std::cout << " witness=" << r.witness.dump();
    std::cout << '\n';
  }
  std::cout << "suite " << suite << ": " << passed << '/'
            << result.reports.size() << " cases passed, expected outcome "
            << (result.ok ? "met" : "NOT met") << '\n';
}

int cmd_verify(const std::string& suite, const Ranges& ranges, Format format) {
  const auto& registry = suite_registry();
  std::vector<std::pair<std::string, SuiteFn>> to_run;
  if (suite == "all") {
    to_run = registry;
  } else {
    for (const auto& entry : registry)
      if (entry.first == suite) to_run.push_back(entry);
    if (to_run.empty()) {
      std::cerr << "unknown suite '" << suite << "'. Available suites:\n";
      for (const auto& entry : registry)
        std::cerr << "  " << entry.first << '\n';
      std::cerr << "  all\n";
      return kExitUsage;
    }
  }
  bool all_ok = true;
  for (const auto& [name, fn] : to_run) {
    SuiteResult result = fn(ranges);
    print_reports(result, format, name);
    all_ok = all_ok && result.ok;
  }
  return all_ok ? kExitOk : kExitMismatch;
}

int cmd_lr(const std::string& mu_text, const std::string& nu_text,
           const std::string& coeff_of, Format format) {
  Partition mu = parse_partition(mu_text);
  Partition nu = parse_partition(nu_text);
  if (!coeff_of.empty()) {
    Partition la = parse_partition(coeff_of);
    std::cout << lr_coefficient(la, mu, nu).str() << '\n';
    return kExitOk;
  }
  SchurSum product = lr_product(SchurSum::basis(mu), SchurSum::basis(nu));
  if (format == Format::structured) {
    for (const auto& [la, c] : product.terms())
      std::cout << nlohmann::json{{"partition", la.to_string()},
                                  {"coeff", c.str()}}
                       .dump()
                << '\n';
  } else {
    std::cout << product.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_table_dfamily(int m, bool golden, Format format) {
  std::vector<std::pair<std::string, SchurSum>> rows;
  for (int i = 0; i <= m; ++i)
    rows.emplace_back(
        "D[" + std::to_string(m) + "," + std::to_string(i) + "]",
        d_family({m, i}));
  for (const auto& [label, value] : rows) {
    if (format == Format::structured) {
      if (value.is_zero()) {
        std::cout << nlohmann::json{{"row", label}, {"zero", true}}.dump()
                  << '\n';
        continue;
      }
      for (const auto& [la, c] : value.terms())
        std::cout << nlohmann::json{{"row", label},
                                    {"partition", la.to_string()},
                                    {"coeff", c.str()}}
                         .dump()
                  << '\n';
    } else {
      std::cout << label << " = "
                << value.to_string(SchurSum::PartitionStyle::compact) << '\n';
    }
  }
  if (!golden) return kExitOk;
  CheckReport rep = check_table1(m);
  if (!rep.passed) {
    std::cerr << "golden mismatch: " << rep.witness.dump() << '\n';
    return rep.witness.contains("refused") ? kExitUsage : kExitMismatch;
  }
  std::cerr << "golden: ok\n";
  return kExitOk;
}

int cmd_table_dabkr(int a, int b, int r, bool golden, Format format) {
  std::vector<std::pair<std::string, SchurSum>> rows;
  for (int k = 0; k <= r; ++k)
    rows.emplace_back("D[" + std::to_string(a) + "," + std::to_string(b) +
                          "," + std::to_string(k) + "," + std::to_string(r) +
                          "]",
                      dabkr({a, b, k, r}));
  for (const auto& [label, value] : rows) {
    if (format == Format::structured) {
      if (value.is_zero()) {
        std::cout << nlohmann::json{{"row", label}, {"zero", true}}.dump()
                  << '\n';
        continue;
      }
      for (const auto& [la, c] : value.terms())
        std::cout << nlohmann::json{{"row", label},
                                    {"partition", la.to_string()},
                                    {"coeff", c.str()}}
                         .dump()
                  << '\n';
    } else {
      std::cout << label << " = "
                << value.to_string(SchurSum::PartitionStyle::compact) << '\n';
    }
  }
  if (!golden) return kExitOk;
  CheckReport rep = check_table2(a, b, r);
  if (!rep.passed) {
    std::cerr << "golden mismatch: " << rep.witness.dump() << '\n';
    return rep.witness.contains("refused") ? kExitUsage : kExitMismatch;
  }
  std::cerr << "golden: ok\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Schur-function computations in the Schur basis, with "
               "verification suites"};
  app.require_subcommand(1);

  std::string format_name = "text";
  auto add_format = [&format_name](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->envname("SCHURQ_FORMAT");
  };

  // lr
  auto* lr = app.add_subcommand("lr", "Expand a product s_mu * s_nu");
  add_format(lr);
  std::string mu_text, nu_text, coeff_of;
  lr->add_option("mu", mu_text, "First partition (`-` for the empty one)")
      ->required();
  lr->add_option("nu", nu_text, "Second partition")->required();
  lr->add_option("--coeff-of", coeff_of,
                 "Print only the coefficient of this partition");

  // table
  auto* table = app.add_subcommand("table", "Regenerate a reference table");
  add_format(table);
  std::string table_name;
  table->add_option("name", table_name, "Table family")
      ->required()
      ->check(CLI::IsMember({"d-family", "dabkr"}));
  int opt_m = -1, opt_a = -1, opt_b = -1, opt_r = -1;
  table->add_option("--m", opt_m, "Row parameter m (d-family)");
  table->add_option("--a", opt_a, "Parameter a (dabkr)");
  table->add_option("--b", opt_b, "Parameter b (dabkr)");
  table->add_option("--r", opt_r, "Parameter r (dabkr)");
  bool golden = false;
  table->add_flag("--golden", golden,
                  "Diff against the embedded golden data; exit 1 on mismatch");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  add_format(verify);
  std::string suite;
  verify->add_option("suite", suite, "Suite id (or `all`)");
  bool list_suites = false;
  verify->add_flag("--list", list_suites, "List available suites");
  Ranges ranges;
  const std::vector<std::pair<std::string, std::string>> range_flags = {
      {"max-m", "SCHURQ_MAX_M"},   {"max-n", "SCHURQ_MAX_N"},
      {"max-k", "SCHURQ_MAX_K"},   {"max-r", "SCHURQ_MAX_R"},
      {"max-b", "SCHURQ_MAX_B"},   {"max-ab", "SCHURQ_MAX_AB"},
      {"max-mn", "SCHURQ_MAX_MN"}, {"max-size", "SCHURQ_MAX_SIZE"},
      {"max-total", "SCHURQ_MAX_TOTAL"}, {"vars", "SCHURQ_VARS"},
      {"count", "SCHURQ_COUNT"},   {"len", "SCHURQ_LEN"},
      {"seed", "SCHURQ_SEED"}};
  for (const auto& [flag, env] : range_flags) {
    verify
        ->add_option_function<long long>(
            "--" + flag,
            [&ranges, name = flag](const long long& value) {
              ranges.overrides[name] = value;
            },
            "Range bound " + flag)
        ->envname(env);
  }

  try {
    // A bare `-` positional denotes the empty partition; shield it from
    // option parsing.
    std::vector<std::string> args(argv + 1, argv + argc);
    for (std::string& arg : args)
      if (arg == "-") arg = "@EMPTY@";
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto unshield = [](std::string& text) {
    if (text == "@EMPTY@") text = "-";
  };
  unshield(mu_text);
  unshield(nu_text);
  unshield(coeff_of);

  Format format =
      format_name == "structured" ? Format::structured : Format::text;

  try {
    if (lr->parsed()) return cmd_lr(mu_text, nu_text, coeff_of, format);
    if (table->parsed()) {
      if (table_name == "d-family") {
        if (opt_m < 0) {
          std::cerr << "table d-family requires --m\n";
          return kExitUsage;
        }
        return cmd_table_dfamily(opt_m, golden, format);
      }
      if (opt_a < 0 || opt_b < 0 || opt_r < 0) {
        std::cerr << "table dabkr requires --a, --b and --r\n";
        return kExitUsage;
      }
      return cmd_table_dabkr(opt_a, opt_b, opt_r, golden, format);
    }
    if (verify->parsed()) {
      if (list_suites) {
        for (const auto& entry : suite_registry())
          std::cout << entry.first << '\n';
        std::cout << "all\n";
        return kExitOk;
      }
      if (suite.empty()) {
        std::cerr << "verify requires a suite id (or --list)\n";
        return kExitUsage;
      }
      return cmd_verify(suite, ranges, format);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
