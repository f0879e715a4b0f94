// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion re-derives its expected values from embedded reference
// data or from an independent oracle and is bounded by a wall-clock
// budget.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "schurq/narayana.hpp"
#include "schurq/partition.hpp"
#include "schurq/qpoly.hpp"
#include "schurq/schur.hpp"
#include "schurq/specialize.hpp"
#include "schurq/verify.hpp"

namespace {

using namespace schurq;

bool table1_reproduction(std::string& note) {
  for (int m : {7, 8, 9}) {
    CheckReport r = check_table1(m);
    if (!r.passed) {
      note = r.to_line();
      return false;
    }
  }
  // All coefficients are +1 or -1.
  for (const GoldenDFamilyRow& row : golden_table1())
    for (const auto& [la, c] : d_family({row.m, row.i}).terms())
      if (c != 1 && c != -1) {
        note = "coefficient out of range in D[" + std::to_string(row.m) +
               "," + std::to_string(row.i) + "]";
        return false;
      }
  return true;
}

bool table2_reproduction(std::string& note) {
  int blocks[][3] = {{0, 1, 8}, {0, 1, 9}, {0, 2, 10}};
  for (auto& blk : blocks) {
    CheckReport r = check_table2(blk[0], blk[1], blk[2]);
    if (!r.passed) {
      note = r.to_line();
      return false;
    }
  }
  return true;
}

bool lr_worked_example(std::string& note) {
  Partition la{9, 5, 3, 3, 1}, mu{4, 2, 1}, nu{7, 4, 3};
  if (lr_coefficient(la, mu, nu) != 3) {
    note = "coefficient != 3";
    return false;
  }
  auto tableaux = lr_tableaux(la, mu, nu);
  if (tableaux.size() != 3) {
    note = "expected exactly 3 tableaux, got " +
           std::to_string(tableaux.size());
    return false;
  }
  for (const Tableau& t : tableaux) {
    if (!t.is_semistandard() || Partition(t.type()) != nu ||
        !is_lattice_word(reverse_reading_word(t))) {
      note = "enumerated filling is not a valid LR tableau";
      return false;
    }
  }
  return true;
}

bool theo_s_range(std::string& note) {
  for (int m = 0; m <= 12; ++m) {
    CheckReport r = check_theo_s(m);
    if (!r.passed) {
      note = r.to_line();
      return false;
    }
  }
  // The three displayed right-hand sides, verbatim.
  struct Display {
    int m;
    const char* rhs;
  };
  const Display displays[] = {
      {3, "s[4] + s[2,2]"},
      {4, "s[4,2] + s[2,2,2]"},
      {5, "s[4,4] + s[4,2,2] + s[2,2,2,2]"},
  };
  for (const Display& d : displays) {
    SchurSum lhs;
    for (int i = 0; i <= d.m; ++i) {
      lhs += lr_product(two_column(i - 1, 0), two_column(d.m - i, 0));
      lhs += lr_product(two_column(i - 2, 2), two_column(d.m - i, 0));
      lhs -= lr_product(two_column(i - 1, 1), two_column(d.m - i - 1, 1));
    }
    if (lhs != parse_schur_sum(d.rhs)) {
      note = "displayed example mismatch at m = " + std::to_string(d.m);
      return false;
    }
  }
  return true;
}

bool mainconj_range(std::string& note) {
  for (int a = 0; a <= 4; ++a)
    for (int b = a; b <= 4; ++b)
      for (int r = 0; r <= 10; ++r) {
        CheckReport rep = check_mainconj(a, b, r);
        if (!rep.passed) {
          note = rep.to_line();
          return false;
        }
      }
  return true;
}

bool narayana_strong_qlc(std::string& note) {
  CheckReport strong = is_strongly_q_log_convex(narayana_poly_sequence(14));
  if (!strong.passed) {
    note = strong.to_line();
    return false;
  }
  auto poly = [](int c1, int c2, int c3) {
    return LaurentPoly::monomial(1, c1) + LaurentPoly::monomial(2, c2) +
           LaurentPoly::monomial(3, c3);
  };
  PolySequence counterexample = {poly(2, 1, 3), poly(1, 2, 2), poly(1, 2, 2),
                                 poly(2, 1, 3)};
  if (!is_q_log_convex(counterexample).passed) {
    note = "counterexample sequence should be weakly q-log-convex";
    return false;
  }
  CheckReport fail = is_strongly_q_log_convex(counterexample);
  if (fail.passed || fail.witness.is_null()) {
    note = "counterexample sequence should fail strongly with a witness";
    return false;
  }
  return true;
}

bool q_narayana_dual_formulas(std::string& note) {
  for (int n = 1; n <= 12; ++n)
    for (int k = 0; k < n; ++k) {
      LaurentPoly closed = exact_div(
          q_binomial(n, k) * q_binomial(n, k + 1) *
              LaurentPoly::monomial(static_cast<long long>(k) * k + k),
          q_int(n));
      if (closed != eval_geometric(two_column(k, 0), GeomVarSet::x(n))) {
        note = "mismatch at n=" + std::to_string(n) + " k=" +
               std::to_string(k);
        return false;
      }
    }
  return true;
}

bool strong_q_log_concavity(std::string& note) {
  for (int n = 1; n <= 10; ++n) {
    CheckReport r = check_qn_concave_fixed_n(n, 10);
    if (!r.passed) {
      note = r.to_line();
      return false;
    }
  }
  for (int k = 1; k <= 4; ++k) {
    CheckReport r = check_qn_concave_fixed_k(k, 10);
    if (!r.passed) {
      note = r.to_line();
      return false;
    }
  }
  for (int m = 1; m <= 8; ++m)
    for (int n = 1; n <= m; ++n)
      for (int k = 1; k <= 5; ++k) {
        CheckReport r = check_sect6_identities(m, n, k);
        if (!r.passed) {
          note = r.to_line();
          return false;
        }
      }
  return true;
}

bool sect5_pipeline(std::string& note) {
  for (int n = 1; n <= 10; ++n)
    for (int r = 0; r < 2 * n; ++r) {
      CheckReport rep = check_lem1(n, r);
      if (!rep.passed) {
        note = rep.to_line();
        return false;
      }
    }
  for (int n = 1; n <= 12; ++n) {
    for (int r = 0; r <= 2 * n; ++r) {
      CheckReport rep = check_alpha_threshold(n, r);
      if (!rep.passed) {
        note = rep.to_line();
        return false;
      }
    }
    CheckReport sums = check_alpha_sum(n);
    if (!sums.passed) {
      note = sums.to_line();
      return false;
    }
  }

  std::mt19937 rng(20260810);
  auto rational = [&rng](int lo, int hi, int max_den) {
    int den = std::uniform_int_distribution<int>(1, max_den)(rng);
    int num = std::uniform_int_distribution<int>(lo, hi)(rng);
    return Rational(num, den);
  };
  for (int trial = 0; trial < 100; ++trial) {
    RealSequence a;
    Rational value = rational(1, 6, 3);
    Rational ratio = rational(1, 4, 3);
    a.push_back(value);
    for (int k = 1; k < 12; ++k) {
      value *= ratio;
      a.push_back(value);
      ratio += rational(0, 3, 4);
    }
    CheckReport rep = check_transform_preserves(a, 12);
    if (!rep.passed) {
      note = "randomized case " + std::to_string(trial) + ": " + rep.to_line();
      return false;
    }
  }

  RealSequence alternating;
  for (int k = 0; k < 12; ++k) alternating.push_back(k % 2 == 0 ? 1 : -1);
  CheckReport refused = check_transform_preserves(alternating, 12);
  if (refused.passed) {
    note = "alternating input should be refused";
    return false;
  }
  RealSequence b = narayana_transform(alternating, 12);
  bool convex = true;
  for (int n = 1; n + 1 < 12; ++n)
    if (b[n + 1] * b[n - 1] < b[n] * b[n]) convex = false;
  if (convex) {
    note = "alternating input should break log-convexity of the transform";
    return false;
  }
  return true;
}

bool oracle_suites(std::string& note) {
  // LR products against brute-force SSYT weight sums at 6 variables.
  const int vars = 6;
  std::map<Partition, LaurentPoly, DecLexLess> cache;
  auto weight = [&](const Partition& la) {
    auto it = cache.find(la);
    if (it == cache.end())
      it = cache
               .emplace(la,
                        ssyt_weight_sum(SkewShape(la, Partition{}), vars))
               .first;
    return it->second;
  };
  for (long long sm = 0; sm <= 10; ++sm)
    for (long long sn = sm; sm + sn <= 10; ++sn)
      for (const Partition& mu : all_partitions(sm))
        for (const Partition& nu : all_partitions(sn)) {
          LaurentPoly direct = weight(mu) * weight(nu);
          LaurentPoly expanded;
          for (const auto& [la, c] :
               lr_product(SchurSum::basis(mu), SchurSum::basis(nu)).terms())
            expanded += LaurentPoly(c) * weight(la);
          if (direct != expanded) {
            note = "LR oracle mismatch for " + mu.to_string() + " * " +
                   nu.to_string();
            return false;
          }
        }

  for (long long size = 0; size <= 8; ++size)
    for (const Partition& la : all_partitions(size))
      for (int n = 0; n <= 5; ++n)
        if (ps(la, n) != ssyt_weight_sum(SkewShape(la, Partition{}), n)) {
          note = "hook-content mismatch for " + la.to_string() + " at n=" +
                 std::to_string(n);
          return false;
        }

  for (int n = 1; n <= 10; ++n)
    for (int k = 0; k < n; ++k)
      if (narayana_num(n, k) != dyck_peak_oracle(n, k)) {
        note = "narayana mismatch at n=" + std::to_string(n) + " k=" +
               std::to_string(k);
        return false;
      }
  return true;
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"table-1-reproduction", 10.0, table1_reproduction},
      {"table-2-reproduction", 30.0, table2_reproduction},
      {"lr-worked-example", 1.0, lr_worked_example},
      {"theo-s-identity", 60.0, theo_s_range},
      {"mainconj-positivity", 300.0, mainconj_range},
      {"narayana-strong-q-log-convexity", 10.0, narayana_strong_qlc},
      {"q-narayana-dual-formulas", 10.0, q_narayana_dual_formulas},
      {"strong-q-log-concavity", 120.0, strong_q_log_concavity},
      {"sect5-pipeline", 60.0, sect5_pipeline},
      {"oracle-suites", 300.0, oracle_suites},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && elapsed > c.budget_seconds) {
      ok = false;
      note = "exceeded time budget";
    }
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << "  " << c.name << "  (" << std::fixed
         << std::setprecision(2) << elapsed << "s, budget "
         << c.budget_seconds << "s)";
    if (!ok && !note.empty()) line << "  -- " << note;
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
  }
  return failures;
}
