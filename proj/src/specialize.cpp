#include "schurq/specialize.hpp"

#include <stdexcept>

namespace schurq {

LaurentPoly ps(const Partition& lambda, int n) {
  if (n < 0) throw std::invalid_argument("ps order must be nonnegative");
  if (lambda.length() > n) return LaurentPoly{};
  // q^{sum (k-1) lambda_k} * prod [n + c(i,j)] / prod [h(i,j)]
  long long shift = 0;
  for (int k = 1; k <= lambda.length(); ++k)
    shift += static_cast<long long>(k - 1) * lambda.part(k);
  LaurentPoly num(1), den(1);
  Partition conj = conjugate(lambda);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) {
      num *= q_int(n + j - i);
      den *= q_int(lambda.part(i) + conj.part(j) - i - j + 1);
    }
  LaurentPoly quotient;
  try {
    quotient = exact_div(num, den);
  } catch (const identity_error&) {
    throw identity_error("hook-content division left a remainder");
  }
  return LaurentPoly::monomial(shift) * quotient;
}

Int ps1(const Partition& lambda, int n) {
  if (n < 0) throw std::invalid_argument("ps order must be nonnegative");
  if (lambda.length() > n) return 0;
  Int num = 1, den = 1;
  Partition conj = conjugate(lambda);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) {
      num *= n + j - i;
      den *= lambda.part(i) + conj.part(j) - i - j + 1;
    }
  if (num % den != 0)
    throw identity_error("hook-content product is not integral");
  return num / den;
}

LaurentPoly ps_sum(const SchurSum& f, int n) {
  LaurentPoly out;
  for (const auto& [la, c] : f.terms()) out += LaurentPoly(c) * ps(la, n);
  return out;
}

Int ps1_sum(const SchurSum& f, int n) {
  Int out = 0;
  for (const auto& [la, c] : f.terms()) out += c * ps1(la, n);
  return out;
}

LaurentPoly eval_geometric(const Partition& lambda, GeomVarSet vars) {
  if (vars.count < 0) throw std::invalid_argument("negative variable count");
  return LaurentPoly::monomial(vars.start * lambda.size()) *
         ps(lambda, vars.count);
}

LaurentPoly eval_geometric(const SchurSum& f, GeomVarSet vars) {
  LaurentPoly out;
  for (const auto& [la, c] : f.terms())
    out += LaurentPoly(c) * eval_geometric(la, vars);
  return out;
}

namespace {

nlohmann::json poly_pair(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  return {{"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}};
}

}  // namespace

CheckReport ps_recurrence_check(int k, int n) {
  nlohmann::json params{{"k", k}, {"n", n}};
  if (k < 1 || n < 2)
    return make_fail("lemm-ps", params, {{"refused", "need k >= 1, n > 1"}});
  const LaurentPoly qn1 = LaurentPoly::monomial(n - 1);
  const LaurentPoly q2n1 = LaurentPoly::monomial(2 * (n - 1));

  auto ps_tc = [&](long long a, long long b, int order) {
    return ps_sum(two_column(a, b), order);
  };
  auto ps1_tc = [&](long long a, long long b, int order) {
    return ps1_sum(two_column(a, b), order);
  };

  // ps_n(s_{(2^k)}) = ps_{n-1}(s_{(2^k)}) + q^{n-1} ps_{n-1}(s_{(2^{k-1},1)})
  //                   + q^{2(n-1)} ps_{n-1}(s_{(2^{k-1})})
  LaurentPoly lhs1 = ps_tc(k, 0, n);
  LaurentPoly rhs1 = ps_tc(k, 0, n - 1) + qn1 * ps_tc(k - 1, 1, n - 1) +
                     q2n1 * ps_tc(k - 1, 0, n - 1);
  if (lhs1 != rhs1)
    return make_fail("lemm-ps", params,
                     {{"recurrence", 1}, {"sides", poly_pair(lhs1, rhs1)}});

  // ps_n(s_{(2^k,1)}) = ps_{n-1}(s_{(2^k,1)})
  //   + q^{n-1} ps_{n-1}(s_{(2^k)} + s_{(2^{k-1},1^2)})
  //   + q^{2(n-1)} ps_{n-1}(s_{(2^{k-1},1)})
  LaurentPoly lhs2 = ps_tc(k, 1, n);
  LaurentPoly rhs2 = ps_tc(k, 1, n - 1) +
                     qn1 * (ps_tc(k, 0, n - 1) + ps_tc(k - 1, 2, n - 1)) +
                     q2n1 * ps_tc(k - 1, 1, n - 1);
  if (lhs2 != rhs2)
    return make_fail("lemm-ps", params,
                     {{"recurrence", 2}, {"sides", poly_pair(lhs2, rhs2)}});

  // The two q = 1 companions.
  Int lhs3 = ps1_tc(k, 0, n);
  Int rhs3 = ps1_tc(k, 0, n - 1) + ps1_tc(k - 1, 1, n - 1) +
             ps1_tc(k - 1, 0, n - 1);
  if (lhs3 != rhs3)
    return make_fail("lemm-ps", params,
                     {{"recurrence", 3},
                      {"lhs", lhs3.str()},
                      {"rhs", rhs3.str()}});

  Int lhs4 = ps1_tc(k, 1, n);
  Int rhs4 = ps1_tc(k, 1, n - 1) + ps1_tc(k, 0, n - 1) +
             ps1_tc(k - 1, 2, n - 1) + ps1_tc(k - 1, 1, n - 1);
  if (lhs4 != rhs4)
    return make_fail("lemm-ps", params,
                     {{"recurrence", 4},
                      {"lhs", lhs4.str()},
                      {"rhs", rhs4.str()}});
  return make_pass("lemm-ps", params);
}

CheckReport convolution_check(int m, int n, int k) {
  nlohmann::json params{{"m", m}, {"n", n}, {"k", k}};
  if (!(m >= n && n >= 1 && k >= 0))
    return make_fail("lemm-general", params,
                     {{"refused", "need m >= n >= 1, k >= 0"}});
  Int lhs = ps1_sum(two_column(k, 0), m);
  Int rhs = 0;
  for (int b = 0; b <= m - n; ++b)
    for (int a = 0; a <= b; ++a)
      rhs += ps1_sum(two_column(k - b, b - a), n) *
             ps1_sum(two_column(a, b - a), m - n);
  if (lhs != rhs)
    return make_fail("lemm-general", params,
                     {{"lhs", lhs.str()}, {"rhs", rhs.str()}});
  return make_pass("lemm-general", params);
}

}  // namespace schurq
