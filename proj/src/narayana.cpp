#include "schurq/narayana.hpp"

#include <stdexcept>

#include "schurq/specialize.hpp"

namespace schurq {

Int catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan index must be nonnegative");
  Int b = binomial(2LL * n, n);
  return b / (n + 1);
}

Int narayana_num(int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("narayana_num needs n >= 1, k >= 0");
  if (k >= n) return 0;
  Int prod = binomial(n, k) * binomial(n, k + 1);
  return prod / n;
}

namespace {

void dyck_walk(int steps_left, int height, bool last_was_up, int peaks,
               int want_peaks, Int& count) {
  if (peaks > want_peaks) return;
  if (steps_left == 0) {
    if (height == 0 && peaks == want_peaks) ++count;
    return;
  }
  if (height + steps_left < 0 || height > steps_left) return;
  dyck_walk(steps_left - 1, height + 1, true, peaks, want_peaks, count);
  if (height > 0)
    dyck_walk(steps_left - 1, height - 1, false, peaks + (last_was_up ? 1 : 0),
              want_peaks, count);
}

}  // namespace

Int dyck_peak_oracle(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("negative oracle index");
  if (n > 14)
    throw std::invalid_argument(
        "dyck_peak_oracle enumerates all paths and is limited to n <= 14");
  if (n == 0) return 0;  // the empty path has no peaks
  Int count = 0;
  dyck_walk(2 * n, 0, false, 0, k + 1, count);
  return count;
}

LaurentPoly narayana_poly(int n) {
  if (n < 0) throw std::invalid_argument("negative index");
  if (n == 0) return LaurentPoly(1);
  LaurentPoly p;
  for (int k = 0; k < n; ++k)
    p += LaurentPoly::monomial(k, narayana_num(n, k));
  return p;
}

PolySequence narayana_poly_sequence(int count) {
  PolySequence seq;
  for (int n = 0; n <= count; ++n) seq.push_back(narayana_poly(n));
  return seq;
}

LaurentPoly q_narayana(int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("q_narayana needs n >= 1, k >= 0");
  LaurentPoly num = q_binomial(n, k) * q_binomial(n, k + 1) *
                    LaurentPoly::monomial(static_cast<long long>(k) * k + k);
  LaurentPoly closed = exact_div(num, q_int(n));
  LaurentPoly schur = eval_geometric(two_column(k, 0), GeomVarSet::x(n));
  if (closed != schur)
    throw identity_error("q-Narayana closed form disagrees with the Schur specialization");
  return closed;
}

RealSequence narayana_transform(const RealSequence& a, int count) {
  RealSequence b;
  b.reserve(count);
  for (int n = 0; n < count; ++n) {
    Rational sum = 0;
    if (n == 0) {
      if (!a.empty()) sum = a[0];  // N_0(q) = 1 contributes a_0
    } else {
      for (int k = 0; k <= n && k < static_cast<int>(a.size()); ++k)
        sum += Rational(narayana_num(n, k)) * a[k];
    }
    b.push_back(sum);
  }
  return b;
}

}  // namespace schurq
