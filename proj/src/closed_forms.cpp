#include "baxter/closed_forms.hpp"

#include <array>
#include <string>

#include "baxter/errors.hpp"
#include "baxter/walks.hpp"

namespace baxter {

DerivedParams derived_params(const ParameterProfile& profile) {
  return {profile.n + profile.p - profile.k, profile.n - profile.k - profile.r,
          profile.k + profile.r};
}

namespace {

BigInt det3(const std::array<std::array<BigInt, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

BigInt a_multi(const ParameterProfile& profile) {
  if (!profile_feasible(profile)) return 0;
  auto [q, s, t] = derived_params(profile);
  BigInt N = profile.n, K = profile.k, Q = q, S = s, T = t;

  std::array<std::array<BigInt, 3>, 3> m = {{
      {Q * (Q + 1), Q * (Q - 1), S * (S - 1)},
      {K * (Q + 1), (K + 1) * Q, S * (T + 1)},
      {K * (K - 1), K * (K + 1), T * (T + 1)},
  }};

  BigInt num = binomial(profile.p + profile.r, profile.r) *
               binomial(profile.n + profile.p - 1, profile.k) *
               binomial(profile.n + profile.p - 1, profile.k) *
               binomial(profile.n, t) * det3(m);
  BigInt den = N * Q * Q * (Q + 1) * (K + 1) * (T + 1);
  return exact_div(num, den, "a_multi(" + to_string(profile) + ")");
}

BigInt b_fpf(int n) {
  if (n < 1) throw contract_error("b_fpf: n must be >= 1");
  BigInt num = 3 * pow2(n - 1) * binomial(2 * n, n);
  return exact_div(num, BigInt(n + 1) * (n + 2), "b_fpf(" + std::to_string(n) + ")");
}

BigInt catalan(int n) {
  if (n < 0) throw contract_error("catalan: n must be >= 0");
  return exact_div(binomial(2 * n, n), n + 1, "catalan(" + std::to_string(n) + ")");
}

BigInt u_count(int n) {
  if (n < 1) throw contract_error("u_count: n must be >= 1");
  return pow2(n - 1) * catalan(n);
}

BigInt s_count(int n) {
  if (n < 1) throw contract_error("s_count: n must be >= 1");
  if (n == 1) return 0;
  BigInt num = pow2(n) * factorial(2 * n - 1);
  return exact_div(num, factorial(n - 2) * factorial(n + 2),
                   "s_count(" + std::to_string(n) + ")");
}

BigInt disjoint_pair_count(int n, int start_gap, int end_gap) {
  if (n < 1) throw contract_error("disjoint_pair_count: n must be >= 1");
  if (end_gap != 1) throw contract_error("disjoint_pair_count: only end_gap = 1 is supported");
  if (start_gap != 1 && start_gap != 2)
    throw contract_error("disjoint_pair_count: start_gap must be 1 or 2");

  BigInt closed;
  if (start_gap == 1) {
    closed = catalan(n);
  } else if (n == 1) {
    closed = 0;
  } else {
    closed = exact_div(4 * factorial(2 * n - 1), factorial(n - 2) * factorial(n + 2),
                       "disjoint_pair_count");
  }

  // cross-check: sum of 2x2 determinants over the possible end points
  LatticePoint s1{0, 0}, s2{start_gap, -start_gap};
  BigInt lgv = 0;
  for (int a = 0; a < n; ++a) {
    LatticePoint e1{a, n - 1 - a}, e2{a + 1, n - 2 - a};
    lgv += walk_count(s1, e1) * walk_count(s2, e2) - walk_count(s1, e2) * walk_count(s2, e1);
  }
  if (lgv != closed)
    throw contract_error("disjoint_pair_count: closed form disagrees with determinant sum");
  return closed;
}

}  // namespace baxter
