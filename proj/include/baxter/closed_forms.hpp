#pragma once

#include "baxter/bigint.hpp"
#include "baxter/perm.hpp"

namespace baxter {

// Quantities derived from a parameter profile that the multivariate count is
// phrased in.  q + k = n + p and s + t = n always hold.
struct DerivedParams {
  int q;  // n + p - k
  int s;  // n - k - r
  int t;  // k + r
};

DerivedParams derived_params(const ParameterProfile& profile);

// Number of involutive Baxter permutations with the given profile.  Returns 0
// for infeasible profiles; exact division by construction, a remainder throws
// contract_error.
BigInt a_multi(const ParameterProfile& profile);

// Number of fixed-point-free involutive Baxter permutations of size 2n:
// 3 * 2^(n-1) * C(2n, n) / ((n+1)(n+2)).
BigInt b_fpf(int n);

BigInt catalan(int n);

// |U_n| = 2^(n-1) * Catalan(n): triples whose left and middle diagonal paths
// stay disjoint and finish two apart.
BigInt u_count(int n);

// |S_n| = 2^n * (2n-1)! / ((n-2)! (n+2)!) for n >= 2, and 0 for n = 1.
BigInt s_count(int n);

// Pairs of disjoint diagonal paths of n-1 steps whose starts are 2*start_gap
// apart and ends 2*end_gap apart (only end_gap = 1 is supported).  Computed by
// closed form and cross-checked against a 2x2 determinant sum; a mismatch
// throws contract_error.
BigInt disjoint_pair_count(int n, int start_gap, int end_gap);

}  // namespace baxter
