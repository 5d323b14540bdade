#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "baxter/closed_forms.hpp"
#include "baxter/errors.hpp"
#include "baxter/walks.hpp"
#include "doctest.h"

using namespace baxter;

TEST_CASE("bigint helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(pow2(0) == 1);
  CHECK(pow2(10) == 1024);
  CHECK(exact_div(BigInt(12), BigInt(4), "test") == 3);
  CHECK_THROWS_AS(exact_div(BigInt(12), BigInt(5), "test"), contract_error);
  CHECK_THROWS_AS(exact_div(BigInt(1), BigInt(0), "test"), contract_error);
}

TEST_CASE("derived parameters") {
  DerivedParams d = derived_params({1, 0, 1, 1});
  CHECK(d.q == 2);
  CHECK(d.s == 0);
  CHECK(d.t == 1);
}

TEST_CASE("profile counting formula on frozen examples") {
  CHECK(a_multi({1, 0, 0, 1}) == 1);
  CHECK(a_multi({1, 0, 1, 1}) == 2);
  CHECK(a_multi({1, 1, 1, 0}) == 1);
  CHECK(a_multi({1, 0, 0, 0}) == 0);
  CHECK(a_multi({1, 0, 2, 1}) == 3);
  CHECK(a_multi({1, 1, 2, 0}) == 3);
  CHECK(a_multi({2, 0, 0, 2}) == 1);
  CHECK(a_multi({2, 0, 0, 1}) == 1);
  CHECK(a_multi({2, 1, 0, 1}) == 1);
  // infeasible profiles count zero
  CHECK(a_multi({1, 2, 0, 0}) == 0);
  CHECK(a_multi({0, 0, 5, 0}) == 0);
  CHECK(a_multi({1, 0, 0, 2}) == 0);
  CHECK(a_multi({1, 0, -1, 0}) == 0);
}

TEST_CASE("formula agrees with tuple enumeration on small profiles") {
  for (int m = 2; m <= 8; ++m)
    for (int n = 1; 2 * n <= m; ++n)
      for (int k = 0; k <= n; ++k)
        for (int r = 0; k + r <= n; ++r) {
          ParameterProfile q{n, k, m - 2 * n, r};
          if (!profile_feasible(q)) continue;
          CAPTURE(to_string(q));
          CHECK(a_multi(q) == theorem1_tuple_count(q));
        }
}

TEST_CASE("fixed-point-free counts") {
  const std::vector<BigInt> expected = {1, 3, 12, 56, 288, 1584};
  for (int n = 1; n <= 6; ++n) CHECK(b_fpf(n) == expected[n - 1]);
  CHECK_THROWS_AS(b_fpf(0), contract_error);
}

TEST_CASE("catalan and path-pair counts") {
  const std::vector<BigInt> cat = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 0; n <= 6; ++n) CHECK(catalan(n) == cat[n]);
  CHECK_THROWS_AS(catalan(-1), contract_error);

  CHECK(u_count(1) == 1);
  CHECK(u_count(2) == 4);
  CHECK(u_count(3) == 20);
  CHECK_THROWS_AS(u_count(0), contract_error);

  CHECK(s_count(1) == 0);
  CHECK(s_count(2) == 1);
  CHECK(s_count(3) == 8);
  CHECK(s_count(4) == 56);
  CHECK_THROWS_AS(s_count(0), contract_error);
}

TEST_CASE("disjoint pair counts") {
  CHECK(disjoint_pair_count(2, 1, 1) == 2);
  CHECK(disjoint_pair_count(2, 2, 1) == 1);
  CHECK(disjoint_pair_count(1, 2, 1) == 0);
  CHECK(disjoint_pair_count(1, 1, 1) == 1);
  CHECK(disjoint_pair_count(3, 1, 1) == catalan(3));
  CHECK(disjoint_pair_count(5, 1, 1) == catalan(5));
  CHECK_THROWS_AS(disjoint_pair_count(2, 1, 2), contract_error);
  CHECK_THROWS_AS(disjoint_pair_count(2, 3, 1), contract_error);
  CHECK_THROWS_AS(disjoint_pair_count(0, 1, 1), contract_error);
}

TEST_CASE("count identities at small sizes") {
  for (int n = 1; n <= 12; ++n) {
    CHECK(b_fpf(n) == u_count(n) - s_count(n));
    CHECK(u_count(n) == pow2(n - 1) * disjoint_pair_count(n, 1, 1));
    CHECK(2 * s_count(n) == pow2(n - 1) * disjoint_pair_count(n, 2, 1));
  }
}

TEST_CASE("formula sums to the fixed-point-free count") {
  for (int n = 1; n <= 10; ++n) {
    BigInt total = 0;
    for (int k = 0; k < n; ++k)
      for (int r = 0; k + r <= n; ++r) total += a_multi({n, k, 0, r});
    CHECK(total == b_fpf(n));
  }
}
