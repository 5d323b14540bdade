#include "baxter/bigint.hpp"

#include <algorithm>

#include "baxter/errors.hpp"

namespace baxter {

BigInt factorial(long long n) {
  if (n < 0) throw contract_error("factorial: negative argument");
  BigInt r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step: r is C(n-k+i, i)
  }
  return r;
}

BigInt pow2(long long e) {
  if (e < 0) throw contract_error("pow2: negative exponent");
  return BigInt(1) << e;
}

BigInt exact_div(const BigInt& num, const BigInt& den, const std::string& context) {
  if (den == 0 || num % den != 0)
    throw contract_error(context + ": non-exact division " + num.str() + "/" + den.str());
  return num / den;
}

}  // namespace baxter
