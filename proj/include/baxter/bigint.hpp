#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace baxter {

// All counting is done in exact arbitrary-precision integers.
using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(long long n);                 // n >= 0
BigInt binomial(long long n, long long k);     // 0 outside 0 <= k <= n
BigInt pow2(long long e);                      // e >= 0

// Quotient num/den, with the divisibility asserted instead of assumed.
// Signals a contract violation when den == 0 or den does not divide num.
BigInt exact_div(const BigInt& num, const BigInt& den, const std::string& context);

}  // namespace baxter
