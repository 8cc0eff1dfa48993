#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mzv {

// Always canonical after construction through the helpers below.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

Integer factorial(unsigned n);
Integer binomial(long n, long k); // 0 outside 0 <= k <= n
Rational pow(const Rational& base, long exponent);

} // namespace mzv
