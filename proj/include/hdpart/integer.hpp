#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hdpart {

using Integer = mpz_class;
using Rational = mpq_class;

Integer binomial(long n, long k);
Integer binomial(const Integer& n, unsigned long k);
Integer factorial(unsigned long n);
// n!! with the conventions 0!! = (-1)!! = 1.
Integer double_factorial(long n);
Integer power(const Integer& base, unsigned long exp);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);
Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);

}  // namespace hdpart
