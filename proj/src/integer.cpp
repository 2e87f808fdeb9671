#include "hdpart/integer.hpp"

#include <stdexcept>

namespace hdpart {

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer binomial(const Integer& n, unsigned long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative upper index");
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer double_factorial(long n) {
  if (n < -1) throw std::invalid_argument("double_factorial: argument below -1");
  if (n <= 0) return 1;
  Integer out;
  mpz_2fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer power(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

std::string to_string(const Integer& v) { return v.get_str(10); }

std::string to_string(const Rational& v) {
  Rational c = v;
  c.canonicalize();
  return c.get_str(10);
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  Integer out;
  if (s.empty() || out.set_str(s, 10) != 0)
    throw std::invalid_argument("not an integer: '" + s + "'");
  return out;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational out;
  if (s.empty() || out.set_str(s, 10) != 0)
    throw std::invalid_argument("not a rational: '" + s + "'");
  out.canonicalize();
  return out;
}

}  // namespace hdpart
