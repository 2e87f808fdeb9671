#pragma once

#include <string>
#include <vector>

#include "hdpart/integer.hpp"

namespace hdpart {

// Univariate polynomial with exact rational coefficients, lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial variable();

  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_integral() const;

  Rational operator()(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::string to_string(const Polynomial& p, const std::string& var = "r");

// binom(r, k) as a polynomial in r.
Polynomial binomial_polynomial(unsigned long k);

// Physicists' Hermite polynomial H_n.
Polynomial hermite(unsigned long n);

}  // namespace hdpart
