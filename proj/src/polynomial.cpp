#include "hdpart/polynomial.hpp"

#include <algorithm>

namespace hdpart {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::variable() { return Polynomial({Rational(0), Rational(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

bool Polynomial::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (coeffs_.empty() || o.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

std::string to_string(const Polynomial& p, const std::string& var) {
  if (p.degree() < 0) return "0";
  std::string out;
  for (long k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(static_cast<std::size_t>(k));
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Rational a = abs(c);
    if (a != 1 || k == 0) out += to_string(a);
    if (k > 0) out += (a != 1 ? "*" : "") + var + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return out;
}

Polynomial binomial_polynomial(unsigned long k) {
  Polynomial p = Polynomial::constant(1);
  for (unsigned long i = 0; i < k; ++i) p *= Polynomial({Rational(-static_cast<long>(i)), Rational(1)});
  p *= Rational(1) / Rational(factorial(k));
  return p;
}

Polynomial hermite(unsigned long n) {
  Polynomial prev = Polynomial::constant(1);
  if (n == 0) return prev;
  Polynomial cur({Rational(0), Rational(2)});
  for (unsigned long k = 1; k < n; ++k) {
    Polynomial next = cur * Polynomial({Rational(0), Rational(2)}) - prev * Rational(static_cast<long>(2 * k));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace hdpart
