#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hdpart/integer.hpp"
#include "hdpart/triangle.hpp"

namespace hdpart {

// Truncated series sum c_{m,r} q^m t^r with m <= M, r <= R and exact rational coefficients.
class BivariateSeries {
 public:
  BivariateSeries(long q_order, long t_order);

  long q_order() const { return M_; }
  long t_order() const { return R_; }
  const Rational& coeff(long m, long r) const;
  void set(long m, long r, Rational value);

  // Product truncated to the smaller orders of the two factors.
  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

  // JSON object mapping "m,r" to the coefficient as a rational string.
  nlohmann::json to_json() const;

 private:
  long M_;
  long R_;
  std::vector<Rational> c_;
};

// Generating series of a triangle with the t^r/r! normalization. Rows of n-indexed
// kinds (A, Abox2, F, Fbox2, Fhat) are read as x_{m+r+1,r}; the others as x_{m,r}.
BivariateSeries series_from_triangle(const Triangle& t, long q_order, long t_order);

struct SeriesMismatch {
  long m;
  long r;
  Rational lhs;
  Rational rhs;
};

struct SeriesReport {
  std::size_t checked = 0;
  std::vector<SeriesMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
  std::string summary() const;
};

SeriesReport compare(const BivariateSeries& lhs, const BivariateSeries& rhs);

}  // namespace hdpart
