#include "hdpart/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hdpart {

namespace {

bool n_indexed(TriangleKind k) {
  switch (k) {
    case TriangleKind::A:
    case TriangleKind::Abox2:
    case TriangleKind::F:
    case TriangleKind::Fbox2:
    case TriangleKind::Fhat:
      return true;
    default:
      return false;
  }
}

}  // namespace

BivariateSeries::BivariateSeries(long q_order, long t_order)
    : M_(q_order), R_(t_order), c_(static_cast<std::size_t>((q_order + 1) * (t_order + 1))) {
  if (q_order < 0 || t_order < 0) throw std::invalid_argument("BivariateSeries: negative truncation order");
}

const Rational& BivariateSeries::coeff(long m, long r) const {
  if (m < 0 || m > M_ || r < 0 || r > R_) throw std::out_of_range("BivariateSeries: index beyond truncation");
  return c_[static_cast<std::size_t>(m * (R_ + 1) + r)];
}

void BivariateSeries::set(long m, long r, Rational value) {
  if (m < 0 || m > M_ || r < 0 || r > R_) throw std::out_of_range("BivariateSeries: index beyond truncation");
  value.canonicalize();
  c_[static_cast<std::size_t>(m * (R_ + 1) + r)] = std::move(value);
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  BivariateSeries out(std::min(a.M_, b.M_), std::min(a.R_, b.R_));
  for (long m = 0; m <= out.M_; ++m)
    for (long r = 0; r <= out.R_; ++r) {
      Rational sum = 0;
      for (long p = 0; p <= m; ++p)
        for (long s = 0; s <= r; ++s) {
          const Rational& x = a.coeff(p, s);
          if (x == 0) continue;
          sum += x * b.coeff(m - p, r - s);
        }
      out.set(m, r, std::move(sum));
    }
  return out;
}

nlohmann::json BivariateSeries::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (long m = 0; m <= M_; ++m)
    for (long r = 0; r <= R_; ++r) j[std::to_string(m) + "," + std::to_string(r)] = hdpart::to_string(coeff(m, r));
  return j;
}

BivariateSeries series_from_triangle(const Triangle& t, long q_order, long t_order) {
  BivariateSeries s(q_order, t_order);
  const bool by_n = n_indexed(t.kind());
  for (long m = 0; m <= q_order; ++m)
    for (long r = 0; r <= t_order; ++r) {
      Integer v = by_n ? t.at(m + r + 1, r) : t.at(m, r);
      s.set(m, r, Rational(v, factorial(static_cast<unsigned long>(r))));
    }
  return s;
}

std::string SeriesReport::summary() const {
  std::ostringstream out;
  out << checked << " coefficients checked, " << mismatches.size() << " mismatched";
  for (const auto& x : mismatches)
    out << "\n  q^" << x.m << " t^" << x.r << ": " << to_string(x.lhs) << " vs " << to_string(x.rhs);
  return out.str();
}

SeriesReport compare(const BivariateSeries& lhs, const BivariateSeries& rhs) {
  SeriesReport report;
  long M = std::min(lhs.q_order(), rhs.q_order());
  long R = std::min(lhs.t_order(), rhs.t_order());
  for (long m = 0; m <= M; ++m)
    for (long r = 0; r <= R; ++r) {
      ++report.checked;
      if (lhs.coeff(m, r) != rhs.coeff(m, r)) report.mismatches.push_back({m, r, lhs.coeff(m, r), rhs.coeff(m, r)});
    }
  return report;
}

}  // namespace hdpart
