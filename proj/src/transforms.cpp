#include "hdpart/transforms.hpp"

#include <algorithm>

#include "hdpart/errors.hpp"

namespace hdpart {

void PartitionTable::set(long d, long n, Integer value) { values_[{d, n}] = std::move(value); }

bool PartitionTable::has(long d, long n) const { return d == 0 || values_.count({d, n}) > 0; }

Integer PartitionTable::at(long d, long n) const {
  if (d == 0) return 1;
  auto it = values_.find({d, n});
  if (it == values_.end())
    throw DataError("p_" + std::to_string(d) + "(" + std::to_string(n) + ") is not available");
  return it->second;
}

long PartitionTable::max_n() const {
  long out = 0;
  for (const auto& [key, v] : values_) out = std::max(out, key.second);
  return out;
}

long PartitionTable::max_d() const {
  long out = 0;
  for (const auto& [key, v] : values_) out = std::max(out, key.first);
  return out;
}

namespace {

void require_kind(const Triangle& t, std::initializer_list<TriangleKind> kinds, const char* op) {
  for (TriangleKind k : kinds)
    if (t.kind() == k) return;
  throw std::invalid_argument(std::string(op) + ": unexpected triangle kind " + std::string(t.name()));
}

// x! / ((2y)!! (x-2y)!)
Integer pairing_coefficient(long x, long y) {
  return factorial(static_cast<unsigned long>(x)) /
         (double_factorial(2 * y) * factorial(static_cast<unsigned long>(x - 2 * y)));
}

}  // namespace

Integer pd_from_A(const Triangle& A, long n, const Integer& d) {
  require_kind(A, {TriangleKind::A, TriangleKind::Abox2}, "pd_from_A");
  if (d < 0) throw std::invalid_argument("pd_from_A: negative dimension");
  if (!A.has_row(n)) throw DataError("pd_from_A: row " + std::to_string(n) + " of A is not available");
  Integer d1 = d + 1;
  long top = n - 1;
  if (d1 < top) top = d1.get_si();
  Integer sum = 0;
  for (long r = 0; r <= top; ++r) sum += binomial(d1, static_cast<unsigned long>(r)) * A.at(n, r);
  return sum;
}

Triangle A_from_pd(const PartitionTable& p, long n_max, long r_max) {
  Triangle A(TriangleKind::A);
  A.reserve_rows(n_max);
  for (long n = 1; n <= n_max; ++n) {
    A.set(n, 0, n == 1 ? 1 : 0);
    long top = n - 1;
    if (r_max >= 0) top = std::min(top, r_max);
    for (long r = 1; r <= top; ++r) {
      Integer sum = 0;
      for (long d = 0; d <= r - 1; ++d) {
        Integer term = binomial(r, d + 1) * p.at(d, n);
        if ((d + r + 1) % 2) sum -= term;
        else sum += term;
      }
      A.set(n, r, std::move(sum));
    }
  }
  return A;
}

PartitionTable pd_table_from_A(const Triangle& A, long n_max, long d_max) {
  PartitionTable p;
  for (long n = 1; n <= n_max; ++n)
    for (long d = 1; d <= d_max; ++d) p.set(d, n, pd_from_A(A, n, d));
  return p;
}

Integer C_to_A(const Triangle& C, long m, long r) {
  require_kind(C, {TriangleKind::C, TriangleKind::Cbox2, TriangleKind::CD}, "C_to_A");
  if (m < 0 || r < 0) return 0;
  Integer sum = 0;
  for (long x = 0; x <= std::min(r, 2 * m); ++x) sum += binomial(r, x) * C.at(m, x);
  return sum;
}

Triangle A_from_C(const Triangle& C, long n_max) {
  Triangle A(C.kind() == TriangleKind::Cbox2 ? TriangleKind::Abox2 : TriangleKind::A);
  A.reserve_rows(n_max);
  for (long n = 1; n <= n_max; ++n) {
    for (long r = 0; r <= n - 1; ++r) {
      long m = n - r - 1;
      if (C.row_complete(m)) A.set(n, r, C_to_A(C, m, r));
    }
  }
  return A;
}

Triangle A_to_C(const Triangle& A, long m_max) {
  require_kind(A, {TriangleKind::A, TriangleKind::Abox2}, "A_to_C");
  Triangle C(A.kind() == TriangleKind::Abox2 ? TriangleKind::Cbox2 : TriangleKind::C);
  C.reserve_rows(m_max);
  for (long m = 0; m <= m_max; ++m) {
    std::vector<Integer> row;
    for (long r = 0;; ++r) {
      long n = m + r + 1;
      if (r > 2 * m && !A.known(n, r)) break;
      Integer c = A.at(n, r);
      for (long x = 0; x < r; ++x) c -= binomial(r, x) * row[static_cast<std::size_t>(x)];
      C.set(m, r, c);
      row.push_back(std::move(c));
    }
  }
  return C;
}

Integer D_to_C(const Triangle& D, long m, long x) {
  require_kind(D, {TriangleKind::D}, "D_to_C");
  if (m < 0 || x < 0) return 0;
  Integer sum = 0;
  for (long y = std::max(0L, 2 * x - 3 * m); y <= std::min(m, x / 2); ++y)
    sum += pairing_coefficient(x, y) * D.at(m - y, x - 2 * y);
  return sum;
}

Triangle C_from_D(const Triangle& D, long m_max) {
  Triangle C(TriangleKind::C);
  C.reserve_rows(m_max);
  for (long m = 0; m <= m_max; ++m)
    for (long x = 0; x <= 2 * m; ++x) C.set(m, x, D_to_C(D, m, x));
  return C;
}

Triangle C_to_D(const Triangle& C, long m_max) {
  require_kind(C, {TriangleKind::C}, "C_to_D");
  Triangle D(TriangleKind::D);
  D.reserve_rows(m_max);
  for (long m = 0; m <= m_max; ++m) {
    for (long x = 0; x <= 2 * m; ++x) {
      Integer d = C.at(m, x);
      for (long y = 1; y <= std::min(m, x / 2); ++y) d -= pairing_coefficient(x, y) * D.at(m - y, x - 2 * y);
      D.set(m, x, std::move(d));
    }
  }
  return D;
}

Integer F_to_A(const Triangle& F, long m, long r) {
  require_kind(F, {TriangleKind::F, TriangleKind::Fbox2, TriangleKind::Fhat}, "F_to_A");
  if (m < 0 || r < 0) return 0;
  Integer sum = 0;
  for (long x = 0; x <= r; ++x) {
    long pairs = (r - x) * (r - x - 1) / 2;
    for (long p = 0; p <= m; ++p) {
      Integer f = F.at(p + x + 1, x);
      if (f == 0) continue;
      sum += binomial(r, x) * binomial(pairs, m - p) * f;
    }
  }
  return sum;
}

Triangle A_from_F(const Triangle& F, long n_max) {
  Triangle A(F.kind() == TriangleKind::Fbox2 ? TriangleKind::Abox2 : TriangleKind::A);
  A.reserve_rows(n_max);
  for (long n = 1; n <= n_max; ++n) {
    for (long r = 0; r <= n - 1; ++r) {
      try {
        A.set(n, r, F_to_A(F, n - r - 1, r));
      } catch (const DataError&) {
      }
    }
  }
  return A;
}

Triangle A_to_F(const Triangle& A, long n_max) {
  require_kind(A, {TriangleKind::A, TriangleKind::Abox2}, "A_to_F");
  Triangle F(A.kind() == TriangleKind::Abox2 ? TriangleKind::Fbox2 : TriangleKind::F);
  F.reserve_rows(n_max);
  for (long n = 1; n <= n_max; ++n) {
    for (long r = 0; r <= n - 1; ++r) {
      long m = n - r - 1;
      try {
        Integer f = A.at(n, r);
        for (long x = 0; x < r; ++x) {
          long pairs = (r - x) * (r - x - 1) / 2;
          for (long p = 0; p <= m; ++p) {
            Integer fx = F.at(p + x + 1, x);
            if (fx != 0) f -= binomial(r, x) * binomial(pairs, m - p) * fx;
          }
        }
        F.set(n, r, std::move(f));
      } catch (const DataError&) {
      }
    }
  }
  return F;
}

std::optional<Integer> closed_form_C(long m, long z) {
  if (m < 0 || z < 0 || z > 5) return std::nullopt;
  const Integer M = m;
  auto fac = [](long k) { return factorial(static_cast<unsigned long>(k)); };
  Rational v;
  switch (z) {
    case 0:
      return double_factorial(2 * m - 1);
    case 1:
      if (m < 1) return std::nullopt;
      v = Rational(Integer(M * fac(2 * m - 1)), double_factorial(2 * m - 2));
      break;
    case 2:
      if (m < 2) return std::nullopt;
      v = Rational(Integer(fac(2 * m - 2) * (3 * M * M - M - 1)), Integer(6 * double_factorial(2 * m - 4)));
      break;
    case 3:
      if (m < 2) return std::nullopt;
      v = Rational(Integer(fac(2 * m - 3) * (2 * power(M, 4) - 6 * power(M, 3) + 3 * M * M + 3 * M + 4)),
                   Integer(6 * double_factorial(2 * m - 4)));
      break;
    case 4:
      if (m < 3) return std::nullopt;
      v = Rational(
          Integer(fac(2 * m - 4) * (15 * power(M, 5) - 75 * power(M, 4) + 95 * power(M, 3) + 21 * M * M + 88 * M + 42)),
          Integer(180 * double_factorial(2 * m - 6)));
      break;
    case 5:
      if (m < 3) return std::nullopt;
      v = Rational(Integer(fac(2 * m - 5) * (258 - 167 * M - 80 * M * M + 111 * power(M, 3) - 174 * power(M, 4) +
                                             116 * power(M, 5) - 31 * power(M, 6) + 3 * power(M, 7))),
                   Integer(90 * double_factorial(2 * m - 6)));
      break;
  }
  v.canonicalize();
  if (v.get_den() != 1)
    throw IntegralityError("closed_form_C(" + std::to_string(m) + ", " + std::to_string(z) + ") is not integral");
  return Integer(v.get_num());
}

Triangle B_from_A(const Triangle& A) {
  require_kind(A, {TriangleKind::A}, "B_from_A");
  Triangle B(TriangleKind::B);
  B.reserve_rows(A.last_row());
  for (long n = 1; n <= A.last_row(); ++n)
    for (long r = 0; r <= n - 1; ++r)
      if (A.known(n, r) && A.known(n, r + 1)) B.set(n, r, A.at(n, r) + A.at(n, r + 1));
  return B;
}

Integer pd_from_B(const Triangle& B, long n, const Integer& d) {
  require_kind(B, {TriangleKind::B}, "pd_from_B");
  if (!B.has_row(n)) throw DataError("pd_from_B: row " + std::to_string(n) + " of B is not available");
  Integer sum = 1;
  for (long r = 1; r <= n - 1 && d >= r; ++r) sum += binomial(d, static_cast<unsigned long>(r)) * B.at(n, r);
  return sum;
}

Triangle hanna_T_from_B(const Triangle& B, long n_max) {
  require_kind(B, {TriangleKind::B}, "hanna_T_from_B");
  Triangle T(TriangleKind::T);
  T.reserve_rows(n_max);
  for (long m = 1; m <= n_max; ++m) {
    T.set(m, m, 1);
    for (long s = m - 1; s >= 1; --s) {
      Integer t = B.at(m, s);
      for (long x = s + 1; x <= m - 1; ++x) t -= T.at(m, x) * B.at(x, s - 1);
      T.set(m, s, std::move(t));
    }
  }
  return T;
}

IdentityReport hanna_check(const Triangle& T, const PartitionTable& p, long n_max, long d_max) {
  require_kind(T, {TriangleKind::T}, "hanna_check");
  const auto N = static_cast<std::size_t>(n_max);
  std::vector<std::vector<Integer>> base(N, std::vector<Integer>(N));
  for (long i = 1; i <= n_max; ++i)
    for (long j = 1; j <= i; ++j) base[i - 1][j - 1] = T.at(i, j);
  IdentityReport report;
  std::vector<std::vector<Integer>> power = base;
  for (long d = 1; d <= d_max; ++d) {
    if (d > 1) {
      std::vector<std::vector<Integer>> next(N, std::vector<Integer>(N));
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t k = 0; k <= i; ++k) {
          if (power[i][k] == 0) continue;
          for (std::size_t j = 0; j <= k; ++j) next[i][j] += power[i][k] * base[k][j];
        }
      power = std::move(next);
    }
    for (long n = 1; n <= n_max; ++n) {
      if (!p.has(d, n)) continue;
      Integer sum = 0;
      for (const auto& v : power[n - 1]) sum += v;
      ++report.checked;
      Integer expected = p.at(d, n);
      if (sum != expected)
        report.failures.push_back("row sum of T^" + std::to_string(d) + " at n=" + std::to_string(n) + " is " +
                                  to_string(sum) + ", p_d(n) is " + to_string(expected));
    }
  }
  return report;
}

Polynomial g_polynomial(const Triangle& C, long m) {
  require_kind(C, {TriangleKind::C}, "g_polynomial");
  Polynomial g;
  for (long x = 0; x <= 2 * m; ++x) {
    Integer c = C.at(m, x);
    if (c != 0) g += binomial_polynomial(static_cast<unsigned long>(x)) * Rational(c);
  }
  return g * Rational(double_factorial(2 * m));
}

Triangle alpha_from_C(const Triangle& C, long m_max) {
  Triangle alpha(TriangleKind::Alpha);
  alpha.reserve_rows(m_max);
  for (long m = 0; m <= m_max; ++m) {
    Polynomial g = g_polynomial(C, m);
    for (long z = 0; z <= 2 * m; ++z) {
      Rational c = g.coeff(static_cast<std::size_t>(2 * m - z));
      if (c.get_den() != 1)
        throw ConjectureViolation("alpha_{" + std::to_string(m) + "," + std::to_string(z) + "} = " + to_string(c) +
                                  " is not an integer");
      alpha.set(m, z, Integer(c.get_num()));
    }
  }
  return alpha;
}

Triangle beta_from_alpha(const Triangle& alpha) {
  require_kind(alpha, {TriangleKind::Alpha}, "beta_from_alpha");
  long m_max = alpha.complete_through();
  Triangle beta(TriangleKind::Beta);
  beta.reserve_rows(2 * m_max);
  for (long z = 0; z <= 2 * m_max; ++z) {
    for (long y = std::max(0L, z - m_max); y <= z; ++y) {
      long k = z - y;
      Integer sum = 0;
      for (long m = 0; m <= k; ++m) {
        Integer term = binomial(k, m) * alpha.at(m, z);
        if ((m + k) % 2) sum -= term;
        else sum += term;
      }
      if (y > z / 2 && sum != 0)
        throw ConjectureViolation("beta_{" + std::to_string(z) + "," + std::to_string(y) + "} = " + to_string(sum) +
                                  " is nonzero beyond the triangular support");
      beta.set(z, y, std::move(sum));
    }
  }
  return beta;
}

Triangle alpha_from_beta(const Triangle& beta, long m_max) {
  require_kind(beta, {TriangleKind::Beta}, "alpha_from_beta");
  Triangle alpha(TriangleKind::Alpha);
  alpha.reserve_rows(m_max);
  for (long m = 0; m <= m_max; ++m)
    for (long z = 0; z <= 2 * m; ++z) {
      Integer sum = 0;
      for (long j = 0; j <= std::min(m, z); ++j) sum += binomial(m, j) * beta.at(z, z - j);
      alpha.set(m, z, std::move(sum));
    }
  return alpha;
}

Integer hermite_at_half(unsigned long n) {
  Rational v = hermite(n)(Rational(1, 2));
  if (v.get_den() != 1) throw IntegralityError("H_n(1/2) is not an integer");
  return v.get_num();
}

IdentityReport meeussen_check(const Triangle& beta, long z_max) {
  require_kind(beta, {TriangleKind::Beta}, "meeussen_check");
  IdentityReport report;
  for (long z = 0; z <= z_max; ++z) {
    auto b = beta.get(z, 0);
    if (!b) continue;
    ++report.checked;
    Integer h = hermite_at_half(static_cast<unsigned long>(z));
    if (*b != h)
      report.failures.push_back("beta_{" + std::to_string(z) + ",0} = " + to_string(*b) + " but H_" +
                                std::to_string(z) + "(1/2) = " + to_string(h));
  }
  return report;
}

std::vector<Integer> euler_partitions(long n_max) {
  std::vector<Integer> p(static_cast<std::size_t>(std::max(0L, n_max) + 1));
  p[0] = 1;
  for (long n = 1; n <= n_max; ++n) {
    Integer sum = 0;
    for (long k = 1;; ++k) {
      long g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      long g2 = k * (3 * k + 1) / 2;
      Integer term = p[n - g1];
      if (g2 <= n) term += p[n - g2];
      if (k % 2) sum += term;
      else sum -= term;
    }
    p[n] = sum;
  }
  return p;
}

std::vector<Integer> topo_deconvolve(const std::vector<Integer>& p, const std::vector<Integer>& p1, long n_max) {
  auto need = static_cast<std::size_t>(n_max + 1);
  if (p.size() < need || p1.size() < need) throw DataError("topo_deconvolve: series shorter than n_max+1");
  std::vector<Integer> d(need);
  for (std::size_t k = 0; k < need; ++k) {
    Integer v = p[k];
    for (std::size_t j = 0; j < k; ++j) v -= d[j] * p1[k - j];
    d[k] = std::move(v);
  }
  return d;
}

std::vector<Integer> topo_convolve(const std::vector<Integer>& d, const std::vector<Integer>& p1, long n_max) {
  auto need = static_cast<std::size_t>(n_max + 1);
  if (d.size() < need || p1.size() < need) throw DataError("topo_convolve: series shorter than n_max+1");
  std::vector<Integer> p(need);
  for (std::size_t n = 0; n < need; ++n)
    for (std::size_t k = 0; k <= n; ++k) p[n] += d[k] * p1[n - k];
  return p;
}

}  // namespace hdpart
