#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hdpart/integer.hpp"
#include "hdpart/polynomial.hpp"
#include "hdpart/triangle.hpp"

namespace hdpart {

// Sparse table of p_d(n). p_0(n) = 1 is always available.
class PartitionTable {
 public:
  void set(long d, long n, Integer value);
  bool has(long d, long n) const;
  // Throws DataError when missing.
  Integer at(long d, long n) const;
  long max_n() const;
  long max_d() const;
  const std::map<std::pair<long, long>, Integer>& entries() const { return values_; }

  friend bool operator==(const PartitionTable&, const PartitionTable&) = default;

 private:
  std::map<std::pair<long, long>, Integer> values_;  // key (d, n)
};

// p_d(n) = sum_r binom(d+1, r) a_{n,r}; `A` may be A or Abox2.
Integer pd_from_A(const Triangle& A, long n, const Integer& d);

// Inverse binomial transform. Fills a_{n,r} for n <= n_max and r <= min(n-1, r_max);
// r_max < 0 means every r the row supports.
Triangle A_from_pd(const PartitionTable& p, long n_max, long r_max = -1);
PartitionTable pd_table_from_A(const Triangle& A, long n_max, long d_max);

// a_{m+r+1,r} = sum_x binom(r,x) c_{m,x}; `C` may be C, Cbox2 or cD.
Integer C_to_A(const Triangle& C, long m, long r);
// Every a_{n,r} with n-r-1 among the complete rows of C and n <= n_max.
// The result kind is Abox2 when C is Cbox2, else A.
Triangle A_from_C(const Triangle& C, long n_max);
// Rows m <= m_max of C by triangular inversion; needs a_{m+r+1,r} for r <= 2m.
// The result kind is Cbox2 when A is Abox2, else C.
Triangle A_to_C(const Triangle& A, long m_max);

// c_{m,x} = sum_y x!/((2y)!! (x-2y)!) d_{m-y,x-2y}.
Integer D_to_C(const Triangle& D, long m, long x);
Triangle C_from_D(const Triangle& D, long m_max);
Triangle C_to_D(const Triangle& C, long m_max);

// a_{m+r+1,r} = sum_{x,p} binom(r,x) binom(binom(r-x,2), m-p) f_{p+x+1,x} with f_{1,0}=1.
Integer F_to_A(const Triangle& F, long m, long r);
// Rows n <= n_max of A, entries whose F inputs are complete. Output kind A (Abox2 if F is Fbox2).
Triangle A_from_F(const Triangle& F, long n_max);
// Rows n <= n_max of F by triangular inversion; asserts f_{m+r+1,r} = 0 for r > m wherever
// the input allows. Output kind F (Fbox2 if A is Abox2).
Triangle A_to_F(const Triangle& A, long n_max);

// c_{m,2m-z} for z <= 5 where the closed form is defined.
std::optional<Integer> closed_form_C(long m, long z);

Triangle B_from_A(const Triangle& A);
// p_d(n) = 1 + sum_{r>=1} binom(d, r) b_{n,r}.
Integer pd_from_B(const Triangle& B, long n, const Integer& d);

// Hanna triangle from B rows 1..n_max. Integrality failure throws IntegralityError.
Triangle hanna_T_from_B(const Triangle& B, long n_max);

struct IdentityReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Checks sum_j (T^d)_{n,j} = p_d(n) for n <= n_max, 1 <= d <= d_max where p is known.
IdentityReport hanna_check(const Triangle& T, const PartitionTable& p, long n_max, long d_max);

// g_m(r) = (2m)!! sum_x binom(r,x) c_{m,x} as a polynomial in r.
Polynomial g_polynomial(const Triangle& C, long m);
// alpha_{m,z} = coefficient of r^(2m-z) in g_m. Non-integral coefficients throw ConjectureViolation.
Triangle alpha_from_C(const Triangle& C, long m_max);
// beta_{z,y} = sum_{m=0}^{z-y} (-1)^(m+z-y) binom(z-y, m) alpha_{m,z}, for entries whose
// alpha inputs are available.
Triangle beta_from_alpha(const Triangle& alpha);
// alpha_{m,z} = sum_j binom(m, j) beta_{z,z-j}, the inverse of beta_from_alpha.
Triangle alpha_from_beta(const Triangle& beta, long m_max);

Integer hermite_at_half(unsigned long n);
IdentityReport meeussen_check(const Triangle& beta, long z_max);

// p_1(0..n_max) by Euler's pentagonal-number recurrence.
std::vector<Integer> euler_partitions(long n_max);
// d(k) = p(k) - sum_{j<k} d(j) p_1(k-j), k <= n_max.
std::vector<Integer> topo_deconvolve(const std::vector<Integer>& p, const std::vector<Integer>& p1, long n_max);
std::vector<Integer> topo_convolve(const std::vector<Integer>& d, const std::vector<Integer>& p1, long n_max);

}  // namespace hdpart
