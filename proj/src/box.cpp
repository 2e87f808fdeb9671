#include "hdpart/box.hpp"

#include "hdpart/errors.hpp"

namespace hdpart {

Integer e_entry(long m, long x) {
  if (m < 0 || x < 0) return 0;
  return binomial(x * (x - 1) / 2, m);
}

Triangle cD_from_e(long m_max) {
  Triangle cd(TriangleKind::CD);
  cd.reserve_rows(m_max);
  for (long m = 0; m <= m_max; ++m) {
    std::vector<Integer> row;
    for (long x = 0; x <= 2 * m + 1; ++x) {
      Integer v = e_entry(m, x);
      for (long y = 0; y < x; ++y) v -= binomial(x, y) * row[static_cast<std::size_t>(y)];
      cd.set(m, x, v);
      row.push_back(std::move(v));
    }
  }
  return cd;
}

Triangle chat_from_C(const Triangle& C, const Triangle& Cbox2, long m_max) {
  if (C.kind() != TriangleKind::C || Cbox2.kind() != TriangleKind::Cbox2)
    throw std::invalid_argument("chat_from_C expects triangles C and Cbox2");
  Triangle chat(TriangleKind::Chat);
  chat.reserve_rows(m_max);
  for (long m = 0; m <= m_max; ++m) {
    for (long x = 0; x <= 2 * m; ++x) {
      Integer v = C.at(m, x);
      for (long p = 0; p < m; ++p)
        for (long y = 0; y <= std::min(x, p); ++y) {
          Integer h = chat.at(p, y);
          if (h != 0) v -= binomial(x, y) * Cbox2.at(m - p, x - y) * h;
        }
      chat.set(m, x, std::move(v));
    }
  }
  return chat;
}

Triangle fhat_from_A(const Triangle& A, const Triangle& Abox2, long n_max) {
  if (A.kind() != TriangleKind::A || Abox2.kind() != TriangleKind::Abox2)
    throw std::invalid_argument("fhat_from_A expects triangles A and Abox2");
  Triangle fhat(TriangleKind::Fhat);
  fhat.reserve_rows(n_max);
  for (long n = 1; n <= n_max; ++n) {
    for (long r = 0; r <= n - 1; ++r) {
      const long m = n - r - 1;
      try {
        Integer v = A.at(n, r);
        for (long p = 0; p <= m; ++p)
          for (long s = 0; s <= r; ++s) {
            if (p == m && s == r) continue;
            Integer h = fhat.at(p + s + 1, s);
            if (h != 0) v -= binomial(r, s) * Abox2.at(m - p + r - s + 1, r - s) * h;
          }
        fhat.set(n, r, std::move(v));
      } catch (const DataError&) {
      }
    }
  }
  return fhat;
}

SeriesReport series_box_identity(const Triangle& A, const Triangle& Abox2, const Triangle& Fhat, long M, long R) {
  BivariateSeries lhs = series_from_triangle(A, M, R);
  BivariateSeries rhs = series_from_triangle(Abox2, M, R) * series_from_triangle(Fhat, M, R);
  return compare(lhs, rhs);
}

SeriesReport series_box_identity_C(const Triangle& C, const Triangle& Cbox2, const Triangle& Chat, long M, long R) {
  BivariateSeries lhs = series_from_triangle(C, M, R);
  BivariateSeries rhs = series_from_triangle(Cbox2, M, R) * series_from_triangle(Chat, M, R);
  return compare(lhs, rhs);
}

std::vector<Integer> box_b_column(Coord b, std::size_t r, std::size_t m_max, const EnumOptions& opts) {
  return count_A_column(r, m_max, b, opts);
}

}  // namespace hdpart
