#pragma once

#include <vector>

#include "hdpart/enumerator.hpp"
#include "hdpart/integer.hpp"
#include "hdpart/series.hpp"
#include "hdpart/triangle.hpp"

namespace hdpart {

// e_{m,x} = binom(binom(x,2), m): ways to place m Type1 nodes in ambient x.
Integer e_entry(long m, long x);
// Inverse binomial transform of r -> e_{m,r}.
Triangle cD_from_e(long m_max);

// Solves c = c^box2 (*) chat row by row; asserts chat_{m,x} = 0 for x > m.
Triangle chat_from_C(const Triangle& C, const Triangle& Cbox2, long m_max);
// Solves a = a^box2 (*) fhat in (m, r) indexing. Entries whose inputs are
// unavailable are left unknown.
Triangle fhat_from_A(const Triangle& A, const Triangle& Abox2, long n_max);

// A = A^box2 x Fhat to orders (q^M, t^R).
SeriesReport series_box_identity(const Triangle& A, const Triangle& Abox2, const Triangle& Fhat, long M, long R);
// C = C^box2 x Chat to orders (q^M, t^R).
SeriesReport series_box_identity_C(const Triangle& C, const Triangle& Cbox2, const Triangle& Chat, long M, long R);

// a^rest_{m+r+1,r} for m = 0..m_max with every coordinate below b.
std::vector<Integer> box_b_column(Coord b, std::size_t r, std::size_t m_max, const EnumOptions& opts = {});

}  // namespace hdpart
