// One PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "hdpart/box.hpp"
#include "hdpart/catalog.hpp"
#include "hdpart/enumerator.hpp"
#include "hdpart/golden.hpp"
#include "hdpart/series.hpp"
#include "hdpart/transforms.hpp"

using namespace hdpart;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) note << "; ";
      ok = false;
      note << what;
    }
  }
  void require(const VerifyReport& r, std::size_t min_matched) {
    require(r.ok(), r.summary());
    require(r.matched >= min_matched, r.table + ": only " + std::to_string(r.matched) + " entries compared");
  }
};

bool run(const std::string& id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.note << "exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (o.ok ? "PASS " : "FAIL ") << id << " " << title << " (" << std::fixed;
  std::cout.precision(2);
  std::cout << secs << " s)";
  if (!o.note.str().empty()) std::cout << ": " << o.note.str();
  std::cout << std::endl;
  return o.ok;
}

void ac1(Outcome& o) {
  const PartitionTable& p = golden_pd();
  std::size_t compared = 0;
  for (std::size_t d = 0; d <= 3; ++d) {
    auto counts = count_pd(d, 12);
    for (long n = 1; n <= 12; ++n) {
      Integer expected = p.at(static_cast<long>(d), n);
      o.require(counts[n - 1] == expected, "p_" + std::to_string(d) + "(" + std::to_string(n) + ") = " +
                                               to_string(counts[n - 1]) + ", expected " + to_string(expected));
      ++compared;
    }
  }
  o.require(p.at(3, 10) == 3122 && p.at(4, 10) == 13220, "reference p_d(10) row misaligned");
  o.note << compared << " values";
}

void ac2(Outcome& o) {
  Triangle A = compute_triangle(TriangleKind::A, 13, Method::Enumerate);
  VerifyReport r = verify(A, GoldenId::A);
  std::size_t tabulated = 0;
  for (const auto& e : golden(GoldenId::A).entries) tabulated += e.row <= 13;
  o.require(r, tabulated);
  o.require(A.at(13, 6) == 138155, "a_{13,6} = " + to_string(A.at(13, 6)));
  if (o.ok) o.note << r.matched << " entries";
}

void ac3(Outcome& o) {
  Triangle C = compute_triangle(TriangleKind::C, 6, Method::Enumerate);
  VerifyReport r = verify(C, GoldenId::C);
  o.require(r, 36);
  o.require(C.at(5, 10) == 945, "c_{5,10} = " + to_string(C.at(5, 10)));
  if (o.ok) o.note << r.matched << " entries";
}

void ac4(Outcome& o) {
  Triangle A = A_from_C(reference_C(), 21);
  std::size_t overlap = 0;
  for (const auto& e : golden(GoldenId::A).entries) overlap += e.row <= 21 && e.row - e.col - 1 <= 10;
  o.require(verify(A, GoldenId::A), overlap);
  Triangle D = C_to_D(reference_C(), 10);
  o.require(verify(D, GoldenId::D), 80);
  Triangle F = A_to_F(reference_A(), 25);
  o.require(verify(F, GoldenId::F), 120);
  Triangle C = A_to_C(reference_A(), 8);
  std::size_t closed = 0;
  for (long m = 0; m <= 8; ++m)
    for (long z = 0; z <= 5 && z <= 2 * m; ++z)
      if (auto v = closed_form_C(m, z)) {
        o.require(*v == C.at(m, 2 * m - z), "closed form c_{" + std::to_string(m) + "," + std::to_string(2 * m - z) + "}");
        ++closed;
      }
  o.require(closed >= 40, "too few closed-form comparisons");
  if (o.ok) o.note << "A, D, F verified; " << closed << " closed-form entries";
}

void ac5(Outcome& o) {
  const Triangle& F = golden_triangle(GoldenId::F);
  for (long m = 1; m <= 10; ++m)
    o.require(F.at(2 * m + 1, m) == power(Integer(m + 1), static_cast<unsigned long>(m - 1)),
              "f_{" + std::to_string(2 * m + 1) + "," + std::to_string(m) + "}");
  for (std::size_t m = 1; m <= 5; ++m) {
    auto forests = count_forests(m);
    Integer sum = 0;
    for (std::size_t a = 1; a <= m; ++a) {
      Integer expected = binomial(static_cast<long>(m) - 1, static_cast<long>(a) - 1) *
                         power(Integer(static_cast<unsigned long>(m)), m - a);
      o.require(forests[a] == expected, "forests m=" + std::to_string(m) + " alpha=" + std::to_string(a));
      sum += forests[a];
    }
    o.require(sum == F.at(2 * static_cast<long>(m) + 1, static_cast<long>(m)), "forest total m=" + std::to_string(m));
  }
}

void ac6(Outcome& o) {
  Triangle B = B_from_A(reference_A());
  Triangle T = hanna_T_from_B(B, 20);
  o.require(T.complete_through() >= 20, "T incomplete");
  PartitionTable p = pd_table_from_A(reference_A(), 12, 6);
  for (std::size_t d = 1; d <= 3; ++d) {
    auto counts = count_pd(d, 12);
    for (long n = 1; n <= 12; ++n)
      o.require(counts[n - 1] == p.at(static_cast<long>(d), n), "enumerated p_d(n) disagrees with transform");
  }
  IdentityReport r = hanna_check(T, p, 12, 6);
  o.require(r.ok(), r.ok() ? "" : r.failures.front());
  o.require(r.checked == 72, "checked " + std::to_string(r.checked) + " identities");
  if (o.ok) o.note << r.checked << " row-sum identities";
}

void ac7(Outcome& o) {
  Triangle alpha = alpha_from_C(reference_C(), 10);
  o.require(alpha.complete_through() >= 10, "alpha incomplete");
  Triangle beta = beta_from_alpha(alpha);
  o.require(verify(beta, GoldenId::Beta), 30);
  o.require(beta.at(5, 2) == -40, "beta_{5,2}");
  IdentityReport r = meeussen_check(beta, 10);
  o.require(r.ok(), r.ok() ? "" : r.failures.front());
  o.require(r.checked >= 11, "Hermite comparisons " + std::to_string(r.checked));
}

void ac8(Outcome& o) {
  Triangle Cb = compute_triangle(TriangleKind::Cbox2, 7, Method::Enumerate);
  o.require(verify(Cb, GoldenId::Cbox2), 40);

  Triangle chat = chat_from_C(reference_C(), golden_triangle(GoldenId::Cbox2), 10);
  o.require(verify(chat.truncated(8), GoldenId::ChatDisplay), 20);
  for (long m = 1; m <= 10; ++m)
    o.require(chat.at(m, m) == power(Integer(m + 1), static_cast<unsigned long>(m - 1)), "chat diagonal");

  Triangle fhat = fhat_from_A(reference_A(), reference_Abox2(), 25);
  o.require(verify(fhat, GoldenId::FhatDisplay), 25);
  o.require(fhat.at(8, 3) == 57 && golden_triangle(GoldenId::F).at(8, 3) == 58, "f-hat_{8,3} vs f_{8,3}");

  Triangle Ab = compute_triangle(TriangleKind::Abox2, 14, Method::Enumerate);
  Triangle Fb = A_to_F(Ab, 14);
  o.require(verify(Fb, GoldenId::Fbox2), 20);

  SeriesReport s = series_box_identity(reference_A(), reference_Abox2(), fhat, 6, 8);
  o.require(s.ok(), s.summary());
  o.require(s.checked == 63, "series coefficients " + std::to_string(s.checked));
}

void ac9(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const Triangle& A = reference_A();
  std::size_t n_checked = 0;
  for (const auto& [key, value] : golden_pd().entries()) {
    auto [d, n] = key;
    o.require(pd_from_A(A, n, d) == value, "p_" + std::to_string(d) + "(" + std::to_string(n) + ")");
    ++n_checked;
  }
  o.require(pd_from_A(A, 20, 10) == Integer("2403142436321"), "p_10(20)");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 1.0, "took " + std::to_string(secs) + " s");
  o.require(n_checked >= 225, "only " + std::to_string(n_checked) + " table entries");
  if (o.ok) o.note << n_checked << " values";
}

void ac10(Outcome& o) {
  // Enumerator against naive subset generation, ambient <= 3 and up to 8 nodes.
  for (std::size_t r = 1; r <= 3; ++r) {
    auto counts = count_pd(r - 1, 8);
    for (Coord b : {Coord{2}, Coord{3}}) {
      if (r == 3 && b == 3) continue;
      auto boxed = count_pd(r - 1, 8, b);
      for (std::size_t n = 1; n <= 8; ++n) o.require(boxed[n - 1] <= counts[n - 1], "box count above unrestricted");
    }
    for (long n = 1; n <= 8; ++n)
      o.require(counts[n - 1] == golden_pd().at(static_cast<long>(r) - 1, n), "oracle count");
  }
  // Determinism across thread counts.
  EnumConfig cfg{6, mu(6), 6, std::nullopt};
  EnumOptions one, many;
  many.threads = 8;
  o.require(enumerate(cfg, {}, one) == enumerate(cfg, {}, many), "ledger differs across thread counts");
  // Round trips.
  const Triangle& A = reference_A();
  o.require(A_from_pd(pd_table_from_A(A, 25, 24), 25) == A, "A <-> p_d");
  Triangle C8 = A_to_C(A, 8);
  o.require(C8 == reference_C().truncated(8), "A -> C");
  Triangle back = A_from_C(C8, 25);
  std::size_t known = 0;
  for (long n = 1; n <= 25; ++n)
    for (long r = 0; r < n; ++r)
      if (auto v = back.get(n, r)) {
        o.require(*v == A.at(n, r), "C -> A");
        ++known;
      }
  o.require(known >= 150, "C -> A covered " + std::to_string(known) + " entries");
  o.require(C_from_D(C_to_D(reference_C(), 10), 10) == reference_C(), "C <-> D");
  o.require(A_from_F(A_to_F(A, 25), 25) == A, "A <-> F");
  Triangle alpha = alpha_from_C(reference_C(), 10);
  o.require(alpha_from_beta(beta_from_alpha(alpha), 10) == alpha, "alpha <-> beta");
  auto p1 = euler_partitions(40);
  std::vector<Integer> p3{1};
  for (long n = 1; n <= 23; ++n) p3.push_back(golden_pd().at(3, n));
  o.require(topo_convolve(topo_deconvolve(p3, p1, 23), p1, 23) == p3, "topological convolution");
}

void stretch() {
  EnumOptions opts;
  opts.threads = std::max(1u, std::thread::hardware_concurrency());
  opts.guard.override_limits = true;
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    Triangle A = compute_triangle(TriangleKind::A, 16, Method::Enumerate, opts);
    VerifyReport r = verify(A, GoldenId::A);
    o.require(r.ok(), r.summary());
    o.require(A.at(16, 8) == Integer(15354492), "a_{16,8} = " + to_string(A.at(16, 8)));
  } catch (const std::exception& e) {
    o.ok = false;
    o.note << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "INFO stretch A rows n<=16 by enumeration (not gating): " << (o.ok ? "ok" : "failed: " + o.note.str())
            << " (" << std::fixed << std::setprecision(2) << secs << " s, " << opts.threads << " threads)" << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  bool all = true;
  all &= run("AC1", "p_d(n) by enumeration, d<=3, n<=12", ac1);
  all &= run("AC2", "A rows n<=13 by enumeration", ac2);
  all &= run("AC3", "C rows m<=5 by enumeration", ac3);
  all &= run("AC4", "transform cross-checks A/C, C/D, A/F, closed forms", ac4);
  all &= run("AC5", "F diagonal and labelled forests", ac5);
  all &= run("AC6", "Hanna triangle integrality and row sums", ac6);
  all &= run("AC7", "alpha integrality, beta table, Hermite values", ac7);
  all &= run("AC8", "box-2 tables, C-hat, F-hat, box transform", ac8);
  all &= run("AC9", "p_d(n) service reproduces every tabulated value", ac9);
  all &= run("AC10", "oracle equivalence, determinism, round trips", ac10);
  if (!(argc > 1 && std::string(argv[1]) == "--no-stretch")) stretch();
  return all ? 0 : 1;
}
