#include "hdpart/suites.hpp"

#include <functional>
#include <stdexcept>

#include "hdpart/box.hpp"
#include "hdpart/catalog.hpp"
#include "hdpart/errors.hpp"
#include "hdpart/golden.hpp"
#include "hdpart/transforms.hpp"

namespace hdpart {

namespace {

CheckResult check(std::string name, const std::function<std::string()>& body) {
  try {
    std::string failure = body();
    return {std::move(name), failure.empty(), failure};
  } catch (const std::exception& e) {
    return {std::move(name), false, std::string("exception: ") + e.what()};
  }
}

std::string from_report(const VerifyReport& r, std::size_t min_matched = 1) {
  if (!r.ok()) return r.summary();
  if (r.matched < min_matched) return r.summary() + " (too few entries compared)";
  return {};
}

std::string same(const Triangle& a, const Triangle& b, long first, long last) {
  for (long r = first; r <= last; ++r)
    for (long c = a.col_origin(); c <= a.support_last(r); ++c)
      if (a.at(r, c) != b.at(r, c))
        return "entry (" + std::to_string(r) + ", " + std::to_string(c) + "): " + to_string(a.at(r, c)) + " vs " +
               to_string(b.at(r, c));
  return {};
}

}  // namespace

std::vector<CheckResult> golden_consistency_checks() {
  std::vector<CheckResult> out;
  out.push_back(check("pd table equals the binomial transform of the A table", [] {
    PartitionTable p;
    const Triangle& A = golden_triangle(GoldenId::A);
    for (const auto& e : golden(GoldenId::Pd).entries) p.set(e.col, e.row, pd_from_A(A, e.row, e.col));
    return from_report(verify(p), 200);
  }));
  out.push_back(check("A table equals the binomial transform of the C table", [] {
    return from_report(verify(A_from_C(reference_C(), 23), GoldenId::A), 120);
  }));
  out.push_back(check("C table equals the pairing transform of the D table", [] {
    return from_report(verify(C_from_D(golden_triangle(GoldenId::D), 10), GoldenId::C), 100);
  }));
  out.push_back(check("F diagonal equals (m+1)^(m-1)", [] {
    const Triangle& F = golden_triangle(GoldenId::F);
    for (long m = 1; 2 * m + 1 <= F.last_row(); ++m) {
      Integer want = power(m + 1, static_cast<unsigned long>(m - 1));
      if (F.at(2 * m + 1, m) != want) return "f_{" + std::to_string(2 * m + 1) + "," + std::to_string(m) + "}";
    }
    return std::string();
  }));
  out.push_back(check("beta column 0 equals H_z(1/2)", [] {
    auto r = meeussen_check(golden_triangle(GoldenId::Beta), 21);
    if (r.checked < 12) return std::string("too few entries");
    return r.ok() ? std::string() : r.failures.front();
  }));
  out.push_back(check("F^box2 table equals the F transform of the C^box2 table", [] {
    return from_report(verify(A_to_F(reference_Abox2(), 11), GoldenId::Fbox2), 20);
  }));
  return out;
}

std::vector<CheckResult> transform_checks() {
  std::vector<CheckResult> out;
  const Triangle& A = reference_A();
  const Triangle& C = reference_C();
  out.push_back(check("A <-> p_d(n) round trip", [&] {
    Triangle back = A_from_pd(pd_table_from_A(A, 25, 24), 25);
    return same(A, back, 1, 25);
  }));
  out.push_back(check("A <-> C round trip", [&] {
    Triangle c = A_to_C(A, 8);
    std::string s = same(c, C, 0, 8);
    if (!s.empty()) return s;
    return same(A_from_C(c, 25).truncated(9), A, 1, 9);
  }));
  out.push_back(check("C <-> D round trip and D table", [&] {
    Triangle d = C_to_D(C, 10);
    std::string s = same(C_from_D(d, 10), C, 0, 10);
    return s.empty() ? from_report(verify(d, GoldenId::D), 80) : s;
  }));
  out.push_back(check("A <-> F round trip and F table", [&] {
    Triangle f = A_to_F(A, 25);
    std::string s = same(A_from_F(f, 25), A, 1, 25);
    return s.empty() ? from_report(verify(f, GoldenId::F), 150) : s;
  }));
  out.push_back(check("closed forms agree with C", [&] {
    for (long m = 0; m <= 10; ++m)
      for (long z = 0; z <= 5; ++z)
        if (auto v = closed_form_C(m, z); v && 2 * m - z >= 0 && *v != C.at(m, 2 * m - z))
          return "c_{" + std::to_string(m) + "," + std::to_string(2 * m - z) + "}";
    return std::string();
  }));
  out.push_back(check("Hanna triangle row sums", [&] {
    Triangle T = hanna_T_from_B(B_from_A(A), 20);
    auto r = hanna_check(T, golden_pd(), 12, 6);
    return r.ok() ? std::string() : r.failures.front();
  }));
  out.push_back(check("alpha <-> beta round trip, beta table, Hermite column", [&] {
    Triangle alpha = alpha_from_C(C, 10);
    Triangle beta = beta_from_alpha(alpha);
    std::string s = same(alpha_from_beta(beta, 10), alpha, 0, 10);
    if (!s.empty()) return s;
    auto m = meeussen_check(beta, 10);
    if (!m.ok()) return m.failures.front();
    return from_report(verify(beta, GoldenId::Beta), 50);
  }));
  out.push_back(check("Chat and Fhat displays, box series identities", [&] {
    Triangle chat = chat_from_C(C, golden_triangle(GoldenId::Cbox2), 10);
    std::string s = from_report(verify(chat, GoldenId::ChatDisplay), 40);
    if (!s.empty()) return s;
    Triangle fhat = fhat_from_A(A, reference_Abox2(), 25);
    s = from_report(verify(fhat, GoldenId::FhatDisplay), 30);
    if (!s.empty()) return s;
    auto a = series_box_identity(A, reference_Abox2(), fhat, 6, 8);
    if (!a.ok()) return a.summary();
    auto c = series_box_identity_C(C, golden_triangle(GoldenId::Cbox2), chat, 6, 8);
    return c.ok() ? std::string() : c.summary();
  }));
  out.push_back(check("topological deconvolution round trip", [&] {
    auto p1 = euler_partitions(25);
    for (long d = 1; d <= 6; ++d) {
      std::vector<Integer> p{1};
      for (long n = 1; n <= 25; ++n) p.push_back(pd_from_A(A, n, d));
      auto dm = topo_deconvolve(p, p1, 25);
      for (const auto& v : dm)
        if (v < 0) return "negative coefficient for d=" + std::to_string(d);
      if (topo_convolve(dm, p1, 25) != p) return "reconvolution differs for d=" + std::to_string(d);
    }
    return std::string();
  }));
  return out;
}

std::vector<CheckResult> enumeration_checks(const EnumOptions& opts) {
  std::vector<CheckResult> out;
  out.push_back(check("p_d(n) by enumeration, d <= 3, n <= 10", [&] {
    PartitionTable p;
    for (std::size_t d = 1; d <= 3; ++d) {
      auto counts = count_pd(d, 10, std::nullopt, opts);
      for (std::size_t k = 0; k < counts.size(); ++k) p.set(static_cast<long>(d), static_cast<long>(k + 1), counts[k]);
    }
    return from_report(verify(p), 30);
  }));
  out.push_back(check("A rows <= 13 by enumeration", [&] {
    return from_report(verify(compute_triangle(TriangleKind::A, 13, Method::Enumerate, opts), GoldenId::A), 90);
  }));
  out.push_back(check("C rows <= 4 by enumeration", [&] {
    return from_report(verify(compute_triangle(TriangleKind::C, 5, Method::Enumerate, opts), GoldenId::C), 25);
  }));
  out.push_back(check("C^box2 rows <= 5 by enumeration", [&] {
    return from_report(verify(compute_triangle(TriangleKind::Cbox2, 6, Method::Enumerate, opts), GoldenId::Cbox2), 36);
  }));
  return out;
}

std::vector<CheckResult> run_suite(std::string_view suite, const EnumOptions& opts) {
  if (suite == "tables") return golden_consistency_checks();
  if (suite == "transforms") return transform_checks();
  if (suite == "enumeration") return enumeration_checks(opts);
  if (suite == "all") {
    auto out = golden_consistency_checks();
    for (auto& c : transform_checks()) out.push_back(std::move(c));
    for (auto& c : enumeration_checks(opts)) out.push_back(std::move(c));
    return out;
  }
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace hdpart
