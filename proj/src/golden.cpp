#include "hdpart/golden.hpp"

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "hdpart/errors.hpp"

namespace hdpart {

namespace detail {
extern const std::string_view kGoldenJson;
}

namespace {

constexpr std::array<std::pair<GoldenId, std::string_view>, 10> kIds{{
    {GoldenId::Pd, "pd"},
    {GoldenId::A, "A"},
    {GoldenId::C, "C"},
    {GoldenId::F, "F"},
    {GoldenId::D, "D"},
    {GoldenId::Beta, "beta"},
    {GoldenId::Cbox2, "Cbox2"},
    {GoldenId::Fbox2, "Fbox2"},
    {GoldenId::ChatDisplay, "Chat_display"},
    {GoldenId::FhatDisplay, "Fhat_display"},
}};

std::map<GoldenId, GoldenTable> load_tables() {
  const auto doc = nlohmann::json::parse(detail::kGoldenJson);
  if (doc.at("format") != "hdpart-golden") throw DataError("embedded golden data has an unexpected format");
  std::map<GoldenId, GoldenTable> out;
  for (const auto& t : doc.at("tables")) {
    GoldenTable g;
    g.id = parse_golden_id(t.at("id").get<std::string>());
    g.title = t.at("title").get<std::string>();
    g.row_label = t.at("row_label").get<std::string>();
    g.col_label = t.at("col_label").get<std::string>();
    g.notes = t.at("notes").get<std::vector<std::string>>();
    g.row_origin = t.at("row_origin").get<long>();
    g.col_origin = t.at("col_origin").get<long>();
    long row = g.row_origin;
    for (const auto& r : t.at("rows")) {
      long col = g.col_origin;
      for (const auto& v : r) {
        if (!v.is_null()) g.entries.push_back({row, col, parse_integer(v.get<std::string>())});
        ++col;
      }
      ++row;
    }
    out.emplace(g.id, std::move(g));
  }
  return out;
}

const std::map<GoldenId, GoldenTable>& tables() {
  static const std::map<GoldenId, GoldenTable> t = load_tables();
  return t;
}

Triangle build_triangle(GoldenId id) {
  const GoldenTable& g = golden(id);
  Triangle t(golden_kind(id), g.row_origin, g.col_origin);
  for (const auto& e : g.entries) {
    t.reserve_rows(e.row);
    t.set(e.row, e.col, e.value);
  }
  return t;
}

}  // namespace

std::string_view golden_name(GoldenId id) {
  for (const auto& [k, n] : kIds)
    if (k == id) return n;
  return "?";
}

GoldenId parse_golden_id(std::string_view text) {
  for (const auto& [k, n] : kIds)
    if (n == text) return k;
  throw std::invalid_argument("unknown golden table id '" + std::string(text) + "'");
}

std::vector<GoldenId> all_golden_ids() {
  std::vector<GoldenId> out;
  for (const auto& [k, n] : kIds) out.push_back(k);
  return out;
}

std::optional<Integer> GoldenTable::lookup(long row, long col) const {
  for (const auto& e : entries)
    if (e.row == row && e.col == col) return e.value;
  return std::nullopt;
}

const GoldenTable& golden(GoldenId id) {
  auto it = tables().find(id);
  if (it == tables().end()) throw DataError("golden table '" + std::string(golden_name(id)) + "' is missing");
  return it->second;
}

std::string_view golden_json_text() { return detail::kGoldenJson; }

TriangleKind golden_kind(GoldenId id) {
  switch (id) {
    case GoldenId::A: return TriangleKind::A;
    case GoldenId::C: return TriangleKind::C;
    case GoldenId::F: return TriangleKind::F;
    case GoldenId::D: return TriangleKind::D;
    case GoldenId::Beta: return TriangleKind::Beta;
    case GoldenId::Cbox2: return TriangleKind::Cbox2;
    case GoldenId::Fbox2: return TriangleKind::Fbox2;
    case GoldenId::ChatDisplay: return TriangleKind::Chat;
    case GoldenId::FhatDisplay: return TriangleKind::Fhat;
    case GoldenId::Pd: break;
  }
  throw std::invalid_argument("golden table '" + std::string(golden_name(id)) + "' is not a triangle");
}

const Triangle& golden_triangle(GoldenId id) {
  static const std::map<GoldenId, Triangle> cache = [] {
    std::map<GoldenId, Triangle> m;
    for (GoldenId g : all_golden_ids())
      if (g != GoldenId::Pd) m.emplace(g, build_triangle(g));
    return m;
  }();
  golden_kind(id);
  return cache.at(id);
}

const PartitionTable& golden_pd() {
  static const PartitionTable p = [] {
    PartitionTable t;
    for (const auto& e : golden(GoldenId::Pd).entries) t.set(e.col, e.row, e.value);
    return t;
  }();
  return p;
}

const Triangle& reference_A() {
  static const Triangle A = [] {
    const Triangle& F = golden_triangle(GoldenId::F);
    return A_from_F(F, F.last_row());
  }();
  return A;
}

const Triangle& reference_C() {
  static const Triangle C = [] {
    Triangle c = golden_triangle(GoldenId::C);
    for (long m = c.row_origin(); m <= c.last_row(); ++m)
      if (!c.known(m, 2 * m)) c.set(m, 2 * m, double_factorial(2 * m - 1));
    return c;
  }();
  return C;
}

const Triangle& reference_Abox2() {
  static const Triangle A = A_from_C(golden_triangle(GoldenId::Cbox2), 25);
  return A;
}

std::string VerifyReport::summary() const {
  std::ostringstream out;
  out << table << ": " << matched << " matched, " << mismatches.size() << " mismatched, " << uncovered
      << " uncovered";
  for (const auto& m : mismatches)
    out << "\n  (" << m.row << ", " << m.col << ") computed " << to_string(m.computed) << ", expected "
        << to_string(m.expected);
  return out.str();
}

VerifyReport verify(const Triangle& computed, GoldenId id) {
  TriangleKind want = golden_kind(id);
  if (computed.kind() != want)
    throw std::invalid_argument("cannot verify triangle " + std::string(computed.name()) + " against golden table " +
                                std::string(golden_name(id)));
  VerifyReport report;
  report.table = std::string(golden_name(id));
  for (const auto& e : golden(id).entries) {
    auto v = computed.has_row(e.row) ? computed.get(e.row, e.col) : std::nullopt;
    if (!v) {
      ++report.uncovered;
    } else if (*v == e.value) {
      ++report.matched;
    } else {
      report.mismatches.push_back({e.row, e.col, *v, e.value});
    }
  }
  return report;
}

VerifyReport verify(const PartitionTable& computed, GoldenId id) {
  if (id != GoldenId::Pd) throw std::invalid_argument("a p_d(n) table can only be verified against 'pd'");
  VerifyReport report;
  report.table = "pd";
  for (const auto& e : golden(id).entries) {
    long n = e.row, d = e.col;
    if (!computed.has(d, n)) {
      ++report.uncovered;
      continue;
    }
    Integer v = computed.at(d, n);
    if (v == e.value) ++report.matched;
    else report.mismatches.push_back({n, d, v, e.value});
  }
  return report;
}

}  // namespace hdpart
