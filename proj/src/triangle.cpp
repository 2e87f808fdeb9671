#include "hdpart/triangle.hpp"

#include <array>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "hdpart/errors.hpp"

namespace hdpart {

namespace {

constexpr std::array<std::pair<TriangleKind, std::string_view>, 14> kNames{{
    {TriangleKind::A, "A"},
    {TriangleKind::B, "B"},
    {TriangleKind::C, "C"},
    {TriangleKind::D, "D"},
    {TriangleKind::F, "F"},
    {TriangleKind::T, "T"},
    {TriangleKind::Alpha, "alpha"},
    {TriangleKind::Beta, "beta"},
    {TriangleKind::Abox2, "Abox2"},
    {TriangleKind::Cbox2, "Cbox2"},
    {TriangleKind::Fbox2, "Fbox2"},
    {TriangleKind::Chat, "Chat"},
    {TriangleKind::Fhat, "Fhat"},
    {TriangleKind::CD, "cD"},
}};

}  // namespace

std::string_view name(TriangleKind k) {
  for (const auto& [kind, text] : kNames)
    if (kind == k) return text;
  return "?";
}

TriangleKind parse_triangle_kind(std::string_view text) {
  for (const auto& [kind, n] : kNames)
    if (n == text) return kind;
  throw std::invalid_argument("unknown triangle name '" + std::string(text) + "'");
}

long default_row_origin(TriangleKind k) {
  switch (k) {
    case TriangleKind::A:
    case TriangleKind::B:
    case TriangleKind::F:
    case TriangleKind::T:
    case TriangleKind::Abox2:
    case TriangleKind::Fbox2:
    case TriangleKind::Fhat:
      return 1;
    default:
      return 0;
  }
}

long default_col_origin(TriangleKind k) { return k == TriangleKind::T ? 1 : 0; }

Triangle::Triangle(TriangleKind kind) : Triangle(kind, default_row_origin(kind), default_col_origin(kind)) {}

Triangle::Triangle(TriangleKind kind, long row_origin, long col_origin)
    : kind_(kind), row_origin_(row_origin), col_origin_(col_origin) {}

long Triangle::support_last(long row) const {
  switch (kind_) {
    case TriangleKind::A:
    case TriangleKind::B:
    case TriangleKind::Abox2:
      return row - 1;
    case TriangleKind::C:
    case TriangleKind::Cbox2:
    case TriangleKind::CD:
    case TriangleKind::Alpha:
      return 2 * row;
    case TriangleKind::D:
      return row < 0 ? -1 : (3 * row) / 2;
    case TriangleKind::F:
    case TriangleKind::Fbox2:
    case TriangleKind::Fhat:
      return row < 1 ? -1 : (row - 1) / 2;
    case TriangleKind::Chat:
    case TriangleKind::T:
      return row;
    case TriangleKind::Beta:
      return row < 0 ? -1 : row / 2;
  }
  return -1;
}

bool Triangle::in_support(long row, long col) const {
  return row >= default_row_origin(kind_) && col >= col_origin_ && col <= support_last(row);
}

std::optional<Integer> Triangle::get(long row, long col) const {
  if (!in_support(row, col)) return Integer(0);
  if (!has_row(row)) return std::nullopt;
  const auto& r = rows_[static_cast<std::size_t>(row - row_origin_)];
  auto idx = static_cast<std::size_t>(col - col_origin_);
  if (idx >= r.size()) return std::nullopt;
  return r[idx];
}

bool Triangle::known(long row, long col) const { return get(row, col).has_value(); }

Integer Triangle::at(long row, long col) const {
  auto v = get(row, col);
  if (!v)
    throw DataError(std::string(name()) + ": entry (" + std::to_string(row) + ", " + std::to_string(col) +
                    ") is not available");
  return *v;
}

void Triangle::reserve_rows(long row) {
  if (row < row_origin_) return;
  auto need = static_cast<std::size_t>(row - row_origin_ + 1);
  if (rows_.size() < need) rows_.resize(need);
}

void Triangle::set(long row, long col, Integer value) {
  if (!in_support(row, col)) {
    if (value != 0)
      throw SupportError(std::string(name()) + ": nonzero value " + to_string(value) + " at (" +
                         std::to_string(row) + ", " + std::to_string(col) + ") outside the support region");
    return;
  }
  if (row < row_origin_) throw std::out_of_range("Triangle::set: row below origin");
  reserve_rows(row);
  auto& r = rows_[static_cast<std::size_t>(row - row_origin_)];
  auto idx = static_cast<std::size_t>(col - col_origin_);
  if (r.size() <= idx) r.resize(idx + 1);
  r[idx] = std::move(value);
}

const std::vector<std::optional<Integer>>& Triangle::row(long row) const {
  if (!has_row(row)) throw DataError(std::string(name()) + ": row " + std::to_string(row) + " is not available");
  return rows_[static_cast<std::size_t>(row - row_origin_)];
}

bool Triangle::row_complete(long row) const {
  if (!has_row(row)) return false;
  for (long c = col_origin_; c <= support_last(row); ++c)
    if (!known(row, c)) return false;
  return true;
}

long Triangle::complete_through() const {
  long r = row_origin_;
  while (row_complete(r)) ++r;
  return r - 1;
}

Triangle Triangle::truncated(long row) const {
  Triangle out = *this;
  if (row < last_row()) out.rows_.resize(static_cast<std::size_t>(std::max(0L, row - row_origin_ + 1)));
  return out;
}

nlohmann::json to_json(const Triangle& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (long r = t.row_origin(); r <= t.last_row(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& v : t.row(r)) row.push_back(v ? nlohmann::json(to_string(*v)) : nlohmann::json());
    rows.push_back(std::move(row));
  }
  return {{"name", std::string(t.name())},
          {"row_origin", t.row_origin()},
          {"col_origin", t.col_origin()},
          {"rows", std::move(rows)}};
}

Triangle triangle_from_json(const nlohmann::json& j) {
  Triangle t(parse_triangle_kind(j.at("name").get<std::string>()), j.at("row_origin").get<long>(),
             j.at("col_origin").get<long>());
  long r = t.row_origin();
  for (const auto& row : j.at("rows")) {
    t.reserve_rows(r);
    long c = t.col_origin();
    for (const auto& v : row) {
      if (!v.is_null()) t.set(r, c, parse_integer(v.get<std::string>()));
      ++c;
    }
    ++r;
  }
  return t;
}

std::string to_csv(const Triangle& t) {
  std::size_t width = 0;
  for (long r = t.row_origin(); r <= t.last_row(); ++r) width = std::max(width, t.row(r).size());
  std::ostringstream out;
  out << "row";
  for (std::size_t c = 0; c < width; ++c) out << ',' << t.col_origin() + static_cast<long>(c);
  out << '\n';
  for (long r = t.row_origin(); r <= t.last_row(); ++r) {
    out << r;
    const auto& row = t.row(r);
    for (std::size_t c = 0; c < width; ++c) {
      out << ',';
      if (c < row.size() && row[c]) out << '"' << to_string(*row[c]) << '"';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace hdpart
