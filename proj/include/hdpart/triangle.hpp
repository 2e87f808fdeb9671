#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hdpart/integer.hpp"

namespace hdpart {

enum class TriangleKind { A, B, C, D, F, T, Alpha, Beta, Abox2, Cbox2, Fbox2, Chat, Fhat, CD };

std::string_view name(TriangleKind k);
// Throws std::invalid_argument for unknown names.
TriangleKind parse_triangle_kind(std::string_view name);

// Row index where each kind's rows conventionally start (n-rows from 1,
// m-rows and z-rows from 0), and the matching first column index.
long default_row_origin(TriangleKind k);
long default_col_origin(TriangleKind k);

// Lower-triangular array of exact integers with explicit index origins.
// Entries may be unknown (partially available rows); reading an unknown entry
// inside the support region throws DataError, reading outside yields zero.
class Triangle {
 public:
  explicit Triangle(TriangleKind kind);
  Triangle(TriangleKind kind, long row_origin, long col_origin);

  TriangleKind kind() const { return kind_; }
  std::string_view name() const { return hdpart::name(kind_); }
  long row_origin() const { return row_origin_; }
  long col_origin() const { return col_origin_; }
  std::size_t row_count() const { return rows_.size(); }
  long last_row() const { return row_origin_ + static_cast<long>(rows_.size()) - 1; }
  bool has_row(long row) const { return row >= row_origin_ && row <= last_row(); }

  // Last column index of the support region of `row` for this kind.
  long support_last(long row) const;
  bool in_support(long row, long col) const;

  // True when the value is determined: outside support, or stored.
  bool known(long row, long col) const;
  Integer at(long row, long col) const;
  std::optional<Integer> get(long row, long col) const;

  // Stores a value; nonzero values outside the support throw SupportError.
  void set(long row, long col, Integer value);
  // Ensures rows up to `row` exist.
  void reserve_rows(long row);

  // Row `row` as stored (unknown entries are nullopt), from col_origin.
  const std::vector<std::optional<Integer>>& row(long row) const;
  // True when every support entry of the row is known.
  bool row_complete(long row) const;
  // Rows from the origin that are complete.
  long complete_through() const;

  // Keeps rows up to and including `row`.
  Triangle truncated(long row) const;

  friend bool operator==(const Triangle&, const Triangle&) = default;

 private:
  TriangleKind kind_;
  long row_origin_;
  long col_origin_;
  std::vector<std::vector<std::optional<Integer>>> rows_;
};

nlohmann::json to_json(const Triangle& t);
Triangle triangle_from_json(const nlohmann::json& j);
std::string to_csv(const Triangle& t);

}  // namespace hdpart
