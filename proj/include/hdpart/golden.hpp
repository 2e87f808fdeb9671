#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hdpart/integer.hpp"
#include "hdpart/transforms.hpp"
#include "hdpart/triangle.hpp"

namespace hdpart {

enum class GoldenId { Pd, A, C, F, D, Beta, Cbox2, Fbox2, ChatDisplay, FhatDisplay };

std::string_view golden_name(GoldenId id);
// Throws std::invalid_argument for unknown ids.
GoldenId parse_golden_id(std::string_view text);
std::vector<GoldenId> all_golden_ids();

struct GoldenEntry {
  long row;
  long col;
  Integer value;
};

struct GoldenTable {
  GoldenId id;
  std::string title;
  std::string row_label;
  std::string col_label;
  std::vector<std::string> notes;
  long row_origin = 0;
  long col_origin = 0;
  std::vector<GoldenEntry> entries;  // numeric entries only, row-major

  std::optional<Integer> lookup(long row, long col) const;
};

const GoldenTable& golden(GoldenId id);
// The embedded resource, verbatim.
std::string_view golden_json_text();

// The triangle kind a golden table is compared against; throws for Pd.
TriangleKind golden_kind(GoldenId id);
const Triangle& golden_triangle(GoldenId id);
const PartitionTable& golden_pd();

// Working data assembled from the golden tables:
// A rows 1..25 from the F table, C rows 0..10 with the unprinted c_{10,20}
// filled in, A^box2 entries with m <= 10 from the C^box2 table.
const Triangle& reference_A();
const Triangle& reference_C();
const Triangle& reference_Abox2();

struct Mismatch {
  long row;
  long col;
  Integer computed;
  Integer expected;
};

struct VerifyReport {
  std::string table;
  std::size_t matched = 0;
  std::size_t uncovered = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
  std::string summary() const;
};

VerifyReport verify(const Triangle& computed, GoldenId id);
VerifyReport verify(const PartitionTable& computed, GoldenId id = GoldenId::Pd);

}  // namespace hdpart
