#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace hdpart {

using Coord = std::uint32_t;

// A lattice point in Z_+^r.
class Node {
 public:
  Node() = default;
  explicit Node(std::size_t dim) : coords_(dim, 0) {}
  Node(std::initializer_list<Coord> coords) : coords_(coords) {}
  explicit Node(std::vector<Coord> coords) : coords_(std::move(coords)) {}

  std::size_t dim() const { return coords_.size(); }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  Coord& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Coord>& coords() const { return coords_; }

  Coord sum() const;
  Coord max() const;
  std::size_t support_size() const;
  bool is_origin() const { return sum() == 0; }
  bool is_unit() const { return sum() == 1; }

  Node step(std::size_t axis, int delta) const;

  friend auto operator<=>(const Node&, const Node&) = default;
  friend bool operator==(const Node&, const Node&) = default;

 private:
  std::vector<Coord> coords_;
};

std::string to_string(const Node& v);

enum class NodeType { Type1, Type2, Type3 };

const char* to_string(NodeType t);

// Classifies a skew node by its coordinate multiset.
// Throws std::invalid_argument for the origin and unit nodes.
NodeType node_type(const Node& v);

struct Violation {
  enum class Kind { DimensionMismatch, Duplicate, NotDownwardClosed };
  Kind kind;
  Node node;
  std::size_t axis = 0;  // 0-based; meaningful for NotDownwardClosed
  std::string message;
};

// Returns the first violation in lexicographic node order, or nullopt when the
// node set is a valid Ferrers diagram in ambient dimension `ambient`.
std::optional<Violation> validate(std::size_t ambient, std::span<const Node> nodes);

// An immutable downward-closed node set, stored in lexicographic order.
class FerrersDiagram {
 public:
  FerrersDiagram() = default;

  // Throws std::invalid_argument carrying the violation message if invalid.
  static FerrersDiagram from_nodes(std::size_t ambient, std::vector<Node> nodes);
  // Caller guarantees `nodes` are valid and sorted.
  static FerrersDiagram from_sorted_unchecked(std::size_t ambient, std::vector<Node> nodes);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  const std::vector<Node>& nodes() const { return nodes_; }
  bool contains(const Node& v) const;

  FerrersDiagram with_nodes(std::span<const Node> extra) const;

  friend bool operator==(const FerrersDiagram&, const FerrersDiagram&) = default;
  friend auto operator<=>(const FerrersDiagram&, const FerrersDiagram&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Node> nodes_;
};

// Origin plus the r unit nodes, in ambient dimension r.
FerrersDiagram mu(std::size_t r);

std::size_t intrinsic_dimension(const FerrersDiagram& d);
bool is_strict(const FerrersDiagram& d);

// Nodes of d outside mu(ambient): coordinate sum at least 2.
std::vector<Node> skew_nodes(const FerrersDiagram& d);

// Throws std::invalid_argument for non-strict input.
std::size_t reduced_dimension(const FerrersDiagram& d);

struct SkewComponent {
  std::vector<Node> nodes;
  std::vector<std::size_t> axes;  // sorted supporting axes
  bool in_D = false;              // all nodes Type1
  bool in_box2 = false;           // all coordinates < 2
};

struct SkewComponents {
  FerrersDiagram base;
  std::vector<SkewComponent> components;  // ordered by smallest axis
  std::vector<std::pair<Node, NodeType>> types;

  bool irreducible() const { return components.size() <= 1; }
};

// Throws std::invalid_argument for non-strict input.
SkewComponents skew_components(const FerrersDiagram& d);

// Size of the orbit of d under permutations of the axes. Cost grows with r!,
// so ambient dimensions above 8 are refused with ConfigError.
std::size_t orbit_weight(const FerrersDiagram& d);

bool in_box(const FerrersDiagram& d, Coord b);
// Throws std::invalid_argument for non-strict input.
bool in_D(const FerrersDiagram& d);

// Applies new_axis[i] = perm[i] to every node.
FerrersDiagram permute_axes(const FerrersDiagram& d, std::span<const std::size_t> perm);

// Compressed form: an array of node columns.
nlohmann::json to_json(const FerrersDiagram& d);
FerrersDiagram diagram_from_json(const nlohmann::json& j);

}  // namespace hdpart
