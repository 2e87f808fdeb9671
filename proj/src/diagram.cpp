#include "hdpart/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hdpart/errors.hpp"

namespace hdpart {

Coord Node::sum() const { return std::accumulate(coords_.begin(), coords_.end(), Coord{0}); }

Coord Node::max() const {
  return coords_.empty() ? 0 : *std::max_element(coords_.begin(), coords_.end());
}

std::size_t Node::support_size() const {
  return static_cast<std::size_t>(std::count_if(coords_.begin(), coords_.end(), [](Coord c) { return c > 0; }));
}

Node Node::step(std::size_t axis, int delta) const {
  Node out = *this;
  out.coords_[axis] = static_cast<Coord>(static_cast<long>(out.coords_[axis]) + delta);
  return out;
}

std::string to_string(const Node& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

const char* to_string(NodeType t) {
  switch (t) {
    case NodeType::Type1: return "Type1";
    case NodeType::Type2: return "Type2";
    case NodeType::Type3: return "Type3";
  }
  return "?";
}

NodeType node_type(const Node& v) {
  Coord s = v.sum();
  if (s < 2) throw std::invalid_argument("node_type: origin and unit nodes have no type: " + to_string(v));
  if (s == 2) return v.max() == 1 ? NodeType::Type1 : NodeType::Type2;
  return NodeType::Type3;
}

std::optional<Violation> validate(std::size_t ambient, std::span<const Node> nodes) {
  for (const Node& v : nodes) {
    if (v.dim() != ambient) {
      return Violation{Violation::Kind::DimensionMismatch, v, 0,
                       "node " + to_string(v) + " has length " + std::to_string(v.dim()) +
                           ", expected " + std::to_string(ambient)};
    }
  }
  std::vector<Node> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1])
      return Violation{Violation::Kind::Duplicate, sorted[i], 0, "duplicate node " + to_string(sorted[i])};
  }
  for (const Node& v : sorted) {
    for (std::size_t i = 0; i < ambient; ++i) {
      if (v[i] == 0) continue;
      Node below = v.step(i, -1);
      if (!std::binary_search(sorted.begin(), sorted.end(), below)) {
        std::string what = below.is_origin() ? " (origin)" : "";
        return Violation{Violation::Kind::NotDownwardClosed, v, i,
                         "node " + to_string(v) + " on axis " + std::to_string(i + 1) + ": missing " +
                             to_string(below) + what};
      }
    }
  }
  return std::nullopt;
}

FerrersDiagram FerrersDiagram::from_nodes(std::size_t ambient, std::vector<Node> nodes) {
  if (auto bad = validate(ambient, nodes)) throw std::invalid_argument("invalid Ferrers diagram: " + bad->message);
  std::sort(nodes.begin(), nodes.end());
  return from_sorted_unchecked(ambient, std::move(nodes));
}

FerrersDiagram FerrersDiagram::from_sorted_unchecked(std::size_t ambient, std::vector<Node> nodes) {
  FerrersDiagram d;
  d.ambient_ = ambient;
  d.nodes_ = std::move(nodes);
  return d;
}

bool FerrersDiagram::contains(const Node& v) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), v);
}

FerrersDiagram FerrersDiagram::with_nodes(std::span<const Node> extra) const {
  std::vector<Node> all = nodes_;
  all.insert(all.end(), extra.begin(), extra.end());
  return from_nodes(ambient_, std::move(all));
}

FerrersDiagram mu(std::size_t r) {
  std::vector<Node> nodes;
  nodes.emplace_back(r);
  for (std::size_t i = 0; i < r; ++i) nodes.push_back(Node(r).step(i, 1));
  std::sort(nodes.begin(), nodes.end());
  return FerrersDiagram::from_sorted_unchecked(r, std::move(nodes));
}

std::size_t intrinsic_dimension(const FerrersDiagram& d) {
  std::vector<bool> used(d.ambient_dim(), false);
  for (const Node& v : d.nodes())
    for (std::size_t i = 0; i < v.dim(); ++i)
      if (v[i] > 0) used[i] = true;
  return static_cast<std::size_t>(std::count(used.begin(), used.end(), true));
}

bool is_strict(const FerrersDiagram& d) { return intrinsic_dimension(d) == d.ambient_dim(); }

std::vector<Node> skew_nodes(const FerrersDiagram& d) {
  std::vector<Node> out;
  for (const Node& v : d.nodes())
    if (v.sum() >= 2) out.push_back(v);
  return out;
}

namespace {

void require_strict(const FerrersDiagram& d, const char* what) {
  if (!is_strict(d))
    throw std::invalid_argument(std::string(what) + ": diagram is not strict (i.d. " +
                                std::to_string(intrinsic_dimension(d)) + " < ambient " +
                                std::to_string(d.ambient_dim()) + ")");
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

}  // namespace

std::size_t reduced_dimension(const FerrersDiagram& d) {
  require_strict(d, "reduced_dimension");
  std::vector<bool> used(d.ambient_dim(), false);
  for (const Node& v : skew_nodes(d))
    for (std::size_t i = 0; i < v.dim(); ++i)
      if (v[i] > 0) used[i] = true;
  return static_cast<std::size_t>(std::count(used.begin(), used.end(), true));
}

SkewComponents skew_components(const FerrersDiagram& d) {
  require_strict(d, "skew_components");
  const std::size_t r = d.ambient_dim();
  SkewComponents out;
  out.base = mu(r);
  std::vector<Node> skew = skew_nodes(d);

  std::vector<std::size_t> parent(r);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::vector<bool> touched(r, false);
  for (const Node& v : skew) {
    out.types.emplace_back(v, node_type(v));
    std::optional<std::size_t> first;
    for (std::size_t i = 0; i < r; ++i) {
      if (v[i] == 0) continue;
      touched[i] = true;
      if (!first) {
        first = i;
      } else {
        parent[find_root(parent, i)] = find_root(parent, *first);
      }
    }
  }

  std::vector<std::optional<std::size_t>> slot(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (!touched[i]) continue;
    std::size_t root = find_root(parent, i);
    if (!slot[root]) {
      slot[root] = out.components.size();
      out.components.push_back(SkewComponent{{}, {}, true, true});
    }
    out.components[*slot[root]].axes.push_back(i);
  }
  for (const Node& v : skew) {
    std::size_t axis = 0;
    while (v[axis] == 0) ++axis;
    SkewComponent& c = out.components[*slot[find_root(parent, axis)]];
    c.nodes.push_back(v);
    if (node_type(v) != NodeType::Type1) c.in_D = false;
    if (v.max() >= 2) c.in_box2 = false;
  }
  return out;
}

std::size_t orbit_weight(const FerrersDiagram& d) {
  const std::size_t r = d.ambient_dim();
  if (r > 8) throw ConfigError("orbit_weight: ambient dimension " + std::to_string(r) + " exceeds the cap of 8");
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::set<std::vector<Node>> images;
  do {
    images.insert(permute_axes(d, perm).nodes());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return images.size();
}

bool in_box(const FerrersDiagram& d, Coord b) {
  for (const Node& v : d.nodes())
    if (v.max() >= b) return false;
  return true;
}

bool in_D(const FerrersDiagram& d) {
  require_strict(d, "in_D");
  for (const Node& v : skew_nodes(d))
    if (node_type(v) != NodeType::Type1) return false;
  return true;
}

FerrersDiagram permute_axes(const FerrersDiagram& d, std::span<const std::size_t> perm) {
  const std::size_t r = d.ambient_dim();
  if (perm.size() != r) throw std::invalid_argument("permute_axes: permutation length mismatch");
  std::vector<Node> nodes;
  nodes.reserve(d.size());
  for (const Node& v : d.nodes()) {
    Node w(r);
    for (std::size_t i = 0; i < r; ++i) w[perm[i]] = v[i];
    nodes.push_back(std::move(w));
  }
  std::sort(nodes.begin(), nodes.end());
  return FerrersDiagram::from_sorted_unchecked(r, std::move(nodes));
}

nlohmann::json to_json(const FerrersDiagram& d) {
  nlohmann::json cols = nlohmann::json::array();
  for (const Node& v : d.nodes()) cols.push_back(v.coords());
  return cols;
}

FerrersDiagram diagram_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("diagram JSON must be a nonempty array of columns");
  std::vector<Node> nodes;
  for (const auto& col : j) nodes.emplace_back(col.get<std::vector<Coord>>());
  std::size_t ambient = nodes.front().dim();
  return FerrersDiagram::from_nodes(ambient, std::move(nodes));
}

}  // namespace hdpart
