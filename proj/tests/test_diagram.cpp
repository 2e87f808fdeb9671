#include <doctest.h>

#include <numeric>
#include <random>

#include "hdpart/diagram.hpp"
#include "hdpart/enumerator.hpp"
#include "hdpart/errors.hpp"
#include "oracles.hpp"

using namespace hdpart;

namespace {

FerrersDiagram D(std::size_t r, std::vector<Node> nodes) { return FerrersDiagram::from_nodes(r, std::move(nodes)); }

// Smallest number of axes whose coordinate subspace holds every node.
std::size_t min_hyperplane_dim(const FerrersDiagram& d) {
  const std::size_t r = d.ambient_dim();
  std::size_t best = r;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    bool fits = true;
    for (const Node& v : d.nodes())
      for (std::size_t i = 0; i < r; ++i)
        if (v[i] > 0 && !(mask >> i & 1)) fits = false;
    if (fits) best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

std::vector<FerrersDiagram> small_diagrams(std::size_t r, std::size_t n_max) {
  std::vector<FerrersDiagram> out;
  for (const auto& [n, set] : oracle::all_diagrams(r, n_max))
    for (const auto& nodes : set) out.push_back(FerrersDiagram::from_sorted_unchecked(r, nodes));
  return out;
}

std::size_t factorial_small(std::size_t n) { return n <= 1 ? 1 : n * factorial_small(n - 1); }

}  // namespace

TEST_CASE("mu builds the origin plus unit nodes") {
  CHECK(mu(0).size() == 1);
  CHECK(mu(0).nodes().front().dim() == 0);
  CHECK(mu(2) == D(2, {{0, 0}, {1, 0}, {0, 1}}));
  CHECK(mu(3).size() == 4);
  CHECK(intrinsic_dimension(mu(3)) == 3);
}

TEST_CASE("validate reports the first violation") {
  std::vector<Node> ok{{0, 0}, {1, 0}, {0, 1}, {0, 2}};
  CHECK_FALSE(validate(2, ok));

  std::vector<Node> no_origin{{1, 0}};
  auto v = validate(2, no_origin);
  REQUIRE(v);
  CHECK(v->kind == Violation::Kind::NotDownwardClosed);
  CHECK(v->node == Node{1, 0});
  CHECK(v->message.find("origin") != std::string::npos);

  std::vector<Node> gap{{0, 0}, {0, 2}};
  v = validate(2, gap);
  REQUIRE(v);
  CHECK(v->node == Node{0, 2});
  CHECK(v->axis == 1);
  CHECK(v->message.find("(0,1)") != std::string::npos);

  std::vector<Node> dup{{0}, {0}};
  CHECK(validate(1, dup)->kind == Violation::Kind::Duplicate);
  std::vector<Node> wrong_len{{0, 0, 0}};
  CHECK(validate(2, wrong_len)->kind == Violation::Kind::DimensionMismatch);
  CHECK_THROWS_AS(D(2, {{0, 0}, {0, 2}}), std::invalid_argument);
}

TEST_CASE("intrinsic dimension") {
  CHECK(intrinsic_dimension(D(3, {{0, 0, 0}})) == 0);
  for (std::size_t r = 0; r <= 5; ++r) CHECK(intrinsic_dimension(mu(r)) == r);
  CHECK(intrinsic_dimension(D(2, {{0, 0}, {1, 0}, {0, 1}, {0, 2}})) == 2);
  for (const auto& d : small_diagrams(3, 7)) CHECK(intrinsic_dimension(d) == min_hyperplane_dim(d));
}

TEST_CASE("reduced dimension") {
  for (std::size_t r = 0; r <= 4; ++r) CHECK(reduced_dimension(mu(r)) == 0);
  CHECK(reduced_dimension(D(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}})) == 2);
  CHECK(reduced_dimension(D(1, {{0}, {1}, {2}})) == 1);
  CHECK_THROWS_AS(reduced_dimension(D(2, {{0, 0}, {1, 0}})), std::invalid_argument);
}

TEST_CASE("node types") {
  CHECK(node_type({1, 1, 0}) == NodeType::Type1);
  CHECK(node_type({2, 0}) == NodeType::Type2);
  CHECK(node_type({1, 1, 1}) == NodeType::Type3);
  CHECK(node_type({2, 1}) == NodeType::Type3);
  CHECK(node_type({3}) == NodeType::Type3);
  CHECK_THROWS_AS(node_type({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(node_type({0, 1}), std::invalid_argument);
}

TEST_CASE("skew components") {
  auto s22 = D(4, {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 0, 0}, {0, 0, 1, 1}});
  auto comps = skew_components(s22);
  REQUIRE(comps.components.size() == 2);
  CHECK(comps.components[0].axes == std::vector<std::size_t>{0, 1});
  CHECK(comps.components[1].axes == std::vector<std::size_t>{2, 3});
  CHECK(comps.components[0].in_D);
  CHECK_FALSE(comps.irreducible());
  CHECK(comps.base == mu(4));

  auto sigma3 = D(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}});
  comps = skew_components(sigma3);
  CHECK(comps.components.size() == 1);
  CHECK(comps.irreducible());
  CHECK(reduced_dimension(sigma3) == 3);

  CHECK(skew_components(mu(3)).components.empty());

  // A Type2 node attaches to the component of its axis.
  auto mixed = D(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0}, {1, 1, 0}});
  comps = skew_components(mixed);
  REQUIRE(comps.components.size() == 1);
  CHECK_FALSE(comps.components[0].in_D);
  CHECK_FALSE(comps.components[0].in_box2);
  CHECK(comps.types.size() == 2);
}

TEST_CASE("orbit weight") {
  for (std::size_t r = 1; r <= 5; ++r) CHECK(orbit_weight(mu(r)) == 1);
  CHECK(orbit_weight(D(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}})) == 1);
  CHECK(orbit_weight(D(2, {{0, 0}, {1, 0}, {0, 1}, {2, 0}})) == 2);
  CHECK_THROWS_AS(orbit_weight(mu(9)), ConfigError);
}

TEST_CASE("box and D membership") {
  for (std::size_t r = 1; r <= 4; ++r) {
    CHECK(in_box(mu(r), 2));
    CHECK(in_D(mu(r)));
  }
  CHECK(in_D(D(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}})));
  auto s1 = D(1, {{0}, {1}, {2}});
  CHECK_FALSE(in_box(s1, 2));
  CHECK(in_box(s1, 3));
  CHECK_FALSE(in_D(s1));
}

TEST_CASE("compressed JSON form round-trips") {
  auto d = D(2, {{0, 0}, {1, 0}, {0, 1}, {0, 2}});
  auto j = to_json(d);
  CHECK(j.dump() == "[[0,0],[0,1],[0,2],[1,0]]");
  CHECK(diagram_from_json(j) == d);
  CHECK_THROWS(diagram_from_json(nlohmann::json::parse("[[0,0],[0,2]]")));
}

TEST_CASE("attribute bounds over all small diagrams") {
  for (std::size_t r = 1; r <= 4; ++r) {
    for (const auto& d : small_diagrams(r, r == 4 ? 7 : 8)) {
      const std::size_t id = intrinsic_dimension(d);
      CHECK(id <= d.size() - 1);
      if (!is_strict(d)) continue;
      const std::size_t rd = reduced_dimension(d);
      const std::size_t m = d.size() - r - 1;
      CHECK(rd <= id);
      CHECK(rd <= 2 * m);
      const std::size_t w = orbit_weight(d);
      CHECK(factorial_small(r) % w == 0);
      if (in_D(d)) CHECK(in_box(d, 2));
    }
  }
}

TEST_CASE("irreducible skew diagrams: r.d. <= m+1 with equality only in D") {
  for (std::size_t r = 1; r <= 6; ++r) {
    EnumConfig cfg{r, mu(r), std::min<std::size_t>(5, r + 2), std::nullopt};
    enumerate(cfg, [&](const VisitView& v) {
      const std::size_t m = v.depth();
      if (m == 0) return;
      FerrersDiagram d = v.diagram();
      if (reduced_dimension(d) != r) return;
      auto comps = skew_components(d);
      if (!comps.irreducible()) return;
      CHECK(r <= m + 1);
      if (r == m + 1) CHECK(in_D(d));
    });
  }
}

TEST_CASE("attributes are invariant under axis permutations") {
  std::mt19937 rng(12345);
  for (std::size_t r = 2; r <= 4; ++r) {
    for (const auto& d : small_diagrams(r, 7)) {
      std::vector<std::size_t> perm(r);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      FerrersDiagram p = permute_axes(d, perm);
      CHECK(!validate(r, p.nodes()));
      CHECK(intrinsic_dimension(p) == intrinsic_dimension(d));
      CHECK(in_box(p, 2) == in_box(d, 2));
      if (!is_strict(d)) continue;
      CHECK(reduced_dimension(p) == reduced_dimension(d));
      CHECK(skew_components(p).components.size() == skew_components(d).components.size());
      CHECK(orbit_weight(p) == orbit_weight(d));
      CHECK(in_D(p) == in_D(d));
    }
  }
}
