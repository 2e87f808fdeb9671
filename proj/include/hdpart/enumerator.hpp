#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hdpart/diagram.hpp"
#include "hdpart/integer.hpp"

namespace hdpart {

inline constexpr std::size_t kMaxAmbient = 16;

struct EnumConfig {
  std::size_t ambient_dim = 1;
  std::optional<FerrersDiagram> seed;  // default: the origin alone
  std::size_t max_added = 0;
  std::optional<Coord> box;            // coordinates must stay below this bound

  FerrersDiagram seed_or_origin() const;
};

enum class Pruning {
  None,
  // Skip diagrams that cannot reach full skew support (every axis touched by a
  // non-seed node) within max_added. Totals then cover only the visited subset.
  FullSupport,
};

struct ScaleGuard {
  std::size_t max_ambient = 14;
  double max_projected_visits = 1e9;
  bool override_limits = false;
};

struct EnumOptions {
  unsigned threads = 1;
  std::size_t split_depth = 0;      // 0 picks a depth automatically
  bool serialize_visitor = false;   // run the visitor under a lock
  Pruning pruning = Pruning::None;
  // Per-component classification of full-support diagrams. Requires seed mu(ambient).
  bool classify_components = false;
  ScaleGuard guard;
  // Called from one thread roughly once a second: (visits so far, elapsed seconds).
  std::function<void(std::uint64_t, double)> progress;
};

struct DepthCounts {
  Integer total;
  std::vector<Integer> by_reduced_dim;        // index = number of axes touched by non-seed nodes
  std::vector<Integer> in_D_by_reduced_dim;   // same, restricted to all non-seed nodes Type1
  // The remaining fields are filled for full-support diagrams when components are classified.
  Integer no_sigma2;                          // no component is a lone Type1 node
  Integer no_D_component;                     // every component has a non-Type1 node
  Integer no_box2_component;                  // every component has a coordinate >= 2
  std::vector<Integer> no_D_by_type2;         // no_D_component refined by Type2 node count

  friend bool operator==(const DepthCounts&, const DepthCounts&) = default;
};

class CountLedger {
 public:
  CountLedger() = default;
  CountLedger(std::size_t ambient, std::size_t max_added);

  std::size_t ambient() const { return ambient_; }
  std::size_t max_depth() const { return depths_.size() - 1; }
  const DepthCounts& at(std::size_t depth) const { return depths_.at(depth); }
  DepthCounts& at(std::size_t depth) { return depths_.at(depth); }
  Integer total() const;

  CountLedger& operator+=(const CountLedger& o);
  friend bool operator==(const CountLedger&, const CountLedger&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<DepthCounts> depths_;
};

// View of the diagram currently visited. Valid only during the callback.
class VisitView {
 public:
  std::size_t depth() const { return depth_; }
  std::size_t reduced_dimension() const;
  FerrersDiagram diagram() const;

 private:
  friend class EnumWorker;
  const void* worker_ = nullptr;
  std::size_t depth_ = 0;
};

using Visitor = std::function<void(const VisitView&)>;

// Visits every diagram containing the seed with at most max_added extra nodes
// exactly once. Throws ConfigError before doing work if the configuration is
// invalid or exceeds the scale guard.
CountLedger enumerate(const EnumConfig& cfg, const Visitor& visitor = {}, const EnumOptions& opts = {});

// Estimated number of visits, or nullopt if no estimate is available.
std::optional<double> projected_visits(const EnumConfig& cfg);

// Convenience counters built on enumerate().
std::vector<Integer> count_pd(std::size_t d, std::size_t n_max, std::optional<Coord> box = std::nullopt,
                              const EnumOptions& opts = {});
std::vector<Integer> count_A_column(std::size_t r, std::size_t m_max, std::optional<Coord> box = std::nullopt,
                                    const EnumOptions& opts = {});
std::vector<Integer> count_C_entry(std::size_t x, std::size_t m_max, std::optional<Coord> box = std::nullopt,
                                   const EnumOptions& opts = {});
std::vector<Integer> count_D_entry(std::size_t x, std::size_t m_max, const EnumOptions& opts = {});
std::vector<Integer> count_F_column(std::size_t r, std::size_t m_max, std::optional<Coord> box = std::nullopt,
                                    const EnumOptions& opts = {});
std::vector<Integer> count_Chat_entry(std::size_t x, std::size_t m_max, const EnumOptions& opts = {});
// Index alpha = 0..m; entry 0 is always zero.
std::vector<Integer> count_forests(std::size_t m, const EnumOptions& opts = {});

}  // namespace hdpart
