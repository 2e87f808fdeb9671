#include "hdpart/enumerator.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <thread>

#include "hdpart/errors.hpp"
#include "hdpart/golden.hpp"
#include "hdpart/transforms.hpp"

namespace hdpart {

FerrersDiagram EnumConfig::seed_or_origin() const {
  if (seed) return *seed;
  return FerrersDiagram::from_sorted_unchecked(ambient_dim, {Node(ambient_dim)});
}

CountLedger::CountLedger(std::size_t ambient, std::size_t max_added) : ambient_(ambient), depths_(max_added + 1) {
  for (auto& d : depths_) {
    d.by_reduced_dim.assign(ambient + 1, 0);
    d.in_D_by_reduced_dim.assign(ambient + 1, 0);
    d.no_D_by_type2.assign(max_added + 1, 0);
  }
}

Integer CountLedger::total() const {
  Integer sum = 0;
  for (const auto& d : depths_) sum += d.total;
  return sum;
}

CountLedger& CountLedger::operator+=(const CountLedger& o) {
  if (o.ambient_ != ambient_ || o.depths_.size() != depths_.size())
    throw std::invalid_argument("CountLedger: merging ledgers of different shapes");
  auto add = [](std::vector<Integer>& a, const std::vector<Integer>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  };
  for (std::size_t k = 0; k < depths_.size(); ++k) {
    DepthCounts& a = depths_[k];
    const DepthCounts& b = o.depths_[k];
    a.total += b.total;
    add(a.by_reduced_dim, b.by_reduced_dim);
    add(a.in_D_by_reduced_dim, b.in_D_by_reduced_dim);
    a.no_sigma2 += b.no_sigma2;
    a.no_D_component += b.no_D_component;
    a.no_box2_component += b.no_box2_component;
    add(a.no_D_by_type2, b.no_D_by_type2);
  }
  return *this;
}

namespace {

struct Cell {
  std::uint64_t code = 0;
  std::uint16_t mask = 0;   // axes with a nonzero coordinate
  std::uint8_t type = 0;    // 1, 2, 3 for skew nodes; 0 for coordinate sum < 2
  std::uint8_t big = 0;     // some coordinate >= 2
  std::array<std::uint8_t, kMaxAmbient> x{};
};

// Open-addressing set of node codes. Removal is only ever of the most recently
// inserted key, which keeps linear probing valid without tombstones.
class CodeSet {
 public:
  explicit CodeSet(std::size_t max_keys) {
    std::size_t cap = 16;
    while (cap < 4 * max_keys) cap <<= 1;
    slots_.assign(cap, kEmpty);
    mask_ = cap - 1;
  }
  bool contains(std::uint64_t key) const {
    for (std::size_t i = hash(key);; i = (i + 1) & mask_) {
      if (slots_[i] == key) return true;
      if (slots_[i] == kEmpty) return false;
    }
  }
  void insert(std::uint64_t key) {
    std::size_t i = hash(key);
    while (slots_[i] != kEmpty) i = (i + 1) & mask_;
    slots_[i] = key;
  }
  void erase_last(std::uint64_t key) {
    for (std::size_t i = hash(key);; i = (i + 1) & mask_) {
      if (slots_[i] == key) {
        slots_[i] = kEmpty;
        return;
      }
    }
  }

 private:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};
  std::size_t hash(std::uint64_t key) const {
    return static_cast<std::size_t>((key * 0x9E3779B97F4A7C15ull) >> 17) & mask_;
  }
  std::vector<std::uint64_t> slots_;
  std::size_t mask_ = 0;
};

struct Plan {
  std::size_t r = 0;
  std::size_t max_added = 0;
  unsigned bound = 0;  // exclusive coordinate bound
  std::array<std::uint64_t, kMaxAmbient> stride{};
  std::vector<Cell> seed;
  std::vector<Cell> root_frontier;
  Pruning pruning = Pruning::None;
  bool classify = false;

  Cell make_cell(const std::array<std::uint8_t, kMaxAmbient>& x) const {
    Cell c;
    c.x = x;
    unsigned sum = 0, mx = 0;
    for (std::size_t i = 0; i < r; ++i) {
      c.code += x[i] * stride[i];
      if (x[i]) c.mask = static_cast<std::uint16_t>(c.mask | (1u << i));
      sum += x[i];
      mx = std::max<unsigned>(mx, x[i]);
    }
    c.big = mx >= 2;
    if (sum >= 2) c.type = sum == 2 ? (mx == 1 ? 1 : 2) : 3;
    return c;
  }
};

struct RawLedger {
  std::size_t width = 0;
  std::vector<std::uint64_t> total, by_rd, in_D_by_rd, no_sigma2, no_D, no_box2, no_D_by_type2;

  RawLedger(std::size_t r, std::size_t depths)
      : width(r + 1),
        total(depths),
        by_rd(depths * (r + 1)),
        in_D_by_rd(depths * (r + 1)),
        no_sigma2(depths),
        no_D(depths),
        no_box2(depths),
        no_D_by_type2(depths * depths) {}

  void add_to(CountLedger& out) const {
    std::size_t depths = total.size();
    for (std::size_t k = 0; k < depths; ++k) {
      DepthCounts& d = out.at(k);
      auto big = [](std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); };
      d.total += big(total[k]);
      for (std::size_t x = 0; x < width; ++x) {
        d.by_reduced_dim[x] += big(by_rd[k * width + x]);
        d.in_D_by_reduced_dim[x] += big(in_D_by_rd[k * width + x]);
      }
      d.no_sigma2 += big(no_sigma2[k]);
      d.no_D_component += big(no_D[k]);
      d.no_box2_component += big(no_box2[k]);
      for (std::size_t a = 0; a < depths; ++a) d.no_D_by_type2[a] += big(no_D_by_type2[k * depths + a]);
    }
  }
};

struct Task {
  std::vector<Cell> path;
  std::vector<Cell> frontier;
};

struct Shared {
  const Visitor* visitor = nullptr;
  bool serialize = false;
  std::mutex visitor_mutex;
  const std::function<void(std::uint64_t, double)>* progress = nullptr;
  std::mutex progress_mutex;
  std::atomic<std::uint64_t> visits{0};
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double last_report = 0;
};

}  // namespace

class EnumWorker {
 public:
  EnumWorker(const Plan& plan, Shared& shared)
      : plan_(plan),
        shared_(shared),
        set_(plan.seed.size() + plan.max_added + 1),
        ledger_(plan.r, plan.max_added + 1),
        frontiers_(plan.max_added + 2) {
    for (const Cell& c : plan.seed) set_.insert(c.code);
  }

  const RawLedger& ledger() const { return ledger_; }

  void run_root(std::size_t split_depth, std::vector<Task>* tasks) {
    split_ = split_depth;
    tasks_ = tasks;
    frontiers_[0] = plan_.root_frontier;
    descend(0);
    flush_progress();
  }

  void run_task(const Task& task) {
    split_ = 0;
    tasks_ = nullptr;
    for (const Cell& c : task.path) push(c);
    frontiers_[path_.size()] = task.frontier;
    descend(path_.size());
    while (!path_.empty()) pop();
  }

  void flush_progress() {
    if (local_visits_) shared_.visits += local_visits_;
    local_visits_ = 0;
  }

  // Used by VisitView.
  std::size_t mask_popcount() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  FerrersDiagram materialize() const {
    std::vector<Node> nodes;
    nodes.reserve(plan_.seed.size() + path_.size());
    auto decode = [&](const Cell& c) {
      Node v(plan_.r);
      for (std::size_t i = 0; i < plan_.r; ++i) v[i] = c.x[i];
      nodes.push_back(std::move(v));
    };
    for (const Cell& c : plan_.seed) decode(c);
    for (const Cell& c : path_) decode(c);
    std::sort(nodes.begin(), nodes.end());
    return FerrersDiagram::from_sorted_unchecked(plan_.r, std::move(nodes));
  }

 private:
  void push(const Cell& c) {
    path_.push_back(c);
    set_.insert(c.code);
    masks_.push_back(mask_);
    mask_ |= c.mask;
    if (c.type != 1) ++non_type1_;
  }

  void pop() {
    const Cell& c = path_.back();
    if (c.type != 1) --non_type1_;
    set_.erase_last(c.code);
    mask_ = masks_.back();
    masks_.pop_back();
    path_.pop_back();
  }

  bool prunable(std::size_t depth, std::uint16_t mask) const {
    if (plan_.pruning != Pruning::FullSupport) return false;
    return static_cast<std::size_t>(std::popcount(mask)) + 2 * (plan_.max_added - depth) < plan_.r;
  }

  void descend(std::size_t depth) {
    visit(depth);
    if (depth == plan_.max_added) return;
    const std::vector<Cell>& frontier = frontiers_[depth];
    std::vector<Cell>& child = frontiers_[depth + 1];
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const Cell v = frontier[i];
      if (prunable(depth + 1, static_cast<std::uint16_t>(mask_ | v.mask))) continue;
      push(v);
      if (depth + 1 < plan_.max_added) build_child_frontier(frontier, i, child);
      if (tasks_ && depth + 1 == split_) {
        tasks_->push_back(Task{path_, depth + 1 < plan_.max_added ? child : std::vector<Cell>{}});
      } else {
        descend(depth + 1);
      }
      pop();
    }
  }

  void build_child_frontier(const std::vector<Cell>& frontier, std::size_t i, std::vector<Cell>& child) {
    const Cell& v = frontier[i];
    fresh_.clear();
    for (std::size_t a = plan_.r; a-- > 0;) {
      if (v.x[a] + 1u >= plan_.bound) continue;
      std::uint64_t code = v.code + plan_.stride[a];
      bool addable = true;
      for (std::size_t b = 0; b < plan_.r && addable; ++b) {
        if (b == a) continue;
        if (v.x[b] > 0 && !set_.contains(code - plan_.stride[b])) addable = false;
      }
      if (!addable) continue;
      auto x = v.x;
      ++x[a];
      fresh_.push_back(plan_.make_cell(x));
    }
    child.clear();
    auto rest = frontier.begin() + static_cast<std::ptrdiff_t>(i + 1);
    std::merge(rest, frontier.end(), fresh_.begin(), fresh_.end(), std::back_inserter(child),
               [](const Cell& p, const Cell& q) { return p.code < q.code; });
  }

  void visit(std::size_t depth) {
    const std::size_t rd = static_cast<std::size_t>(std::popcount(mask_));
    const std::size_t w = plan_.r + 1;
    ++ledger_.total[depth];
    ++ledger_.by_rd[depth * w + rd];
    if (non_type1_ == 0) ++ledger_.in_D_by_rd[depth * w + rd];
    if (plan_.classify && rd == plan_.r) classify(depth);

    if (shared_.visitor && *shared_.visitor) {
      VisitView view;
      view.worker_ = this;
      view.depth_ = depth;
      if (shared_.serialize) {
        std::lock_guard lock(shared_.visitor_mutex);
        (*shared_.visitor)(view);
      } else {
        (*shared_.visitor)(view);
      }
    }

    if (++local_visits_ == (1u << 16)) {
      flush_progress();
      report_progress();
    }
  }

  void report_progress() {
    if (!shared_.progress || !*shared_.progress) return;
    std::unique_lock lock(shared_.progress_mutex, std::try_to_lock);
    if (!lock) return;
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - shared_.start).count();
    if (elapsed - shared_.last_report < 1.0) return;
    shared_.last_report = elapsed;
    (*shared_.progress)(shared_.visits.load(), elapsed);
  }

  void classify(std::size_t depth) {
    struct Comp {
      std::uint16_t mask;
      std::uint8_t nodes;
      bool non_type1;
      bool big;
    };
    std::array<Comp, kMaxAmbient> comps;
    std::size_t count = 0;
    std::size_t type2 = 0;
    for (const Cell& c : path_) {
      if (c.type == 2) ++type2;
      Comp merged{c.mask, 1, c.type != 1, c.big != 0};
      std::size_t j = 0;
      while (j < count) {
        if (comps[j].mask & merged.mask) {
          merged.mask = static_cast<std::uint16_t>(merged.mask | comps[j].mask);
          merged.nodes = static_cast<std::uint8_t>(merged.nodes + comps[j].nodes);
          merged.non_type1 = merged.non_type1 || comps[j].non_type1;
          merged.big = merged.big || comps[j].big;
          comps[j] = comps[--count];
        } else {
          ++j;
        }
      }
      comps[count++] = merged;
    }
    bool sigma2 = false, d_comp = false, box2_comp = false;
    for (std::size_t j = 0; j < count; ++j) {
      if (comps[j].nodes == 1 && !comps[j].non_type1) sigma2 = true;
      if (!comps[j].non_type1) d_comp = true;
      if (!comps[j].big) box2_comp = true;
    }
    if (!sigma2) ++ledger_.no_sigma2[depth];
    if (!box2_comp) ++ledger_.no_box2[depth];
    if (!d_comp) {
      ++ledger_.no_D[depth];
      ++ledger_.no_D_by_type2[depth * ledger_.total.size() + type2];
    }
  }

  const Plan& plan_;
  Shared& shared_;
  CodeSet set_;
  RawLedger ledger_;
  std::vector<std::vector<Cell>> frontiers_;
  std::vector<Cell> fresh_;
  std::vector<Cell> path_;
  std::vector<std::uint16_t> masks_;
  std::uint16_t mask_ = 0;
  std::size_t non_type1_ = 0;
  std::size_t split_ = 0;
  std::vector<Task>* tasks_ = nullptr;
  std::uint64_t local_visits_ = 0;
};

std::size_t VisitView::reduced_dimension() const {
  return static_cast<const EnumWorker*>(worker_)->mask_popcount();
}

FerrersDiagram VisitView::diagram() const { return static_cast<const EnumWorker*>(worker_)->materialize(); }

namespace {

double sum_pd(std::size_t ambient, std::size_t n_lo, std::size_t n_hi, bool& known) {
  const long d = static_cast<long>(ambient) - 1;
  double total = 0;
  if (d == 0) return static_cast<double>(n_hi - n_lo + 1);
  if (d == 1) {
    auto p = euler_partitions(static_cast<long>(n_hi));
    for (std::size_t n = n_lo; n <= n_hi; ++n) total += p[n].get_d();
    return total;
  }
  const Triangle& A = reference_A();
  if (static_cast<long>(n_hi) > A.last_row()) {
    known = false;
    return 0;
  }
  for (std::size_t n = n_lo; n <= n_hi; ++n) total += pd_from_A(A, static_cast<long>(n), d).get_d();
  return total;
}

void check_config(const EnumConfig& cfg, const EnumOptions& opts, const FerrersDiagram& seed) {
  const std::size_t r = cfg.ambient_dim;
  if (r == 0) throw ConfigError("ambient dimension must be positive");
  if (r > kMaxAmbient) throw ConfigError("ambient dimension " + std::to_string(r) + " exceeds the hard limit of 16");
  if (r > opts.guard.max_ambient && !opts.guard.override_limits)
    throw ConfigError("ambient dimension " + std::to_string(r) + " exceeds the scale guard of " +
                      std::to_string(opts.guard.max_ambient));
  if (seed.ambient_dim() != r) throw ConfigError("seed ambient dimension does not match the configuration");
  if (seed.empty()) throw ConfigError("seed diagram is empty");
  if (auto bad = validate(r, seed.nodes())) throw ConfigError("seed diagram is invalid: " + bad->message);
  if (cfg.box && *cfg.box == 0) throw ConfigError("box bound must be positive");
  if (cfg.box && !in_box(seed, *cfg.box)) throw ConfigError("seed diagram does not fit the box");
  if (opts.classify_components && seed != mu(r))
    throw ConfigError("component classification requires the seed mu(ambient)");
  if (!opts.guard.override_limits) {
    auto projected = projected_visits(cfg);
    if (!projected)
      throw ConfigError("no visit-count projection is available for this configuration; override the scale guard to run it");
    if (*projected > opts.guard.max_projected_visits)
    {
      char buf[96];
      std::snprintf(buf, sizeof buf, "projected %.3g visits exceed the scale guard of %.3g", *projected,
                    opts.guard.max_projected_visits);
      throw ConfigError(buf);
    }
  }
}

Plan make_plan(const EnumConfig& cfg, const EnumOptions& opts, const FerrersDiagram& seed) {
  Plan plan;
  plan.r = cfg.ambient_dim;
  plan.max_added = cfg.max_added;
  plan.pruning = opts.pruning;
  plan.classify = opts.classify_components;
  Coord seed_max = 0;
  for (const Node& v : seed.nodes()) seed_max = std::max(seed_max, v.max());
  std::uint64_t bound = static_cast<std::uint64_t>(seed_max) + cfg.max_added + 1;
  if (cfg.box) bound = std::min<std::uint64_t>(bound, *cfg.box);
  bound = std::max<std::uint64_t>(bound, seed_max + 1);
  if (bound > 255) throw ConfigError("coordinates would exceed 254; reduce max_added or set a box");
  plan.bound = static_cast<unsigned>(bound);
  long double space = std::pow(static_cast<long double>(bound), static_cast<long double>(plan.r));
  if (space >= 9.2e18L) throw ConfigError("node code space exceeds 63 bits for this dimension and depth");
  std::uint64_t s = 1;
  for (std::size_t i = plan.r; i-- > 0;) {
    plan.stride[i] = s;
    s *= bound;
  }
  auto to_x = [&](const Node& v) {
    std::array<std::uint8_t, kMaxAmbient> x{};
    for (std::size_t i = 0; i < plan.r; ++i) x[i] = static_cast<std::uint8_t>(v[i]);
    return x;
  };
  for (const Node& v : seed.nodes()) plan.seed.push_back(plan.make_cell(to_x(v)));
  if (cfg.max_added > 0) {
    std::vector<Node> addable;
    for (const Node& v : seed.nodes()) {
      for (std::size_t a = 0; a < plan.r; ++a) {
        if (v[a] + 1 >= plan.bound) continue;
        Node w = v.step(a, 1);
        if (seed.contains(w)) continue;
        bool ok = true;
        for (std::size_t b = 0; b < plan.r && ok; ++b)
          if (w[b] > 0 && !seed.contains(w.step(b, -1))) ok = false;
        if (ok) addable.push_back(std::move(w));
      }
    }
    std::sort(addable.begin(), addable.end());
    addable.erase(std::unique(addable.begin(), addable.end()), addable.end());
    for (const Node& w : addable) plan.root_frontier.push_back(plan.make_cell(to_x(w)));
  }
  return plan;
}

}  // namespace

std::optional<double> projected_visits(const EnumConfig& cfg) {
  const std::size_t r = cfg.ambient_dim;
  const FerrersDiagram seed = cfg.seed_or_origin();
  const std::size_t k = cfg.max_added;

  if (seed == mu(r)) {
    if (cfg.box && *cfg.box <= 2) {
      // The box-2 tree ends once every node of {0,1}^r is present.
      std::size_t m_end = *cfg.box == 1 ? 0 : std::min<std::size_t>(k, (std::size_t{1} << r) - r - 1);
      const Triangle& Cb = golden_triangle(GoldenId::Cbox2);
      if (static_cast<long>(m_end) <= Cb.complete_through()) {
        double total = 0;
        for (std::size_t m = 0; m <= m_end; ++m)
          total += C_to_A(Cb, static_cast<long>(m), static_cast<long>(r)).get_d();
        return total;
      }
    }
    const Triangle& A = reference_A();
    const Triangle& C = reference_C();
    double total = 0;
    for (std::size_t m = 0; m <= k; ++m) {
      long n = static_cast<long>(m + r + 1);
      if (A.known(n, static_cast<long>(r))) {
        total += A.at(n, static_cast<long>(r)).get_d();
      } else if (static_cast<long>(m) <= C.complete_through()) {
        total += C_to_A(C, static_cast<long>(m), static_cast<long>(r)).get_d();
      } else {
        return std::nullopt;
      }
    }
    return total;
  }

  // Diagrams containing the seed are among all diagrams of the same sizes.
  bool known = true;
  double total = sum_pd(r, seed.size(), seed.size() + k, known);
  if (!known) return std::nullopt;
  return total;
}

CountLedger enumerate(const EnumConfig& cfg, const Visitor& visitor, const EnumOptions& opts) {
  const FerrersDiagram seed = cfg.seed_or_origin();
  check_config(cfg, opts, seed);
  const Plan plan = make_plan(cfg, opts, seed);

  Shared shared;
  shared.visitor = &visitor;
  shared.serialize = opts.serialize_visitor;
  shared.progress = &opts.progress;

  CountLedger out(plan.r, plan.max_added);
  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1 || plan.max_added == 0) {
    EnumWorker worker(plan, shared);
    worker.run_root(0, nullptr);
    worker.ledger().add_to(out);
    return out;
  }

  std::size_t split = opts.split_depth ? opts.split_depth : 3;
  split = std::min(split, plan.max_added);
  std::vector<Task> tasks;
  {
    EnumWorker root(plan, shared);
    root.run_root(split, &tasks);
    root.ledger().add_to(out);
  }

  std::atomic<std::size_t> next{0};
  std::vector<CountLedger> partial(threads, CountLedger(plan.r, plan.max_added));
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        EnumWorker worker(plan, shared);
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) worker.run_task(tasks[i]);
        worker.flush_progress();
        worker.ledger().add_to(partial[t]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (const auto& p : partial) out += p;
  return out;
}

namespace {

EnumOptions with(const EnumOptions& base, Pruning pruning, bool classify) {
  EnumOptions o = base;
  o.pruning = pruning;
  o.classify_components = classify;
  return o;
}

std::vector<Integer> totals(const CountLedger& ledger) {
  std::vector<Integer> out;
  for (std::size_t k = 0; k <= ledger.max_depth(); ++k) out.push_back(ledger.at(k).total);
  return out;
}

CountLedger full_support_run(std::size_t x, std::size_t m_max, std::optional<Coord> box, const EnumOptions& opts,
                             bool classify) {
  EnumConfig cfg{x, mu(x), m_max, box};
  return enumerate(cfg, {}, with(opts, Pruning::FullSupport, classify));
}

}  // namespace

std::vector<Integer> count_pd(std::size_t d, std::size_t n_max, std::optional<Coord> box, const EnumOptions& opts) {
  if (n_max == 0) return {};
  EnumConfig cfg{d + 1, std::nullopt, n_max - 1, box};
  return totals(enumerate(cfg, {}, with(opts, Pruning::None, false)));
}

std::vector<Integer> count_A_column(std::size_t r, std::size_t m_max, std::optional<Coord> box,
                                    const EnumOptions& opts) {
  EnumConfig cfg{r, mu(r), m_max, box};
  return totals(enumerate(cfg, {}, with(opts, Pruning::None, false)));
}

std::vector<Integer> count_C_entry(std::size_t x, std::size_t m_max, std::optional<Coord> box,
                                   const EnumOptions& opts) {
  CountLedger ledger = full_support_run(x, m_max, box, opts, false);
  std::vector<Integer> out;
  for (std::size_t m = 0; m <= m_max; ++m) out.push_back(ledger.at(m).by_reduced_dim[x]);
  return out;
}

std::vector<Integer> count_D_entry(std::size_t x, std::size_t m_max, const EnumOptions& opts) {
  CountLedger ledger = full_support_run(x, m_max, std::nullopt, opts, true);
  std::vector<Integer> out;
  for (std::size_t m = 0; m <= m_max; ++m) out.push_back(ledger.at(m).no_sigma2);
  return out;
}

std::vector<Integer> count_F_column(std::size_t r, std::size_t m_max, std::optional<Coord> box,
                                    const EnumOptions& opts) {
  CountLedger ledger = full_support_run(r, m_max, box, opts, true);
  std::vector<Integer> out;
  for (std::size_t m = 0; m <= m_max; ++m) out.push_back(ledger.at(m).no_D_component);
  return out;
}

std::vector<Integer> count_Chat_entry(std::size_t x, std::size_t m_max, const EnumOptions& opts) {
  CountLedger ledger = full_support_run(x, m_max, std::nullopt, opts, true);
  std::vector<Integer> out;
  for (std::size_t m = 0; m <= m_max; ++m) out.push_back(ledger.at(m).no_box2_component);
  return out;
}

std::vector<Integer> count_forests(std::size_t m, const EnumOptions& opts) {
  CountLedger ledger = full_support_run(m, m, std::nullopt, opts, true);
  return ledger.at(m).no_D_by_type2;
}

}  // namespace hdpart
