#include "hdpart/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hdpart/box.hpp"
#include "hdpart/cache.hpp"
#include "hdpart/catalog.hpp"
#include "hdpart/enumerator.hpp"
#include "hdpart/errors.hpp"
#include "hdpart/golden.hpp"
#include "hdpart/series.hpp"
#include "hdpart/suites.hpp"
#include "hdpart/transforms.hpp"

namespace hdpart {

namespace {

struct GlobalOptions {
  unsigned threads = 1;
  std::string cache_path;
  bool no_cache = false;
  bool override_guard = false;
  bool progress = false;
};

// One row per line keeps large triangles readable and diffable.
std::string triangle_json_text(const Triangle& t) {
  nlohmann::json j = to_json(t);
  std::ostringstream out;
  out << "{\n  \"name\": " << j["name"].dump() << ",\n  \"row_origin\": " << t.row_origin()
      << ",\n  \"col_origin\": " << t.col_origin() << ",\n  \"rows\": [";
  const auto& rows = j["rows"];
  for (std::size_t i = 0; i < rows.size(); ++i) out << (i ? ",\n    " : "\n    ") << rows[i].dump(-1, ' ', false);
  out << (rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

class Runner {
 public:
  Runner(const GlobalOptions& g, std::ostream& out, std::ostream& err) : g_(g), out_(out), err_(err) {}

  EnumOptions enum_options() const {
    EnumOptions o;
    o.threads = std::max(1u, g_.threads);
    o.guard.override_limits = g_.override_guard;
    if (g_.progress) {
      std::ostream* err = &err_;
      o.progress = [err](std::uint64_t visits, double secs) {
        *err << "progress: " << visits << " diagrams, " << static_cast<std::uint64_t>(visits / std::max(secs, 1e-9))
             << " per second\n";
      };
    }
    return o;
  }

  std::optional<ResultCache> cache() const {
    if (g_.no_cache) return std::nullopt;
    return ResultCache(g_.cache_path.empty() ? ResultCache::default_path() : std::filesystem::path(g_.cache_path), err_);
  }

  int count(std::size_t dim, std::size_t max_n, std::optional<Coord> box) {
    std::string key = "count dim=" + std::to_string(dim) + " max_n=" + std::to_string(max_n) +
                      " box=" + (box ? std::to_string(*box) : "none");
    std::vector<std::string> values;
    auto c = cache();
    if (c) {
      if (auto hit = c->load(key)) values = hit->get<std::vector<std::string>>();
    }
    if (values.empty()) {
      for (const auto& v : count_pd(dim, max_n, box, enum_options())) values.push_back(to_string(v));
      if (c) c->store(key, values);
    }
    std::string label = "p_" + std::to_string(dim) + (box ? "^box" + std::to_string(*box) : "") + "(n)";
    out_ << "n," << label << '\n';
    for (std::size_t i = 0; i < values.size(); ++i) out_ << i + 1 << ',' << values[i] << '\n';
    return 0;
  }

  int triangle(const std::string& name, long rows, const std::string& method_name, const std::string& format,
               const std::string& output) {
    TriangleKind kind = parse_triangle_kind(name);
    Method method = method_name.empty() ? (supports(kind, Method::Transform) ? Method::Transform : Method::Enumerate)
                                        : parse_method(method_name);
    if (format != "json" && format != "csv") throw ConfigError("unknown format '" + format + "'");
    std::string key = "triangle name=" + name + " rows=" + std::to_string(rows) + " method=" + std::string(hdpart::name(method));
    std::optional<Triangle> t;
    auto c = cache();
    if (c) {
      if (auto hit = c->load(key)) {
        try {
          t = triangle_from_json(*hit);
        } catch (const std::exception& e) {
          err_ << "warning: ignoring unreadable cache entry '" << key << "': " << e.what() << '\n';
        }
      }
    }
    if (!t) {
      t = compute_triangle(kind, rows, method, enum_options());
      if (c) c->store(key, to_json(*t));
    }
    std::string text = format == "json" ? triangle_json_text(*t) : to_csv(*t);
    if (output.empty()) {
      out_ << text;
    } else {
      std::ofstream f(output);
      if (!f || !(f << text)) throw ConfigError("cannot write " + output);
    }
    return 0;
  }

  int pdn(long n, const std::string& d_text) {
    Integer d = parse_integer(d_text);
    const Triangle& A = reference_A();
    if (n < 1) throw ConfigError("--n must be positive");
    if (n > A.last_row())
      throw DataError("p_d(n) is served for n <= " + std::to_string(A.last_row()) + " only");
    out_ << to_string(pd_from_A(A, n, d)) << '\n';
    return 0;
  }

  int verify(const std::string& suite) {
    auto results = run_suite(suite, enum_options());
    std::size_t failed = 0;
    for (const auto& r : results) {
      out_ << (r.ok ? "PASS " : "FAIL ") << r.name;
      if (!r.ok) {
        ++failed;
        out_ << ": " << r.detail;
      }
      out_ << '\n';
    }
    out_ << results.size() - failed << " passed, " << failed << " failed\n";
    return failed ? 1 : 0;
  }

  int golden_export(const std::string& id) {
    if (id.empty()) {
      out_ << golden_json_text();
      if (!golden_json_text().ends_with('\n')) out_ << '\n';
      return 0;
    }
    parse_golden_id(id);
    const nlohmann::json doc = nlohmann::json::parse(golden_json_text());
    for (const auto& t : doc.at("tables"))
      if (t.at("id") == id) out_ << t.dump(1) << '\n';
    return 0;
  }

  int diagrams(std::size_t dim, std::size_t max_n, std::optional<Coord> box) {
    if (max_n == 0) return 0;
    EnumConfig cfg{dim + 1, std::nullopt, max_n - 1, box};
    EnumOptions opts = enum_options();
    opts.threads = 1;
    enumerate(
        cfg,
        [this](const VisitView& v) {
          nlohmann::json line = {{"n", v.depth() + 1}, {"columns", to_json(v.diagram())}};
          out_ << line.dump() << '\n';
        },
        opts);
    return 0;
  }

  int series(const std::string& name, long q_order, long t_order) {
    TriangleKind kind = parse_triangle_kind(name);
    Triangle t = [&] {
      switch (kind) {
        case TriangleKind::A: return reference_A();
        case TriangleKind::Abox2: return reference_Abox2();
        case TriangleKind::Fhat: return fhat_from_A(reference_A(), reference_Abox2(), reference_A().last_row());
        case TriangleKind::C: return reference_C();
        case TriangleKind::Cbox2: return golden_triangle(GoldenId::Cbox2);
        case TriangleKind::Chat:
          return chat_from_C(reference_C(), golden_triangle(GoldenId::Cbox2), reference_C().last_row());
        default: throw ConfigError("no generating series is provided for " + name);
      }
    }();
    out_ << series_from_triangle(t, q_order, t_order).to_json().dump(1) << '\n';
    return 0;
  }

 private:
  const GlobalOptions& g_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration and triangle transforms for higher-dimensional partitions", "hdpart"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", HDPART_VERSION);

  GlobalOptions g;
  app.add_option("--threads", g.threads, "Worker threads for enumeration")->check(CLI::Range(1u, 256u));
  app.add_option("--cache", g.cache_path, "Cache file (default: $HDPART_CACHE or ~/.cache/hdpart/cache.json)");
  app.add_flag("--no-cache", g.no_cache, "Neither read nor write the cache");
  app.add_flag("--override-guard", g.override_guard, "Run enumerations beyond the desk-scale guard");
  app.add_flag("--progress", g.progress, "Report enumeration progress on stderr");

  std::size_t dim = 0, max_n = 0;
  std::optional<unsigned> box;
  auto* count = app.add_subcommand("count", "Count d-dimensional partitions of n = 1..N by enumeration");
  count->add_option("--dim", dim, "Partition dimension d")->required();
  count->add_option("--max-n", max_n, "Largest n")->required()->check(CLI::PositiveNumber);
  count->add_option("--box", box, "Restrict coordinates to 0..B-1")->check(CLI::PositiveNumber);

  std::string tname, method, format = "json", output;
  long rows = 0;
  auto* tri = app.add_subcommand("triangle", "Compute a named triangle");
  tri->add_option("--name", tname, "A, B, C, D, F, T, alpha, beta, Abox2, Cbox2, Fbox2, Chat, Fhat, cD")->required();
  tri->add_option("--rows", rows, "Number of rows")->required()->check(CLI::PositiveNumber);
  tri->add_option("--method", method, "enumerate, transform or all")
      ->check(CLI::IsMember({"enumerate", "transform", "all"}));
  tri->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  tri->add_option("--output", output, "Write to a file instead of stdout");

  long pn = 0;
  std::string pd = "";
  auto* pdn = app.add_subcommand("pdn", "Print p_d(n) from the embedded data");
  pdn->add_option("--n", pn, "n")->required();
  pdn->add_option("--d", pd, "d (any nonnegative integer)")->required();

  std::string suite = "all";
  auto* ver = app.add_subcommand("verify", "Run verification suites");
  ver->add_option("--suite", suite, "all, tables, transforms or enumeration")
      ->check(CLI::IsMember({"all", "tables", "transforms", "enumeration"}));

  std::string gid;
  auto* gold = app.add_subcommand("golden", "Export the embedded reference tables");
  gold->add_option("--id", gid, "Export a single table");

  std::size_t ddim = 0, dmax = 0;
  std::optional<unsigned> dbox;
  auto* dia = app.add_subcommand("diagrams", "Stream every diagram as JSON lines of node columns");
  dia->add_option("--dim", ddim, "Partition dimension d")->required();
  dia->add_option("--max-n", dmax, "Largest n")->required();
  dia->add_option("--box", dbox, "Restrict coordinates to 0..B-1")->check(CLI::PositiveNumber);

  std::string sname;
  long q_order = 0, t_order = 0;
  auto* ser = app.add_subcommand("series", "Dump a truncated generating series");
  ser->add_option("--name", sname, "A, Abox2, Fhat, C, Cbox2 or Chat")->required();
  ser->add_option("--q-order", q_order, "Largest power of q")->required()->check(CLI::NonNegativeNumber);
  ser->add_option("--t-order", t_order, "Largest power of t")->required()->check(CLI::NonNegativeNumber);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << HDPART_VERSION << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  Runner run(g, out, err);
  try {
    if (*count) return run.count(dim, max_n, box ? std::optional<Coord>(*box) : std::nullopt);
    if (*tri) return run.triangle(tname, rows, method, format, output);
    if (*pdn) return run.pdn(pn, pd);
    if (*ver) return run.verify(suite);
    if (*gold) return run.golden_export(gid);
    if (*dia) return run.diagrams(ddim, dmax, dbox ? std::optional<Coord>(*dbox) : std::nullopt);
    if (*ser) return run.series(sname, q_order, t_order);
  } catch (const MismatchError& e) {
    err << "verification failure: " << e.what() << '\n';
    return 1;
  } catch (const ConjectureViolation& e) {
    err << "verification failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace hdpart
