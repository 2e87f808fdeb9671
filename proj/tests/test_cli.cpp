#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hdpart/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = hdpart::run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

Run run_nc(std::vector<std::string> args) {
  args.insert(args.begin(), "--no-cache");
  return run(std::move(args));
}

struct TempDir {
  fs::path path;
  TempDir() {
    static std::atomic<int> counter{0};
    path = fs::temp_directory_path() /
           ("hdpart-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("count") {
  auto r = run_nc({"count", "--dim", "2", "--max-n", "6"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,p_2(n)\n1,1\n2,3\n3,6\n4,13\n5,24\n6,48\n");
  r = run_nc({"count", "--dim", "0", "--max-n", "5"});
  CHECK(r.out == "n,p_0(n)\n1,1\n2,1\n3,1\n4,1\n5,1\n");

  auto full = run_nc({"count", "--dim", "3", "--max-n", "6"});
  auto boxed = run_nc({"count", "--dim", "3", "--max-n", "6", "--box", "2"});
  REQUIRE(boxed.code == 0);
  std::istringstream a(full.out), b(boxed.out);
  std::string la, lb;
  std::getline(a, la);
  std::getline(b, lb);
  CHECK(lb == "n,p_3^box2(n)");
  while (std::getline(a, la) && std::getline(b, lb)) {
    long va = std::stol(la.substr(la.find(',') + 1));
    long vb = std::stol(lb.substr(lb.find(',') + 1));
    CHECK(vb <= va);
  }
  CHECK(run_nc({"count", "--dim", "15", "--max-n", "40"}).code == 2);
}

TEST_CASE("triangle") {
  auto r = run_nc({"triangle", "--name", "A", "--rows", "10", "--method", "all"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["name"] == "A");
  CHECK(j["rows"].size() == 10);
  CHECK(j["rows"][9][4] == "1370");

  r = run_nc({"triangle", "--name", "T", "--rows", "4"});
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["rows"][3] == nlohmann::json({"1", "2", "1", "1"}));

  r = run_nc({"triangle", "--name", "F", "--rows", "11", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\n11,\"0\",\"1\",\"52\",\"574\",\"1927\",\"1296\"\n") != std::string::npos);

  TempDir dir;
  r = run_nc({"triangle", "--name", "C", "--rows", "3", "--output", dir.file("c.json")});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(nlohmann::json::parse(slurp(dir.file("c.json")))["rows"][2][3] == "6");

  CHECK(run_nc({"triangle", "--name", "T", "--rows", "4", "--method", "enumerate"}).code == 2);
  CHECK(run_nc({"triangle", "--name", "Q", "--rows", "4"}).code == 2);
  CHECK(run_nc({"triangle", "--name", "A", "--rows", "4", "--format", "xml"}).code == 2);
}

TEST_CASE("pdn") {
  CHECK(run_nc({"pdn", "--n", "20", "--d", "10"}).out == "2403142436321\n");
  CHECK(run_nc({"pdn", "--n", "6", "--d", "3"}).out == "140\n");
  CHECK(run_nc({"pdn", "--n", "25", "--d", "1"}).out == "1958\n");
  CHECK(run_nc({"pdn", "--n", "7", "--d", "0"}).out == "1\n");
  auto big = run_nc({"pdn", "--n", "3", "--d", "100000000000000000000"});
  CHECK(big.code == 0);
  CHECK(big.out == "5000000000000000000150000000000000000001\n");
  CHECK(run_nc({"pdn", "--n", "26", "--d", "1"}).code == 2);
  CHECK(run_nc({"pdn", "--n", "5", "--d", "x"}).code == 2);
}

TEST_CASE("verify, golden, diagrams, series") {
  auto r = run_nc({"verify", "--suite", "tables"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(run_nc({"verify", "--suite", "transforms"}).code == 0);
  CHECK(run_nc({"verify", "--suite", "nope"}).code == 2);

  r = run_nc({"golden"});
  CHECK(nlohmann::json::parse(r.out)["format"] == "hdpart-golden");
  r = run_nc({"golden", "--id", "beta"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["id"] == "beta");
  CHECK(run_nc({"golden", "--id", "zzz"}).code == 2);

  r = run_nc({"diagrams", "--dim", "1", "--max-n", "4"});
  std::istringstream lines(r.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j.contains("columns"));
    ++count;
  }
  CHECK(count == 1 + 2 + 3 + 5);

  r = run_nc({"series", "--name", "A", "--q-order", "1", "--t-order", "2"});
  CHECK(r.code == 0);
  auto s = nlohmann::json::parse(r.out);
  CHECK(s["0,2"] == "1/2");
  CHECK(s["1,2"] == "3/2");
  CHECK(run_nc({"series", "--name", "T", "--q-order", "1", "--t-order", "2"}).code == 2);
}

TEST_CASE("usage errors and version") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"count", "--dim", "2"}).code == 2);
  auto v = run({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out.find("1.0.0") != std::string::npos);
}

TEST_CASE("cache") {
  TempDir dir;
  const std::string cache = dir.file("cache.json");
  std::vector<std::string> cmd{"--cache", cache, "triangle", "--name", "C", "--rows", "5", "--method", "enumerate"};
  auto first = run(cmd);
  REQUIRE(first.code == 0);
  REQUIRE(fs::exists(cache));
  auto stored = nlohmann::json::parse(slurp(cache));
  CHECK(stored["format"] == "hdpart-cache");
  auto second = run(cmd);
  CHECK(second.out == first.out);

  // A cached entry is served without recomputation: tamper with it and observe.
  auto doc = stored;
  for (auto& [key, entry] : doc["entries"].items()) entry["value"]["rows"][1][1] = "7";
  std::ofstream(cache) << doc.dump();
  CHECK(run(cmd).out != first.out);

  // Entries from another version are ignored.
  for (auto& [key, entry] : doc["entries"].items()) entry["version"] = "0.0.0";
  std::ofstream(cache) << doc.dump();
  CHECK(run(cmd).out == first.out);

  // Corruption: warning, recompute, and the file is rewritten.
  std::ofstream(cache) << "{ not json";
  auto corrupt = run(cmd);
  CHECK(corrupt.code == 0);
  CHECK(corrupt.out == first.out);
  CHECK(corrupt.err.find("warning") != std::string::npos);
  CHECK(nlohmann::json::parse(slurp(cache))["format"] == "hdpart-cache");

  // Thread count does not affect the cache contents.
  const std::string c1 = dir.file("one.json"), c8 = dir.file("eight.json");
  auto a = run({"--cache", c1, "--threads", "1", "count", "--dim", "3", "--max-n", "9"});
  auto b = run({"--cache", c8, "--threads", "8", "count", "--dim", "3", "--max-n", "9"});
  CHECK(a.out == b.out);
  CHECK(slurp(c1) == slurp(c8));
  auto hit = run({"--cache", c1, "--threads", "8", "count", "--dim", "3", "--max-n", "9"});
  CHECK(hit.out == a.out);

  // An unwritable cache location is a configuration error.
  CHECK(run({"--cache", dir.path.string(), "count", "--dim", "1", "--max-n", "3"}).code == 2);
}
