#include "hdpart/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hdpart/errors.hpp"

namespace hdpart {

namespace {
constexpr const char* kFormat = "hdpart-cache";
}

ResultCache::ResultCache(std::filesystem::path path, std::ostream& warn) : path_(std::move(path)), warn_(warn) {}

std::filesystem::path ResultCache::default_path() {
  if (const char* env = std::getenv("HDPART_CACHE"); env && *env) return env;
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "hdpart" / "cache.json";
  return std::filesystem::path(".hdpart-cache.json");
}

nlohmann::json ResultCache::read_entries() {
  std::error_code ec;
  if (!std::filesystem::exists(path_, ec)) return nlohmann::json::object();
  if (std::filesystem::is_directory(path_, ec)) throw ConfigError("cache path " + path_.string() + " is a directory");
  std::ifstream in(path_);
  if (!in) throw ConfigError("cannot read cache file " + path_.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    auto doc = nlohmann::json::parse(buf.str());
    if (!doc.is_object() || doc.value("format", "") != kFormat || !doc.contains("entries") ||
        !doc["entries"].is_object())
      throw std::runtime_error("unexpected layout");
    return doc["entries"];
  } catch (const std::exception& e) {
    warn_ << "warning: cache file " << path_.string() << " is corrupt (" << e.what() << "); recomputing\n";
    return nlohmann::json::object();
  }
}

std::optional<nlohmann::json> ResultCache::load(const std::string& key) {
  auto entries = read_entries();
  auto it = entries.find(key);
  if (it == entries.end() || !it->is_object()) return std::nullopt;
  if (it->value("version", "") != HDPART_VERSION || !it->contains("value")) return std::nullopt;
  return (*it)["value"];
}

void ResultCache::store(const std::string& key, const nlohmann::json& value) {
  auto entries = read_entries();
  entries[key] = {{"version", HDPART_VERSION}, {"value", value}};
  nlohmann::json doc = {{"format", kFormat}, {"entries", entries}};
  std::error_code ec;
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path(), ec);
  std::filesystem::path tmp = path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw ConfigError("cannot write cache file " + path_.string());
    out << doc.dump() << '\n';
    if (!out) throw ConfigError("cannot write cache file " + path_.string());
  }
  std::filesystem::rename(tmp, path_, ec);
  if (ec) throw ConfigError("cannot replace cache file " + path_.string() + ": " + ec.message());
}

}  // namespace hdpart
