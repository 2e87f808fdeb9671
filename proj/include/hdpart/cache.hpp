#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

namespace hdpart {

// JSON file of computed results keyed by (command, parameters) and tagged with
// the code version. Entries from other versions are ignored; an unparsable
// file is reported on `warn` and replaced on the next store.
class ResultCache {
 public:
  ResultCache(std::filesystem::path path, std::ostream& warn);

  // HDPART_CACHE if set, else $HOME/.cache/hdpart/cache.json.
  static std::filesystem::path default_path();

  std::optional<nlohmann::json> load(const std::string& key);
  // Throws ConfigError when the file cannot be written.
  void store(const std::string& key, const nlohmann::json& value);

  const std::filesystem::path& path() const { return path_; }

 private:
  nlohmann::json read_entries();

  std::filesystem::path path_;
  std::ostream& warn_;
};

}  // namespace hdpart
