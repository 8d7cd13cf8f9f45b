// On-disk JSON cache for computed artifacts, keyed by a hash of the Cayley
// table, the artifact kind and the library version.

#ifndef HOPFCAT_CACHE_HPP_
#define HOPFCAT_CACHE_HPP_

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"

#include "group.hpp"

#ifndef HOPFCAT_VERSION
#define HOPFCAT_VERSION "dev"
#endif

namespace hopfcat {

inline std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

class Cache {
 public:
  // dir empty: HOPFCAT_CACHE, else $HOME/.cache/hopfcat, else ./.hopfcat-cache
  explicit Cache(std::string dir = "", std::string version = HOPFCAT_VERSION)
      : dir_(resolve(std::move(dir))), version_(std::move(version)) {}

  static std::filesystem::path resolve(std::string dir) {
    if (!dir.empty())
      return dir;
    if (const char* env = std::getenv("HOPFCAT_CACHE"); env && *env)
      return env;
    if (const char* home = std::getenv("HOME"); home && *home)
      return std::filesystem::path(home) / ".cache" / "hopfcat";
    return ".hopfcat-cache";
  }

  const std::filesystem::path& dir() const { return dir_; }
  void set_warning_stream(std::ostream& w) { warn_ = &w; }

  std::string key(const Group& g, const std::string& kind) const {
    std::ostringstream os;
    os << g.order() << ':';
    for (int x : g.table())
      os << x << ',';
    os << '|' << kind << '|' << version_;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(os.str())));
    return kind + "-" + buf;
  }

  std::optional<nlohmann::json> get(const Group& g, const std::string& kind) const {
    auto path = dir_ / (key(g, kind) + ".json");
    std::error_code ec;
    if (!std::filesystem::exists(path, ec))
      return std::nullopt;
    std::ifstream in(path);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object() || j.value("version", "") != version_ ||
        j.value("kind", "") != kind || !j.contains("value")) {
      *warn_ << "warning: discarding corrupt cache entry " << path.string() << "\n";
      std::filesystem::remove(path, ec);
      return std::nullopt;
    }
    return j["value"];
  }

  // Best effort: an unwritable cache directory only loses the cache.
  void put(const Group& g, const std::string& kind, const nlohmann::json& value) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    auto path = dir_ / (key(g, kind) + ".json");
    auto tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      if (!out)
        return;
      out << nlohmann::json{{"version", version_}, {"kind", kind}, {"value", value}}.dump();
      if (!out)
        return;
    }
    std::filesystem::rename(tmp, path, ec);
  }

  // Removes cache entries; returns how many files were deleted.
  std::size_t purge() const {
    std::error_code ec;
    std::size_t n = 0;
    if (!std::filesystem::is_directory(dir_, ec))
      return 0;
    for (const auto& e : std::filesystem::directory_iterator(dir_, ec))
      if (e.is_regular_file() && e.path().extension() == ".json" && std::filesystem::remove(e.path(), ec))
        ++n;
    return n;
  }

 private:
  std::filesystem::path dir_;
  std::string version_;
  std::ostream* warn_ = &std::cerr;
};

} // namespace hopfcat

#endif
