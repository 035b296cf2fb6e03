#pragma once

// On-disk cache of solved decomposition tables, keyed by (system, p, bound).
// Each file stores its payload with an FNV-1a checksum; a file that fails to
// parse or verify is treated as absent. Writes go to a temporary file that is
// renamed into place.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

#include "pfilt/json_io.hpp"

namespace pfilt {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t x) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << x;
  return os.str();
}

class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const noexcept { return dir_; }

  static std::string key(const RootSystem& rs, Int p, Int bound) {
    return rs.name() + "_p" + std::to_string(p) + "_b" + std::to_string(bound);
  }

  std::filesystem::path path(const std::string& key) const { return dir_ / (key + ".table.json"); }

  /// Cached table, or nullopt if missing or corrupt.
  std::optional<DecompTable> load(const SystemPtr& sys, Int p, Int bound) const {
    std::ifstream in(path(key(*sys, p, bound)));
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      json j = json::parse(ss.str());
      const std::string payload = j.at("payload").dump();
      if (j.at("checksum").get<std::string>() != hex64(fnv1a(payload))) return std::nullopt;
      if (j.at("key").get<std::string>() != key(*sys, p, bound)) return std::nullopt;
      DecompTable t = table_from_json(j.at("payload"), sys);
      if (t.p() != p) return std::nullopt;
      if (j.at("payload").contains("ambiguous"))
        for (auto& w : j.at("payload").at("ambiguous"))
          t.mark_ambiguous(detail::read_weight(w, sys->rank(), "ambiguous"));
      return t;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  void store(const DecompTable& t, Int bound) const {
    std::filesystem::create_directories(dir_);
    const std::string k = key(*t.system(), t.p(), bound);
    json payload = to_json(t);
    json ambiguous = json::array();
    for (auto& w : t.ambiguous()) ambiguous.push_back(json(w.coords()));
    payload["ambiguous"] = ambiguous;
    json doc = {{"key", k}, {"checksum", hex64(fnv1a(payload.dump()))}, {"payload", payload}};
    const auto final_path = path(k);
    auto tmp = final_path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      if (!out) throw Error("cannot write cache file " + tmp.string());
      out << doc.dump() << '\n';
    }
    std::filesystem::rename(tmp, final_path);
  }

  /// Number of entries removed.
  std::size_t clear() const {
    std::size_t n = 0;
    if (!std::filesystem::exists(dir_)) return 0;
    for (auto& e : std::filesystem::directory_iterator(dir_)) {
      const std::string name = e.path().filename().string();
      if (name.size() > 11 && name.find(".table.json") != std::string::npos) {
        std::filesystem::remove(e.path());
        ++n;
      }
    }
    return n;
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace pfilt
