#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "srlab/io.hpp"

namespace srlab {

/**
 * Directory of JSON files keyed by a content hash. Each file stores its full
 * key, so a hash collision reads as a miss rather than a wrong answer.
 */
class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

  /// SRLAB_CACHE_DIR, if set and non-empty.
  static std::optional<DiskCache> from_env() {
    const char* dir = std::getenv("SRLAB_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return std::nullopt;
    return DiskCache(dir);
  }

  const std::filesystem::path& dir() const { return dir_; }

  std::optional<io::json> get(const std::string& kind, const std::string& key) const {
    std::ifstream in(path_for(kind, key));
    if (!in) return std::nullopt;
    try {
      auto j = io::json::parse(in);
      if (j.value("kind", "") != kind || j.value("key", "") != key) return std::nullopt;
      return j.at("value");
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  void put(const std::string& kind, const std::string& key, const io::json& value) const {
    const auto target = path_for(kind, key);
    auto tmp = target;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      out << io::json{{"kind", kind}, {"key", key}, {"value", value}}.dump() << '\n';
    }
    std::filesystem::rename(tmp, target);
  }

  static std::string complex_key(const SimplicialComplex& c, const Field& f) {
    return io::canonical(c) + "|" + f.tag();
  }

  std::optional<BettiTable> get_betti(const SimplicialComplex& c, const Field& f) const {
    auto j = get("betti", complex_key(c, f));
    if (!j) return std::nullopt;
    return io::betti_from_json(*j);
  }

  void put_betti(const SimplicialComplex& c, const Field& f, const BettiTable& t) const {
    put("betti", complex_key(c, f), io::betti_to_json(t));
  }

 private:
  std::filesystem::path path_for(const std::string& kind, const std::string& key) const {
    return dir_ / (kind + "-" + io::hex(io::fnv1a(kind + "\n" + key)) + ".json");
  }

  std::filesystem::path dir_;
};

}  // namespace srlab
