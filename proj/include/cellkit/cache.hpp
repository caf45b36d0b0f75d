#pragma once

#include "cellkit/coxeter.hpp"

#include <optional>
#include <string>

namespace cellkit {

inline constexpr const char* kCacheMagic = "cellkit-cache";
inline constexpr int kCacheSchema = 1;
inline constexpr const char* kCodeVersion = "cellkit-0.1.0";

// Identifies a system and the code that produced the payload.
std::string cache_key(const CoxeterSystem& sys);

// One file per key under dir; the header {magic, schema_version, key} guards the payload.
class DiskCache {
 public:
  explicit DiskCache(std::string dir) : dir_(std::move(dir)) {}
  // Directory from the flag, else CELLKIT_CACHE_DIR, else empty (no caching).
  static std::string resolve_dir(const std::string& flag);

  std::string path(const std::string& key) const;
  // nullopt on a miss; a corrupt or mismatched file is reported in *warning and treated as a miss.
  std::optional<std::string> load(const std::string& key, std::string* warning = nullptr) const;
  // Atomic: writes a temporary file in the same directory and renames it.
  void store(const std::string& key, const std::string& payload) const;

 private:
  std::string dir_;
};

}  // namespace cellkit
