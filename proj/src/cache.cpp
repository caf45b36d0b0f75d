#include "cellkit/cache.hpp"

#include "json.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <unistd.h>

namespace cellkit {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::string cache_key(const CoxeterSystem& sys) {
  std::string w;
  for (std::size_t i = 0; i < sys.weights.size(); ++i) w += (i ? "," : "") + std::to_string(sys.weights[i]);
  std::string l;
  for (std::size_t i = 0; i < sys.labels.size(); ++i) l += (i ? "," : "") + sys.labels[i];
  return sys.family + "|" + std::to_string(sys.param) + "|" + w + "|" + l + "|" + sys.key() + "|" + kCodeVersion;
}

std::string DiskCache::resolve_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  const char* env = std::getenv("CELLKIT_CACHE_DIR");
  return env ? std::string(env) : std::string();
}

std::string DiskCache::path(const std::string& key) const {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << fnv1a(key);
  return (fs::path(dir_) / ("system-" + os.str() + ".json")).string();
}

std::optional<std::string> DiskCache::load(const std::string& key, std::string* warning) const {
  if (dir_.empty()) return std::nullopt;
  const std::string p = path(key);
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  auto warn = [&](const std::string& why) -> std::optional<std::string> {
    if (warning) *warning = "ignoring cache file " + p + ": " + why;
    return std::nullopt;
  };
  json j = json::parse(ss.str(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) return warn("not valid JSON");
  if (j.value("magic", std::string()) != kCacheMagic) return warn("bad magic");
  if (!j.contains("schema_version") || !j["schema_version"].is_number_integer() || j["schema_version"].get<int>() != kCacheSchema)
    return warn("schema version mismatch");
  if (j.value("key", std::string()) != key) return warn("key mismatch");
  if (!j.contains("payload") || !j["payload"].is_string()) return warn("missing payload");
  return j["payload"].get<std::string>();
}

void DiskCache::store(const std::string& key, const std::string& payload) const {
  if (dir_.empty()) return;
  fs::create_directories(dir_);
  const std::string p = path(key);
  const std::string tmp = p + ".tmp." + std::to_string(::getpid());
  json j{{"magic", kCacheMagic}, {"schema_version", kCacheSchema}, {"key", key}, {"payload", payload}};
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    out << j.dump() << "\n";
    if (!out.flush()) throw std::runtime_error("cannot write cache file " + tmp);
  }
  fs::rename(tmp, p);
}

}  // namespace cellkit
