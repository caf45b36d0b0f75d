#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace cellkit {

enum class Status { Pass, Fail, Skipped };

inline const char* status_str(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    default: return "skipped";
  }
}

// Outcome of one machine check. The first failing case is kept as the witness.
struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string scope = "exhaustive";
  long long cases = 0;
  std::string witness;
  std::string note;

  Check() = default;
  explicit Check(std::string n) : name(std::move(n)) {}
  bool ok() const { return status != Status::Fail; }
  void fail(const std::string& w) {
    if (status != Status::Fail) {
      status = Status::Fail;
      witness = w;
    }
  }
  void expect(bool cond, const std::string& w) {
    ++cases;
    if (!cond) fail(w);
  }
  void skip(const std::string& why) {
    status = Status::Skipped;
    note = why;
  }
  void sampled(uint64_t seed, long long count) {
    scope = "sampled(seed=" + std::to_string(seed) + ",count=" + std::to_string(count) + ")";
  }
};

// Seeded sampler whose output depends only on the seed (no distribution objects).
class Sampler {
 public:
  explicit Sampler(uint64_t seed) : rng_(seed) {}
  int below(int n) { return static_cast<int>(rng_() % static_cast<uint64_t>(n)); }

 private:
  std::mt19937_64 rng_;
};

inline constexpr uint64_t kDefaultSeed = 0xC0DE;

}  // namespace cellkit
