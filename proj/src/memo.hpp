#pragma once

#include <condition_variable>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace cellkit {

// String-keyed memo table; concurrent requests for one key build it once.
template <class T>
class KeyedMemo {
 public:
  std::shared_ptr<const T> get(const std::string& key, const std::function<std::shared_ptr<const T>()>& build) {
    {
      std::unique_lock<std::mutex> lk(mu_);
      for (;;) {
        Slot& s = slots_[key];
        if (s.value) return s.value;
        if (!s.building) {
          s.building = true;
          break;
        }
        cv_.wait(lk);
      }
    }
    std::shared_ptr<const T> v;
    try {
      v = build();
    } catch (...) {
      std::lock_guard<std::mutex> lk(mu_);
      slots_[key].building = false;
      cv_.notify_all();
      throw;
    }
    std::lock_guard<std::mutex> lk(mu_);
    slots_[key].value = v;
    slots_[key].building = false;
    cv_.notify_all();
    return v;
  }

  void clear() {
    std::lock_guard<std::mutex> lk(mu_);
    for (auto it = slots_.begin(); it != slots_.end();) it = it->second.building ? std::next(it) : slots_.erase(it);
  }

 private:
  struct Slot {
    std::shared_ptr<const T> value;
    bool building = false;
  };
  std::mutex mu_;
  std::condition_variable cv_;
  std::map<std::string, Slot> slots_;
};

}  // namespace cellkit
