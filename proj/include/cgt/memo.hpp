#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>

#include "cgt/config.hpp"

namespace cgt {

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
}

// Thread-safe memo table with a hard size bound. When the bound is hit the
// whole table is dropped; callers recompute, they never observe stale data.
template <class Key, class Value, class Hash = std::hash<Key>>
class MemoCache {
 public:
  explicit MemoCache(std::size_t limit = config::kMemoCacheLimit) : limit_(limit) {}

  std::optional<Value> find(const Key& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const Key& key, Value value) {
    std::lock_guard<std::mutex> lock(mu_);
    if (map_.size() >= limit_) map_.clear();
    map_.emplace(key, std::move(value));
  }

  void clear() {
    std::lock_guard<std::mutex> lock(mu_);
    map_.clear();
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.size();
  }

 private:
  mutable std::mutex mu_;
  std::unordered_map<Key, Value, Hash> map_;
  std::size_t limit_;
};

}  // namespace cgt
