#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <utility>

namespace zetaforge {

/// Map from key to immutable value. Lookups share the lock; insertion is
/// exclusive. The first value stored for a key wins.
template <typename Key, typename Value>
class MemoCache {
 public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  Value insert(const Key& key, Value value) {
    std::unique_lock lock(mutex_);
    return entries_.try_emplace(key, std::move(value)).first->second;
  }

  /// Computes outside the lock; concurrent callers may compute the same entry.
  template <typename Fn>
  Value get_or_compute(const Key& key, Fn&& compute) {
    if (auto hit = find(key)) return *std::move(hit);
    return insert(key, compute());
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    entries_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value> entries_;
};

}  // namespace zetaforge
