// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

namespace hecke {

/// Concurrent memo table with idempotent insert: racing writers compute the
/// same value, so the first one stored wins and later ones are dropped.
template <class Key, class Value, class Hash = std::hash<Key>>
class MemoTable {
public:
    std::optional<Value> find(const Key& key) const {
        std::shared_lock lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    const Value& insert(const Key& key, Value value) {
        std::unique_lock lock(mutex_);
        return map_.try_emplace(key, std::move(value)).first->second;
    }

    template <class Compute>
    Value get_or_compute(const Key& key, Compute&& compute) {
        if (auto hit = find(key)) return *std::move(hit);
        return insert(key, compute());
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return map_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<Key, Value, Hash> map_;
};

} // namespace hecke
