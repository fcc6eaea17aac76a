#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace ipf::detail {

// Thread-safe memo table. The value is computed outside the lock so that
// recursive computations may re-enter the same table; a racing duplicate
// computation produces the same value and the first insert wins.
template <class Key, class Value>
class Memo {
public:
    template <class Fn>
    Value get_or_compute(const Key& key, Fn&& compute) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end()) return it->second;
        }
        Value value = compute();
        std::unique_lock lock(mutex_);
        return table_.emplace(key, std::move(value)).first->second;
    }

    std::optional<Value> find(const Key& key) const {
        std::shared_lock lock(mutex_);
        if (auto it = table_.find(key); it != table_.end()) return it->second;
        return std::nullopt;
    }

    void clear() {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, Value> table_;
};

}  // namespace ipf::detail
