#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace ipf::detail {

/// |[m]^n| saturated at uint64 max.
inline std::uint64_t tuple_space(int m, int n) {
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (m != 0 && total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(m)) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        total *= static_cast<std::uint64_t>(m);
    }
    return total;
}

/// Number of nondecreasing tuples in [m]^n, saturated.
inline std::uint64_t nondecreasing_space(int m, int n) {
    if (n == 0) return 1;
    if (m == 0) return 0;
    // C(m + n - 1, n) computed incrementally.
    unsigned __int128 r = 1;
    for (int i = 1; i <= n; ++i) {
        r = r * static_cast<unsigned>(m - 1 + i) / static_cast<unsigned>(i);
        if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

/// Visits every tuple in [lo, m]^n in lexicographic order (first coordinate
/// fixed to `first` when first > 0). Stops early if fn returns false.
template <class Fn>
bool for_each_tuple(int n, int m, Fn&& fn, int first = 0) {
    std::vector<int> t(n, 1);
    if (n == 0) return fn(static_cast<const std::vector<int>&>(t));
    if (m < 1) return true;
    if (first > 0) t[0] = first;
    const int pinned = first > 0 ? 1 : 0;
    while (true) {
        if (!fn(static_cast<const std::vector<int>&>(t))) return false;
        int i = n - 1;
        while (i >= pinned && t[i] == m) t[i--] = 1;
        if (i < pinned) return true;
        ++t[i];
    }
}

/// Visits every nondecreasing tuple in [m]^n in lexicographic order.
template <class Fn>
bool for_each_nondecreasing(int n, int m, Fn&& fn, int first = 0) {
    std::vector<int> t(n, 1);
    if (n == 0) return fn(static_cast<const std::vector<int>&>(t));
    if (m < 1) return true;
    if (first > 0) std::fill(t.begin(), t.end(), first);
    const int pinned = first > 0 ? 1 : 0;
    while (true) {
        if (!fn(static_cast<const std::vector<int>&>(t))) return false;
        int i = n - 1;
        while (i >= pinned && t[i] == m) --i;
        if (i < pinned) return true;
        ++t[i];
        for (int j = i + 1; j < n; ++j) t[j] = t[i];
    }
}

}  // namespace ipf::detail
