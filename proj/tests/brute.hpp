#pragma once

// Naive reference implementations for the tests. Nothing here calls into the
// library, so agreement with it is an independent check.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace brute {

using Tuple = std::vector<int>;

// Every tuple in [lo, hi]^n, lexicographic.
inline std::vector<Tuple> tuples(int n, int hi, int lo = 1) {
    std::vector<Tuple> out;
    Tuple cur;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v <= hi; ++v) {
            cur.push_back(v);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

// Street after parking, 1-based, 0 for empty; nullopt if some car fails.
// limit[i] is the last spot car i accepts.
inline std::optional<Tuple> park(const Tuple& a, const Tuple& limit, int m) {
    Tuple street(m + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        int s = a[i];
        while (s <= limit[i] && street[s] != 0) ++s;
        if (s > limit[i]) return std::nullopt;
        street[s] = static_cast<int>(i) + 1;
    }
    return Tuple(street.begin() + 1, street.end());
}

inline std::optional<Tuple> park(const Tuple& a, int m) { return park(a, Tuple(a.size(), m), m); }

inline bool parks(const Tuple& a, int m) { return park(a, m).has_value(); }

inline bool ell_interval(const Tuple& a, int m, int ell) {
    Tuple limit(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) limit[i] = std::min(m, a[i] + ell);
    return park(a, limit, m).has_value();
}

inline bool nondecreasing(const Tuple& a) { return std::is_sorted(a.begin(), a.end()); }

// Competitor i's rank is one more than the number of competitors strictly ahead.
inline bool fubini(const Tuple& a) {
    for (int x : a) {
        int ahead = 0;
        for (int y : a) ahead += y < x;
        if (x != ahead + 1) return false;
    }
    return true;
}

template <class Pred>
inline std::uint64_t count(int n, int m, Pred pred) {
    std::uint64_t c = 0;
    for (const Tuple& t : tuples(n, m)) c += pred(t);
    return c;
}

inline std::uint64_t interval_pairs(int n, int m) {
    std::uint64_t c = 0;
    const auto all = tuples(n, m);
    for (const Tuple& a : all) {
        for (const Tuple& b : all) {
            bool ok = true;
            for (int i = 0; i < n; ++i) ok = ok && b[i] >= a[i];
            if (ok && park(a, b, m)) ++c;
        }
    }
    return c;
}

// All N/E words with n N's and m E's, lexicographic with N < E.
inline std::vector<std::string> words(int n, int m) {
    std::vector<std::string> out;
    std::string cur;
    auto rec = [&](auto&& self, int north, int east) -> void {
        if (north == n && east == m) {
            out.push_back(cur);
            return;
        }
        if (north < n) {
            cur.push_back('N');
            self(self, north + 1, east);
            cur.pop_back();
        }
        if (east < m) {
            cur.push_back('E');
            self(self, north, east + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

inline bool weakly_above_diagonal(const std::string& w, int n, int m) {
    long long north = 0, east = 0;
    for (char c : w) {
        (c == 'N' ? north : east) += 1;
        if (north * m < n * east) return false;
    }
    return true;
}

inline int max_excess(const std::string& w) {
    int h = 0, best = 0;
    for (char c : w) {
        h += c == 'N' ? 1 : -1;
        best = std::max(best, h);
    }
    return best;
}

inline std::uint64_t factorial(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Set partitions of [n] into exactly k blocks, by restricted growth strings.
inline std::uint64_t set_partitions(int n, int k) {
    if (n == 0) return k == 0;
    std::uint64_t c = 0;
    Tuple rgs(n, 0);
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (i == n) {
            c += used == k;
            return;
        }
        for (int b = 0; b <= used && b < k; ++b) {
            rgs[i] = b;
            self(self, i + 1, std::max(used, b + 1));
        }
    };
    rec(rec, 0, 0);
    return c;
}

// Permutations of [n] with exactly k cycles.
inline std::uint64_t permutations_with_cycles(int n, int k) {
    Tuple p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::uint64_t c = 0;
    do {
        std::vector<bool> seen(n, false);
        int cycles = 0;
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            ++cycles;
            for (int j = i; !seen[j]; j = p[j]) seen[j] = true;
        }
        c += cycles == k;
    } while (std::next_permutation(p.begin(), p.end()));
    return c;
}

}  // namespace brute
