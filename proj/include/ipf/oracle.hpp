#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ipf/classify.hpp"
#include "ipf/error.hpp"
#include "ipf/numbers.hpp"
#include "ipf/odometer.hpp"
#include "ipf/simulate.hpp"

namespace ipf::oracle {

inline constexpr std::uint64_t kDefaultCap = 10'000'000;

struct Member {
    PreferenceList prefs;
    ToleranceVector tol;  // only for IPF_PAIR

    friend auto operator<=>(const Member&, const Member&) = default;
};

struct EnumerateOptions {
    std::uint64_t cap = kDefaultCap;
    /// Worker threads; the search space is split by first coordinate and
    /// merged back in order, so output never depends on this value.
    unsigned threads = 1;
};

/// Number of candidates the oracle will inspect for `tag`.
inline std::uint64_t candidate_space(const FamilyTag& tag) {
    switch (tag.family) {
    case Family::NDPF:
    case Family::ND_ELL_IPF:
    case Family::ND_ELL_FUBINI: return detail::nondecreasing_space(tag.m, tag.n);
    case Family::IPF_PAIR: {
        const std::uint64_t t = detail::tuple_space(tag.m, tag.n);
        return t > (1ull << 32) ? UINT64_MAX : t * t;
    }
    default: return detail::tuple_space(tag.m, tag.n);
    }
}

namespace detail {

inline bool nondecreasing_family(Family f) {
    return f == Family::NDPF || f == Family::ND_ELL_IPF || f == Family::ND_ELL_FUBINI;
}

// Members whose first preference equals `first` (all members when n == 0).
template <class Sink>
void scan_partition(const FamilyTag& tag, int first, Sink& sink) {
    if (tag.family == Family::IPF_PAIR) {
        ipf::detail::for_each_tuple(tag.n, tag.m, [&](const std::vector<int>& prefs) {
            ipf::detail::for_each_tuple(tag.n, tag.m, [&](const std::vector<int>& tol) {
                for (int i = 0; i < tag.n; ++i) {
                    if (tol[i] < prefs[i]) return true;
                }
                if (is_interval_pf(prefs, tol, tag.m)) sink(prefs, tol);
                return true;
            });
            return true;
        }, first);
        return;
    }
    static const std::vector<int> no_tol;
    auto visit = [&](const std::vector<int>& t) {
        if (is_member(tag, t)) sink(t, no_tol);
        return true;
    };
    if (nondecreasing_family(tag.family)) ipf::detail::for_each_nondecreasing(tag.n, tag.m, visit, first);
    else ipf::detail::for_each_tuple(tag.n, tag.m, visit, first);
}

template <class MakeSink, class Merge>
void run_partitioned(const FamilyTag& tag, const EnumerateOptions& opts, MakeSink make_sink, Merge merge) {
    tag.validate();
    if (candidate_space(tag) > opts.cap) {
        throw Error(ErrorKind::ScaleExceeded, "candidate space for " + std::string(to_string(tag.family)) +
                                                  " exceeds the cap of " + std::to_string(opts.cap));
    }
    if (tag.n == 0 || tag.m == 0) {
        auto sink = make_sink();
        scan_partition(tag, 0, sink);
        merge(sink);
        return;
    }
    std::vector<decltype(make_sink())> sinks;
    for (int v = 1; v <= tag.m; ++v) sinks.push_back(make_sink());
    const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(tag.m)));
    if (workers == 1) {
        for (int v = 1; v <= tag.m; ++v) scan_partition(tag, v, sinks[v - 1]);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (int v = 1 + static_cast<int>(w); v <= tag.m; v += static_cast<int>(workers)) {
                    scan_partition(tag, v, sinks[v - 1]);
                }
            });
        }
    }
    for (auto& s : sinks) merge(s);
}

struct CollectSink {
    std::vector<Member> members;
    void operator()(const std::vector<int>& p, const std::vector<int>& t) { members.push_back({p, t}); }
};

struct CountSink {
    std::uint64_t count = 0;
    void operator()(const std::vector<int>&, const std::vector<int>&) { ++count; }
};

}  // namespace detail

/// Every member of the family in lexicographic order, found by filtering the
/// full candidate space through simulate/classify.
inline std::vector<Member> enumerate_family(const FamilyTag& tag, const EnumerateOptions& opts = {}) {
    std::vector<Member> out;
    detail::run_partitioned(
        tag, opts, [] { return detail::CollectSink{}; },
        [&](detail::CollectSink& s) {
            out.insert(out.end(), std::make_move_iterator(s.members.begin()), std::make_move_iterator(s.members.end()));
        });
    return out;
}

inline Count count_family(const FamilyTag& tag, const EnumerateOptions& opts = {}) {
    std::uint64_t total = 0;
    detail::run_partitioned(
        tag, opts, [] { return detail::CountSink{}; }, [&](detail::CountSink& s) { total += s.count; });
    return Count(total);
}

inline std::set<PreferenceList> member_set(const FamilyTag& tag, const EnumerateOptions& opts = {}) {
    std::set<PreferenceList> out;
    for (Member& m : enumerate_family(tag, opts)) out.insert(std::move(m.prefs));
    return out;
}

}  // namespace ipf::oracle
