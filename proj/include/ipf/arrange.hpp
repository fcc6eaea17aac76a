#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ipf/classify.hpp"
#include "ipf/error.hpp"
#include "ipf/simulate.hpp"

namespace ipf::arrange {

inline constexpr std::uint64_t kDefaultCap = 10'000'000;

using Block = std::vector<int>;
using FubiniRanking = std::vector<int>;

namespace detail {

inline void check_blocks(const std::vector<Block>& blocks, int n) {
    std::vector<bool> seen(n + 1, false);
    int total = 0;
    for (const Block& b : blocks) {
        if (b.empty()) throw Error(ErrorKind::MalformedArrangement, "empty block");
        if (!std::is_sorted(b.begin(), b.end())) {
            throw Error(ErrorKind::MalformedArrangement, "block elements must be ascending");
        }
        for (int e : b) {
            if (e < 1 || e > n || seen[e]) {
                throw Error(ErrorKind::MalformedArrangement, "element " + std::to_string(e) + " repeated or outside [n]");
            }
            seen[e] = true;
            ++total;
        }
    }
    if (total != n) throw Error(ErrorKind::MalformedArrangement, "blocks do not cover [n]");
}

inline int element_count(const std::vector<Block>& items) {
    int n = 0;
    for (const Block& b : items) n += static_cast<int>(b.size());
    return n;
}

inline void append_block(std::string& out, const Block& b) {
    out.push_back('(');
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(b[i]);
    }
    out.push_back(')');
}

}  // namespace detail

/// Ordered set partition of [n]; blocks ranked left to right.
class PreferentialArrangement {
public:
    PreferentialArrangement() = default;
    explicit PreferentialArrangement(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
        for (Block& b : blocks_) std::sort(b.begin(), b.end());
        detail::check_blocks(blocks_, size());
    }

    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    int size() const noexcept { return detail::element_count(blocks_); }

    std::string str() const {
        std::string out;
        for (const Block& b : blocks_) detail::append_block(out, b);
        return out;
    }

    friend auto operator<=>(const PreferentialArrangement&, const PreferentialArrangement&) = default;

private:
    std::vector<Block> blocks_;
};

/// A preferential arrangement with bars between (or around) its blocks.
/// Items are blocks or bars; a bar is stored as an empty item.
class BarredPreferentialArrangement {
public:
    BarredPreferentialArrangement() = default;
    explicit BarredPreferentialArrangement(std::vector<Block> items) : items_(std::move(items)) {
        std::vector<Block> blocks;
        for (Block& b : items_) {
            std::sort(b.begin(), b.end());
            if (!b.empty()) blocks.push_back(b);
        }
        detail::check_blocks(blocks, detail::element_count(blocks));
    }

    const std::vector<Block>& items() const noexcept { return items_; }
    static bool is_bar(const Block& item) noexcept { return item.empty(); }

    int size() const noexcept { return detail::element_count(items_); }
    int bars() const noexcept {
        return static_cast<int>(std::count_if(items_.begin(), items_.end(), is_bar));
    }

    PreferentialArrangement unbarred() const {
        std::vector<Block> blocks;
        for (const Block& b : items_) {
            if (!is_bar(b)) blocks.push_back(b);
        }
        return PreferentialArrangement(std::move(blocks));
    }

    std::string str() const {
        std::string out;
        for (const Block& b : items_) {
            if (is_bar(b)) out.push_back('|');
            else detail::append_block(out, b);
        }
        return out;
    }

    friend auto operator<=>(const BarredPreferentialArrangement&, const BarredPreferentialArrangement&) = default;

private:
    std::vector<Block> items_;
};

/// Parses "(2)|(3 5)(1)||(4 6 7)". Whitespace is allowed anywhere except
/// inside numbers; commas may also separate elements.
inline BarredPreferentialArrangement parse_bpa(std::string_view text) {
    std::vector<Block> items;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] == '|') {
            items.emplace_back();
            ++i;
        } else if (text[i] == '(') {
            ++i;
            Block b;
            while (true) {
                skip_ws();
                if (i >= text.size()) throw Error(ErrorKind::ParseError, "unterminated block");
                if (text[i] == ')') {
                    ++i;
                    break;
                }
                if (text[i] == ',') {
                    ++i;
                    continue;
                }
                if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
                    throw Error(ErrorKind::ParseError, "unexpected '" + std::string(1, text[i]) + "' in block");
                }
                int v = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    v = v * 10 + (text[i] - '0');
                    ++i;
                }
                b.push_back(v);
            }
            if (b.empty()) throw Error(ErrorKind::MalformedArrangement, "empty block '()'");
            items.push_back(std::move(b));
        } else {
            throw Error(ErrorKind::ParseError, "unexpected '" + std::string(1, text[i]) + "'");
        }
    }
    return BarredPreferentialArrangement(std::move(items));
}

inline PreferentialArrangement parse_pa(std::string_view text) {
    BarredPreferentialArrangement q = parse_bpa(text);
    if (q.bars() != 0) throw Error(ErrorKind::MalformedArrangement, "preferential arrangement cannot contain bars");
    return q.unbarred();
}

/// Block j holds the competitors with the j-th smallest rank.
inline PreferentialArrangement fubini_to_pa(std::span<const int> ranking) {
    if (!is_fubini_ranking(ranking)) throw Error(ErrorKind::NotFubini, "not a Fubini ranking");
    const int n = static_cast<int>(ranking.size());
    std::vector<Block> by_rank(n + 1);
    for (int i = 0; i < n; ++i) by_rank[ranking[i]].push_back(i + 1);
    std::vector<Block> blocks;
    for (Block& b : by_rank) {
        if (!b.empty()) blocks.push_back(std::move(b));
    }
    return PreferentialArrangement(std::move(blocks));
}

/// Every element of block j gets rank 1 + (size of blocks before j).
inline FubiniRanking pa_to_fubini(const PreferentialArrangement& p) {
    FubiniRanking r(p.size(), 0);
    int rank = 1;
    for (const Block& b : p.blocks()) {
        for (int e : b) r[e - 1] = rank;
        rank += static_cast<int>(b.size());
    }
    return r;
}

struct BlockRun {
    int min = 0;
    int length = 0;
    friend bool operator==(const BlockRun&, const BlockRun&) = default;
};

/// Maximal runs (i, i, i+1, ..., i+k-2) of the weakly increasing rearrangement.
struct BlockStructure {
    std::vector<BlockRun> blocks;

    /// Values of each run, e.g. {1}, {3,3}, {5}, {8,8,9}.
    std::vector<std::vector<int>> expanded() const {
        std::vector<std::vector<int>> out;
        for (const BlockRun& b : blocks) {
            std::vector<int> v{b.min};
            for (int y = 2; y <= b.length; ++y) v.push_back(b.min + y - 2);
            out.push_back(std::move(v));
        }
        return out;
    }
};

namespace detail {

inline Outcome unit_interval_outcome(std::span<const int> prefs, int m) {
    if (static_cast<int>(prefs.size()) > m) throw Error(ErrorKind::NotUnitInterval, "more cars than spots");
    ParkResult r = park(prefs, m);
    if (!r) throw Error(ErrorKind::NotUnitInterval, "car " + std::to_string(r.failure().car) + " cannot park");
    Displacement d = displacements(prefs, r.outcome());
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] > 1) {
            throw Error(ErrorKind::NotUnitInterval, "car " + std::to_string(i + 1) + " parks more than one spot away");
        }
    }
    return r.outcome();
}

}  // namespace detail

inline BlockStructure block_structure(std::span<const int> prefs, int n, int m) {
    if (static_cast<int>(prefs.size()) != n) throw Error(ErrorKind::MalformedInput, "preference list length differs from n");
    detail::unit_interval_outcome(prefs, m);
    std::vector<int> a(prefs.begin(), prefs.end());
    std::sort(a.begin(), a.end());
    BlockStructure out;
    std::size_t i = 0;
    while (i < a.size()) {
        const std::size_t start = i;
        const int v = a[i++];
        if (i < a.size() && a[i] == v) {
            ++i;
            while (i < a.size() && a[i] == v + static_cast<int>(i - start) - 1) ++i;
        }
        out.blocks.push_back({v, static_cast<int>(i - start)});
    }
    return out;
}

/// Flatten the outcome, turn empty spots into bars, then cut the car letters
/// into consecutive groups sized by the block structure.
inline BarredPreferentialArrangement uirpf_to_bpa(std::span<const int> prefs, int m) {
    const int n = static_cast<int>(prefs.size());
    const Outcome outcome = detail::unit_interval_outcome(prefs, m);
    const BlockStructure bs = block_structure(prefs, n, m);

    std::vector<Block> items;
    std::size_t next_block = 0;
    Block open;
    for (int car : outcome.slots()) {
        if (car == kEmpty) {
            if (!open.empty()) {
                throw Error(ErrorKind::Inconsistent, "an empty spot falls inside a block of the outcome");
            }
            items.emplace_back();
            continue;
        }
        open.push_back(car);
        if (static_cast<int>(open.size()) == bs.blocks.at(next_block).length) {
            items.push_back(std::move(open));
            open.clear();
            ++next_block;
        }
    }
    if (!open.empty() || next_block != bs.blocks.size()) {
        throw Error(ErrorKind::Inconsistent, "outcome letters do not split into the block sizes");
    }
    return BarredPreferentialArrangement(std::move(items));
}

/// Inverse of uirpf_to_bpa; the street has n + (bar count) spots. The y-th
/// element (y >= 2) of a block whose minimum sits at spot s prefers s + y - 2.
inline PreferenceList bpa_to_uirpf(const BarredPreferentialArrangement& q) {
    const int n = q.size();
    PreferenceList prefs(n, 0);
    int spot = 1;
    for (const Block& item : q.items()) {
        if (BarredPreferentialArrangement::is_bar(item)) {
            ++spot;
            continue;
        }
        const int first = spot;
        for (std::size_t y = 1; y <= item.size(); ++y) {
            prefs[item[y - 1] - 1] = y == 1 ? first : first + static_cast<int>(y) - 2;
        }
        spot += static_cast<int>(item.size());
    }
    return prefs;
}

namespace detail {

template <class Fn>
void for_each_ordered_partition(std::vector<int>& remaining, std::vector<Block>& prefix, Fn& fn) {
    if (remaining.empty()) {
        fn(prefix);
        return;
    }
    const int k = static_cast<int>(remaining.size());
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        Block block;
        std::vector<int> rest;
        for (int i = 0; i < k; ++i) {
            if (mask & (1u << i)) block.push_back(remaining[i]);
            else rest.push_back(remaining[i]);
        }
        prefix.push_back(std::move(block));
        for_each_ordered_partition(rest, prefix, fn);
        prefix.pop_back();
    }
}

}  // namespace detail

/// All preferential arrangements of [n], sorted by block sequence.
inline std::vector<PreferentialArrangement> generate_pa(int n, std::uint64_t cap = kDefaultCap) {
    if (n < 0 || n > 20) throw Error(ErrorKind::OutOfDomain, "generate_pa needs 0 <= n <= 20");
    std::vector<PreferentialArrangement> out;
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    std::vector<Block> prefix;
    auto emit = [&](const std::vector<Block>& blocks) {
        if (out.size() >= cap) throw Error(ErrorKind::ScaleExceeded, "arrangement stream exceeds the cap");
        out.emplace_back(blocks);
    };
    detail::for_each_ordered_partition(all, prefix, emit);
    std::sort(out.begin(), out.end());
    return out;
}

/// All barred preferential arrangements of [n] with b bars, sorted with a bar
/// ordering before any block.
inline std::vector<BarredPreferentialArrangement> generate_bpa(int n, int b, std::uint64_t cap = kDefaultCap) {
    if (b < 0) throw Error(ErrorKind::OutOfDomain, "bar count must be nonnegative");
    std::vector<BarredPreferentialArrangement> out;
    for (const PreferentialArrangement& p : generate_pa(n, cap)) {
        const int gaps = static_cast<int>(p.blocks().size()) + 1;
        // bars_in[g]: bars placed before block g (g == gaps-1 is the tail).
        std::vector<int> bars_in(gaps, 0);
        auto place = [&](auto&& self, int g, int left) -> void {
            if (g == gaps - 1) {
                bars_in[g] = left;
                std::vector<Block> items;
                for (int j = 0; j < gaps; ++j) {
                    for (int t = 0; t < bars_in[j]; ++t) items.emplace_back();
                    if (j < gaps - 1) items.push_back(p.blocks()[j]);
                }
                if (out.size() >= cap) throw Error(ErrorKind::ScaleExceeded, "arrangement stream exceeds the cap");
                out.emplace_back(std::move(items));
                return;
            }
            for (int k = 0; k <= left; ++k) {
                bars_in[g] = k;
                self(self, g + 1, left - k);
            }
        };
        place(place, 0, b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ipf::arrange
