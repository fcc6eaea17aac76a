#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ipf/classify.hpp"
#include "ipf/error.hpp"
#include "ipf/simulate.hpp"

namespace ipf::lattice {

inline constexpr std::uint64_t kDefaultCap = 10'000'000;

/// Which lattice paths from (0,0) to (m,n) count as valid.
enum class PathModel {
    /// Weakly above the line y = (n/m) x: after e east and v north steps, v*m >= n*e.
    Diagonal,
    /// Never more than m - n east steps ahead of the north steps. These are
    /// exactly the images of nondecreasing rational parking functions.
    Parking,
};

/// True iff `steps` has n N-steps, m E-steps and every prefix respects the model.
inline bool is_valid_dyck(std::string_view steps, int n, int m, PathModel model = PathModel::Diagonal) {
    if (n < 0 || m < 0) return false;
    long long north = 0, east = 0;
    for (char c : steps) {
        if (c == 'N') ++north;
        else if (c == 'E') ++east;
        else return false;
        if (north > n || east > m) return false;
        const bool ok = model == PathModel::Diagonal ? north * m >= static_cast<long long>(n) * east
                                                     : east <= north + (m - n);
        if (!ok) return false;
    }
    return north == n && east == m;
}

/// An N/E word with its shape (n north steps, m east steps), validated
/// against a path model at construction.
class DyckWord {
public:
    static DyckWord make(std::string steps, int n, int m, PathModel model = PathModel::Diagonal) {
        if (!is_valid_dyck(steps, n, m, model)) {
            throw Error(ErrorKind::InvalidWord, "'" + steps + "' is not a valid (" + std::to_string(n) + "," +
                                                    std::to_string(m) + ") path");
        }
        return DyckWord(std::move(steps), n, m, model);
    }

    const std::string& str() const noexcept { return steps_; }
    int north() const noexcept { return n_; }
    int east() const noexcept { return m_; }
    PathModel model() const noexcept { return model_; }
    std::size_t size() const noexcept { return steps_.size(); }

    friend bool operator==(const DyckWord& a, const DyckWord& b) {
        return a.steps_ == b.steps_ && a.n_ == b.n_ && a.m_ == b.m_;
    }

private:
    DyckWord(std::string steps, int n, int m, PathModel model)
        : steps_(std::move(steps)), n_(n), m_(m), model_(model) {}

    std::string steps_;
    int n_;
    int m_;
    PathModel model_;
};

/// h(i) = #N - #E over the first i steps, for i = 0..length.
struct HeightProfile {
    std::vector<int> heights;
    int max = 0;
};

inline HeightProfile height_profile(std::string_view steps) {
    HeightProfile p;
    p.heights.reserve(steps.size() + 1);
    int h = 0;
    p.heights.push_back(0);
    for (char c : steps) {
        h += c == 'N' ? 1 : -1;
        p.heights.push_back(h);
        p.max = std::max(p.max, h);
    }
    return p;
}

/// Maximum prefix excess of N over E (never below 0, the empty prefix counts).
inline int height(std::string_view steps) { return height_profile(steps).max; }
inline int height(const DyckWord& w) { return height(w.str()); }

/// Maximum of the walk reflected at zero: N adds one, E subtracts one but
/// never goes below zero. Before the i-th N step this equals the
/// displacement of car i under the preference list read off the word.
inline int reflected_height(std::string_view steps) {
    int q = 0, best = 0;
    for (char c : steps) {
        q = c == 'N' ? q + 1 : std::max(q - 1, 0);
        best = std::max(best, q);
    }
    return best;
}
inline int reflected_height(const DyckWord& w) { return reflected_height(w.str()); }

/// The height notion paired with each model: plain height for diagonal
/// paths, reflected height for parking paths. They agree when n = m.
inline int model_height(std::string_view steps, PathModel model) {
    return model == PathModel::Diagonal ? height(steps) : reflected_height(steps);
}

/// a_i = 1 + number of E-steps before the i-th N-step.
inline PreferenceList dyck_to_prefs(const DyckWord& w) {
    PreferenceList prefs;
    prefs.reserve(w.north());
    int east = 0;
    for (char c : w.str()) {
        if (c == 'E') ++east;
        else prefs.push_back(east + 1);
    }
    return prefs;
}

inline PreferenceList dyck_to_prefs(std::string_view steps, int n, int m) {
    // Every diagonal path is also a parking path, so this is the widest check.
    return dyck_to_prefs(DyckWord::make(std::string(steps), n, m, PathModel::Parking));
}

/// Inverse of dyck_to_prefs: for each spot i, one N per car preferring i, then E.
inline DyckWord prefs_to_dyck(std::span<const int> prefs, int n, int m) {
    if (static_cast<int>(prefs.size()) != n) {
        throw Error(ErrorKind::MalformedInput, "preference list length differs from n");
    }
    if (!is_nondecreasing(prefs)) throw Error(ErrorKind::NotNondecreasing, "preferences must be nondecreasing");
    if (!is_rational_pf(prefs, m)) throw Error(ErrorKind::NotParkingFunction, "preferences do not park");
    std::string steps;
    steps.reserve(n + m);
    std::size_t j = 0;
    for (int spot = 1; spot <= m; ++spot) {
        while (j < prefs.size() && prefs[j] == spot) {
            steps.push_back('N');
            ++j;
        }
        steps.push_back('E');
    }
    const PathModel model = is_valid_dyck(steps, n, m, PathModel::Diagonal) ? PathModel::Diagonal : PathModel::Parking;
    return DyckWord::make(std::move(steps), n, m, model);
}

struct GenerateOptions {
    std::optional<int> max_height;
    PathModel model = PathModel::Diagonal;
    std::uint64_t cap = kDefaultCap;
};

/// Visits valid words in lexicographic order (N before E), pruning on the
/// model and on model_height <= max_height. fn returns false to stop.
template <class Fn>
void for_each_dyck(int n, int m, const GenerateOptions& opts, Fn&& fn) {
    if (n < 0 || m < 0 || n > m) throw Error(ErrorKind::OutOfDomain, "generate_dyck needs 0 <= n <= m");
    if (opts.max_height && *opts.max_height < 0) throw Error(ErrorKind::OutOfDomain, "height bound must be >= 0");
    std::string steps;
    steps.reserve(n + m);
    std::uint64_t emitted = 0;
    bool stop = false;
    const int bound = opts.max_height.value_or(n + m);

    auto prefix_ok = [&](long long north, long long east) {
        return opts.model == PathModel::Diagonal ? north * m >= static_cast<long long>(n) * east
                                                 : east <= north + (m - n);
    };
    // level: current height (plain or reflected per model).
    auto rec = [&](auto&& self, int north, int east, int level) -> void {
        if (stop) return;
        if (north == n && east == m) {
            if (++emitted > opts.cap) throw Error(ErrorKind::ScaleExceeded, "Dyck stream exceeds the cap");
            if (!fn(DyckWord::make(steps, n, m, opts.model))) stop = true;
            return;
        }
        if (north < n && level + 1 <= bound && prefix_ok(north + 1, east)) {
            steps.push_back('N');
            self(self, north + 1, east, level + 1);
            steps.pop_back();
        }
        if (east < m && prefix_ok(north, east + 1)) {
            const int next = opts.model == PathModel::Diagonal ? level - 1 : std::max(level - 1, 0);
            steps.push_back('E');
            self(self, north, east + 1, next);
            steps.pop_back();
        }
    };
    rec(rec, 0, 0, 0);
}

inline std::vector<DyckWord> generate_dyck(int n, int m, const GenerateOptions& opts = {}) {
    std::vector<DyckWord> out;
    for_each_dyck(n, m, opts, [&](DyckWord w) {
        out.push_back(std::move(w));
        return true;
    });
    return out;
}

inline std::uint64_t count_dyck(int n, int m, const GenerateOptions& opts = {}) {
    std::uint64_t c = 0;
    for_each_dyck(n, m, opts, [&](const DyckWord&) {
        ++c;
        return true;
    });
    return c;
}

}  // namespace ipf::lattice
