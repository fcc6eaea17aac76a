#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ipf/error.hpp"

namespace ipf {

/// Car preferences, 1-based spot indices. Car i (1-based) prefers entry i-1.
using PreferenceList = std::vector<int>;
/// Highest spot each car tolerates; pairs entrywise with a PreferenceList.
using ToleranceVector = std::vector<int>;
/// Per-car distance between parked spot and preferred spot.
using Displacement = std::vector<int>;

inline constexpr int kEmpty = 0;

/// Spot-indexed record of which car occupies each spot (kEmpty if none).
class Outcome {
public:
    Outcome() = default;
    explicit Outcome(std::vector<int> slots) : slots_(std::move(slots)) {
        std::vector<bool> seen(slots_.size() + 1, false);
        for (int car : slots_) {
            if (car == kEmpty) continue;
            if (car < 0 || car > static_cast<int>(slots_.size()) || seen[car]) {
                throw Error(ErrorKind::MalformedInput, "outcome lists an invalid or repeated car");
            }
            seen[car] = true;
        }
    }

    const std::vector<int>& slots() const noexcept { return slots_; }
    int spots() const noexcept { return static_cast<int>(slots_.size()); }

    /// Car in spot s (1-based), or kEmpty.
    int at(int spot) const { return slots_.at(spot - 1); }

    int parked() const noexcept {
        int c = 0;
        for (int car : slots_) c += car != kEmpty;
        return c;
    }

    friend bool operator==(const Outcome&, const Outcome&) = default;

private:
    std::vector<int> slots_;
};

/// First car that could not park, together with the occupancy at that moment.
struct ParkFailure {
    int car = 0;
    std::vector<int> partial;

    friend bool operator==(const ParkFailure&, const ParkFailure&) = default;
};

class ParkResult {
public:
    ParkResult(Outcome o) : value_(std::move(o)) {}
    ParkResult(ParkFailure f) : value_(std::move(f)) {}

    bool ok() const noexcept { return std::holds_alternative<Outcome>(value_); }
    explicit operator bool() const noexcept { return ok(); }

    const Outcome& outcome() const { return std::get<Outcome>(value_); }
    const ParkFailure& failure() const { return std::get<ParkFailure>(value_); }

private:
    std::variant<Outcome, ParkFailure> value_;
};

namespace detail {

inline void check_preferences(std::span<const int> prefs, int m) {
    // An empty street only hosts the empty preference list.
    if (m < 0 || (m == 0 && !prefs.empty())) {
        throw Error(ErrorKind::MalformedInput, "street length must be positive");
    }
    if (static_cast<int>(prefs.size()) > m) {
        throw Error(ErrorKind::MalformedInput, "more cars than spots");
    }
    for (int a : prefs) {
        if (a < 1 || a > m) {
            throw Error(ErrorKind::MalformedInput,
                        "preference " + std::to_string(a) + " outside [1, " + std::to_string(m) + "]");
        }
    }
}

// Shared parking loop. `limit(i)` is the highest spot car i accepts.
template <class Limit>
ParkResult run_parking(std::span<const int> prefs, int m, Limit limit) {
    std::vector<int> slots(m, kEmpty);
    for (std::size_t i = 0; i < prefs.size(); ++i) {
        int spot = prefs[i];
        while (spot <= m && slots[spot - 1] != kEmpty) ++spot;
        if (spot > m || spot > limit(i)) {
            return ParkFailure{static_cast<int>(i) + 1, std::move(slots)};
        }
        slots[spot - 1] = static_cast<int>(i) + 1;
    }
    return Outcome(std::move(slots));
}

}  // namespace detail

/// Standard parking procedure: cars arrive in order and take the first free
/// spot at or after their preference.
inline ParkResult park(std::span<const int> prefs, int m) {
    detail::check_preferences(prefs, m);
    return detail::run_parking(prefs, m, [m](std::size_t) { return m; });
}

/// Like park, but car i fails if its first free spot lies beyond tol[i].
inline ParkResult park_interval(std::span<const int> prefs, std::span<const int> tol, int m) {
    detail::check_preferences(prefs, m);
    if (prefs.size() != tol.size()) {
        throw Error(ErrorKind::MalformedInput, "preference and tolerance lengths differ");
    }
    for (std::size_t i = 0; i < tol.size(); ++i) {
        if (tol[i] > m) throw Error(ErrorKind::MalformedInput, "tolerance beyond the street");
        if (tol[i] < prefs[i]) {
            throw Error(ErrorKind::ToleranceBelowPreference,
                        "car " + std::to_string(i + 1) + " tolerates less than its preference");
        }
    }
    return detail::run_parking(prefs, m, [&tol](std::size_t i) { return tol[i]; });
}

/// Ascending occupied spot indices.
inline std::vector<int> occupied_spots(const Outcome& outcome) {
    std::vector<int> spots;
    for (int s = 1; s <= outcome.spots(); ++s) {
        if (outcome.at(s) != kEmpty) spots.push_back(s);
    }
    return spots;
}

/// Spot where each car parked, indexed by car.
inline std::vector<int> parked_spots(const Outcome& outcome, int cars) {
    std::vector<int> where(cars, 0);
    for (int s = 1; s <= outcome.spots(); ++s) {
        int car = outcome.at(s);
        if (car == kEmpty) continue;
        if (car > cars) throw Error(ErrorKind::Inconsistent, "outcome names a car beyond the list");
        where[car - 1] = s;
    }
    return where;
}

inline Displacement displacements(std::span<const int> prefs, const Outcome& outcome) {
    const int n = static_cast<int>(prefs.size());
    std::vector<int> where = parked_spots(outcome, n);
    Displacement d(n);
    for (int i = 0; i < n; ++i) {
        if (where[i] == 0) {
            throw Error(ErrorKind::Inconsistent, "car " + std::to_string(i + 1) + " is not in the outcome");
        }
        d[i] = where[i] - prefs[i];
        if (d[i] < 0) {
            throw Error(ErrorKind::Inconsistent, "car " + std::to_string(i + 1) + " parked before its preference");
        }
    }
    return d;
}

}  // namespace ipf
