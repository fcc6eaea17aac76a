#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "ipf/error.hpp"
#include "ipf/memo.hpp"
#include "ipf/numbers.hpp"
#include "ipf/odometer.hpp"
#include "ipf/simulate.hpp"

namespace ipf {

inline constexpr std::uint64_t kDefaultIrpfCap = 100'000'000;

/// |PF_{n,m}| = (m + 1 - n)(m + 1)^(n - 1).
inline Count count_rational_pf(int n, int m) {
    if (n < 1 || n > m) throw Error(ErrorKind::OutOfDomain, "count_rational_pf needs 1 <= n <= m");
    return Count(m + 1 - n) * power(Count(m + 1), n - 1);
}

/// Interval parking functions on the square street: n! (n + 1)^(n - 1).
inline Count count_ipf(int n) {
    if (n < 1) throw Error(ErrorKind::OutOfDomain, "count_ipf needs n >= 1");
    return factorial(n) * power(Count(n + 1), n - 1);
}

/// Interval rational parking functions: every rational parking function
/// contributes one tolerance choice per occupied spot i, namely m - i + 1.
inline Count count_irpf(int n, int m, std::uint64_t cap = kDefaultIrpfCap) {
    if (n < 1 || n > m) throw Error(ErrorKind::OutOfDomain, "count_irpf needs 1 <= n <= m");
    if (detail::tuple_space(m, n) > cap) {
        throw Error(ErrorKind::ScaleExceeded, "m^n exceeds the enumeration cap");
    }
    Count total = 0;
    detail::for_each_tuple(n, m, [&](const std::vector<int>& prefs) {
        ParkResult r = park(prefs, m);
        if (!r) return true;
        Count weight = 1;
        for (int spot : occupied_spots(r.outcome())) weight *= m - spot + 1;
        total += weight;
        return true;
    });
    return total;
}

/// ell-interval parking functions of length n, by conditioning on the spot
/// where the last car parks.
inline Count count_ell_ipf(int n, int ell) {
    if (n < 0 || ell < 0) throw Error(ErrorKind::OutOfDomain, "count_ell_ipf needs n, ell >= 0");
    static detail::Memo<std::pair<int, int>, Count> memo;
    if (n == 0) return 1;
    return memo.get_or_compute({n, ell}, [&] {
        Count total = 0;
        for (int x = 0; x <= n - 1; ++x) {
            total += binomial(n - 1, x) * std::min(x + 1, ell + 1) * count_ell_ipf(x, ell) *
                     count_ell_ipf(n - 1 - x, ell);
        }
        return total;
    });
}

/// Boundary values used by the rational ell-interval recursion when a
/// sub-street is empty or too short.
struct IrpfConventions {
    /// |IPF_{0,-1}(ell)|: no cars on a street of length -1 (the spot left of
    /// a contiguous run that starts at spot 1).
    Count empty_list_on_negative_street = 1;

    friend bool operator==(const IrpfConventions&, const IrpfConventions&) = default;
};

namespace detail {

class EllIrpfRecursion {
public:
    EllIrpfRecursion(int ell, IrpfConventions conv) : ell_(ell), conv_(std::move(conv)) {}

    Count operator()(int cars, int spots) {
        if (cars == 0) return spots >= 0 ? Count(1) : conv_.empty_list_on_negative_street;
        if (spots < cars) return 0;
        if (auto it = cache_.find({cars, spots}); it != cache_.end()) return it->second;

        Count total = 0;
        for (int z = 1; z <= spots; ++z) {
            // k earlier cars park left of z, the rest right of z.
            for (int k = 0; k <= std::min(z - 1, cars - 1); ++k) {
                Count right = (*this)(cars - 1 - k, spots - z);
                if (right == 0) continue;
                // L of the k cars form the run directly left of z.
                Count inner = 0;
                for (int run = 0; run <= k; ++run) {
                    Count left = (*this)(k - run, z - run - 2);
                    if (left == 0) continue;
                    inner += binomial(k, run) * (std::min(ell_, run) + 1) * left * count_ell_ipf(run, ell_);
                }
                total += binomial(cars - 1, k) * right * inner;
            }
        }
        cache_.emplace(std::make_pair(cars, spots), total);
        return total;
    }

private:
    int ell_;
    IrpfConventions conv_;
    std::map<std::pair<int, int>, Count> cache_;
};

}  // namespace detail

/// ell-interval rational parking functions with n cars on m spots.
inline Count count_ell_irpf(int n, int m, int ell, const IrpfConventions& conv = {}) {
    if (n < 0 || ell < 0 || m < n) {
        throw Error(ErrorKind::OutOfDomain, "count_ell_irpf needs 0 <= n <= m and ell >= 0");
    }
    if (conv != IrpfConventions{}) return detail::EllIrpfRecursion(ell, conv)(n, m);
    static detail::Memo<std::tuple<int, int, int>, Count> memo;
    return memo.get_or_compute({n, m, ell}, [&] { return detail::EllIrpfRecursion(ell, conv)(n, m); });
}

/// Nondecreasing ell-interval parking functions of length n: Dyck paths of
/// height at most ell + 1, read off the bounded-height series.
inline Count count_nd_ell_ipf(int n, int ell) {
    if (n < 0 || ell < 0) throw Error(ErrorKind::OutOfDomain, "count_nd_ell_ipf needs n, ell >= 0");
    return bounded_height_series(ell + 1, n)[n];
}

/// Nondecreasing ell-interval rational parking functions with m > n.
///
/// The m - n empty spots split the street into m - n + 1 runs (including the
/// run after the last empty spot); each run of length w is filled by a
/// nondecreasing ell-interval parking function of length w. Summing over the
/// placements of the empty spots is a convolution over run lengths.
inline Count count_nd_ell_irpf(int n, int m, int ell) {
    if (n < 0 || ell < 0 || m <= n) {
        throw Error(ErrorKind::OutOfDomain, "count_nd_ell_irpf needs 0 <= n < m; use count_nd_ell_ipf for m = n");
    }
    const std::vector<Count> run = bounded_height_series(ell + 1, n);
    const int runs = m - n + 1;
    // ways[c]: fillings of the runs seen so far using c cars.
    std::vector<Count> ways(n + 1, 0);
    ways[0] = 1;
    for (int r = 0; r < runs; ++r) {
        std::vector<Count> next(n + 1, 0);
        for (int c = 0; c <= n; ++c) {
            if (ways[c] == 0) continue;
            for (int w = 0; c + w <= n; ++w) next[c + w] += ways[c] * run[w];
        }
        ways = std::move(next);
    }
    return ways[n];
}

/// Nondecreasing ell-interval Fubini rankings: the last rank is shared by
/// x + 1 competitors for some 0 <= x <= ell. Terms with n - x - 1 < 0 drop out.
inline Count count_nd_ell_fubini(int n, int ell) {
    if (n < 0 || ell < 0) throw Error(ErrorKind::OutOfDomain, "count_nd_ell_fubini needs n, ell >= 0");
    if (n == 0) return 1;
    static detail::Memo<std::pair<int, int>, Count> memo;
    return memo.get_or_compute({n, ell}, [&] {
        Count total = 0;
        for (int x = 0; x <= ell && n - x - 1 >= 0; ++x) total += count_nd_ell_fubini(n - x - 1, ell);
        return total;
    });
}

/// Unit interval rational parking functions from the unit interval counts on
/// longer square streets, weighted by unsigned Stirling numbers of the first kind.
inline Count count_uirpf_stirling1(int n, int m) {
    if (m < 1 || n < 0 || m < n) throw Error(ErrorKind::OutOfDomain, "count_uirpf_stirling1 needs m >= 1, 0 <= n <= m");
    const int d = m - n;
    Count sum = 0;
    for (int i = 0; i <= d; ++i) sum += stirling1_unsigned(d + 1, i + 1) * count_ell_ipf(n + i, 1);
    const Count denom = power(Count(2), d) * factorial(d);
    if (sum % denom != 0) {
        throw Error(ErrorKind::NonIntegerResult, "Stirling-first sum " + sum.str() + " not divisible by " + denom.str());
    }
    return sum / denom;
}

/// Unit interval rational parking functions as barred preferential
/// arrangements: k ordered blocks, then m - n bars among k + 1 gaps.
inline Count count_uirpf_stirling2(int n, int m) {
    if (n < 1 || m < n) throw Error(ErrorKind::OutOfDomain, "count_uirpf_stirling2 needs 1 <= n <= m");
    Count total = 0;
    for (int k = 0; k <= n; ++k) total += factorial(k) * stirling2(n, k) * binomial(m - n + k, k);
    return total;
}

}  // namespace ipf
