#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ipf/error.hpp"
#include "ipf/simulate.hpp"

namespace ipf {

/// Named combinatorial families. Parameters that a family does not use are ignored.
enum class Family {
    PF,             // rational parking functions, n cars on m spots
    NDPF,           // nondecreasing rational parking functions
    IPF_PAIR,       // interval rational parking functions (prefs, tolerances)
    ELL_IPF,        // every car parks at most ell spots past its preference
    ND_ELL_IPF,     // nondecreasing members of ELL_IPF
    FUBINI,         // Fubini rankings of length n
    ELL_FUBINI,     // Fubini rankings that are ell-interval parking functions
    ND_ELL_FUBINI,  // nondecreasing members of ELL_FUBINI
    UIRPF,          // unit interval rational parking functions (ell = 1)
};

inline constexpr Family kAllFamilies[] = {
    Family::PF,     Family::NDPF,       Family::IPF_PAIR,      Family::ELL_IPF, Family::ND_ELL_IPF,
    Family::FUBINI, Family::ELL_FUBINI, Family::ND_ELL_FUBINI, Family::UIRPF,
};

inline std::string_view to_string(Family f) {
    switch (f) {
    case Family::PF: return "PF";
    case Family::NDPF: return "NDPF";
    case Family::IPF_PAIR: return "IPF_PAIR";
    case Family::ELL_IPF: return "ELL_IPF";
    case Family::ND_ELL_IPF: return "ND_ELL_IPF";
    case Family::FUBINI: return "FUBINI";
    case Family::ELL_FUBINI: return "ELL_FUBINI";
    case Family::ND_ELL_FUBINI: return "ND_ELL_FUBINI";
    case Family::UIRPF: return "UIRPF";
    }
    return "?";
}

inline Family family_from_string(std::string_view s) {
    for (Family f : kAllFamilies) {
        if (to_string(f) == s) return f;
    }
    throw Error(ErrorKind::ParseError, "unknown family '" + std::string(s) + "'");
}

/// Fubini families live on the square street; UIRPF fixes ell = 1.
inline bool uses_street_length(Family f) {
    return f != Family::FUBINI && f != Family::ELL_FUBINI && f != Family::ND_ELL_FUBINI;
}

inline bool uses_ell(Family f) {
    return f == Family::ELL_IPF || f == Family::ND_ELL_IPF || f == Family::ELL_FUBINI ||
           f == Family::ND_ELL_FUBINI;
}

struct FamilyTag {
    Family family = Family::PF;
    int n = 0;
    int m = 0;
    int ell = 0;

    FamilyTag() = default;
    FamilyTag(Family f, int n_, int m_ = -1, int ell_ = 0) : family(f), n(n_), m(m_), ell(ell_) {
        if (!uses_street_length(f) || m < 0) m = n;
        if (f == Family::UIRPF) ell = 1;
        if (!uses_ell(f) && f != Family::UIRPF) ell = 0;
        validate();
    }

    void validate() const {
        if (n < 0) throw Error(ErrorKind::OutOfDomain, "n must be nonnegative");
        if (m < n) throw Error(ErrorKind::OutOfDomain, "m must be at least n");
        if (ell < 0) throw Error(ErrorKind::OutOfDomain, "ell must be nonnegative");
    }

    friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

inline bool is_rational_pf(std::span<const int> prefs, int m) { return park(prefs, m).ok(); }

inline bool is_ell_interval(std::span<const int> prefs, int m, int ell) {
    ParkResult r = park(prefs, m);
    if (!r) return false;
    Displacement d = displacements(prefs, r.outcome());
    return std::all_of(d.begin(), d.end(), [ell](int x) { return x <= ell; });
}

inline bool is_interval_pf(std::span<const int> prefs, std::span<const int> tol, int m) {
    return park_interval(prefs, tol, m).ok();
}

inline bool is_nondecreasing(std::span<const int> t) { return std::is_sorted(t.begin(), t.end()); }

/// Ranks must follow the greedy chain 1, 1 + mult(1), ... with nothing else used.
inline bool is_fubini_ranking(std::span<const int> t) {
    const int n = static_cast<int>(t.size());
    std::vector<int> mult(n + 2, 0);
    for (int r : t) {
        if (r < 1 || r > n) {
            throw Error(ErrorKind::MalformedInput, "rank " + std::to_string(r) + " outside [1, n]");
        }
        ++mult[r];
    }
    int covered = 0;
    int rank = 1;
    while (rank <= n && mult[rank] > 0) {
        covered += mult[rank];
        rank += mult[rank];
    }
    return covered == n;
}

/// Fast path for is_rational_pf: sorted entries satisfy a'_i <= m - n + i.
/// Only used after the oracle equivalence tests.
inline bool is_rational_pf_by_rearrangement(std::span<const int> prefs, int m) {
    detail::check_preferences(prefs, m);
    std::vector<int> sorted(prefs.begin(), prefs.end());
    std::sort(sorted.begin(), sorted.end());
    const int n = static_cast<int>(sorted.size());
    for (int i = 0; i < n; ++i) {
        if (sorted[i] > m - n + i + 1) return false;
    }
    return true;
}

/// Membership for tuple families. IPF_PAIR needs a tolerance vector, see is_interval_pf.
inline bool is_member(const FamilyTag& tag, std::span<const int> t) {
    switch (tag.family) {
    case Family::PF: return is_rational_pf(t, tag.m);
    case Family::NDPF: return is_nondecreasing(t) && is_rational_pf(t, tag.m);
    case Family::ELL_IPF: return is_ell_interval(t, tag.m, tag.ell);
    case Family::ND_ELL_IPF: return is_nondecreasing(t) && is_ell_interval(t, tag.m, tag.ell);
    case Family::UIRPF: return is_ell_interval(t, tag.m, 1);
    case Family::FUBINI: return is_fubini_ranking(t);
    case Family::ELL_FUBINI: return is_fubini_ranking(t) && is_ell_interval(t, tag.n, tag.ell);
    case Family::ND_ELL_FUBINI:
        return is_nondecreasing(t) && is_fubini_ranking(t) && is_ell_interval(t, tag.n, tag.ell);
    case Family::IPF_PAIR: break;
    }
    throw Error(ErrorKind::MalformedInput, "IPF_PAIR membership needs a tolerance vector");
}

}  // namespace ipf
