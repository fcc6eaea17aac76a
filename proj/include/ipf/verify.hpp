#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ipf/arrange.hpp"
#include "ipf/count.hpp"
#include "ipf/lattice.hpp"
#include "ipf/numbers.hpp"
#include "ipf/oracle.hpp"

namespace ipf::oracle {

struct Range {
    int lo = 0;
    int hi = 0;
    friend bool operator==(const Range&, const Range&) = default;
};

/// Parameter ranges for one identity. Points that an identity cannot use
/// (for example m < n) are skipped, not reported.
struct SweepSpec {
    Range n;
    Range m;
    Range ell;
};

struct Point {
    int n = 0;
    int m = 0;
    int ell = 0;
};

struct Context {
    EnumerateOptions enumeration;
    IrpfConventions conventions;
};

struct Comparison {
    Count lhs;
    Count rhs;
    /// Empty when lhs == rhs is the whole story; otherwise a counterexample.
    std::string detail;
    bool pass() const { return lhs == rhs && detail.empty(); }
};

enum class Axis { N, NM, NEll, NMEll };

struct Identity {
    std::string id;
    std::string description;
    Axis axis;
    SweepSpec sweep;
    /// Point filter on top of the ranges.
    std::function<bool(const Point&)> accepts;
    std::function<Comparison(const Point&, const Context&)> eval;
    /// Registered but excluded from the default sweep.
    bool in_default_sweep = true;
};

struct Record {
    std::string identity;
    Point point;
    Axis axis;
    Count lhs;
    Count rhs;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<Record> records;

    std::size_t failures() const {
        return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const Record& r) { return !r.pass; }));
    }

    nlohmann::json to_json() const {
        nlohmann::json out;
        out["records"] = nlohmann::json::array();
        for (const Record& r : records) {
            nlohmann::json params;
            params["n"] = r.point.n;
            if (r.axis == Axis::NM || r.axis == Axis::NMEll) params["m"] = r.point.m;
            if (r.axis == Axis::NEll || r.axis == Axis::NMEll) params["ell"] = r.point.ell;
            nlohmann::json rec{{"identity", r.identity},
                               {"params", params},
                               {"lhs", r.lhs.str()},
                               {"rhs", r.rhs.str()},
                               {"status", r.pass ? "pass" : "fail"}};
            if (!r.detail.empty()) rec["counterexample"] = r.detail;
            out["records"].push_back(std::move(rec));
        }
        out["total"] = records.size();
        out["failures"] = failures();
        return out;
    }
};

namespace detail {

inline std::string tuple_str(const std::vector<int>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

inline Comparison equal(Count lhs, Count rhs) { return {std::move(lhs), std::move(rhs), {}}; }

// Image of height-bounded words under dyck_to_prefs compared with the oracle set.
inline Comparison dyck_bijection(const Point& p, const Context& ctx, lattice::PathModel model) {
    const FamilyTag tag(Family::ND_ELL_IPF, p.n, p.m, p.ell);
    const std::set<PreferenceList> expected = member_set(tag, ctx.enumeration);
    std::set<PreferenceList> image;
    std::string detail;
    lattice::GenerateOptions opts;
    opts.max_height = p.ell + 1;
    opts.model = model;
    opts.cap = ctx.enumeration.cap;
    std::uint64_t words = 0;
    lattice::for_each_dyck(p.n, p.m, opts, [&](const lattice::DyckWord& w) {
        ++words;
        PreferenceList prefs = lattice::dyck_to_prefs(w);
        if (detail.empty() && !(lattice::prefs_to_dyck(prefs, p.n, p.m) == w)) detail = "round trip fails on " + w.str();
        if (detail.empty() && !expected.count(prefs)) detail = w.str() + " maps outside the family to " + tuple_str(prefs);
        if (!image.insert(std::move(prefs)).second && detail.empty()) detail = "two words share the image of " + w.str();
        return true;
    });
    if (detail.empty()) {
        for (const PreferenceList& e : expected) {
            if (!image.count(e)) {
                detail = "no word maps to " + tuple_str(e);
                break;
            }
        }
    }
    return {Count(expected.size()), Count(words), detail};
}

inline bool square(const Point& p) { return p.m == p.n; }

}  // namespace detail

/// All registered identities, in a fixed order.
inline const std::vector<Identity>& registry() {
    using detail::equal;
    auto any = [](const Point&) { return true; };
    auto m_at_least_n = [](const Point& p) { return p.m >= p.n && p.m >= 1; };
    auto m_above_n = [](const Point& p) { return p.m > p.n; };

    static const std::vector<Identity> identities = {
        {"ell_ipf_recursion_vs_oracle", "ell-interval recursion against exhaustive enumeration", Axis::NEll,
         {{1, 6}, {0, 0}, {0, 6}}, any,
         [](const Point& p, const Context& c) {
             return equal(count_ell_ipf(p.n, p.ell), count_family({Family::ELL_IPF, p.n, p.n, p.ell}, c.enumeration));
         }},
        {"ell_irpf_recursion_vs_oracle", "rational ell-interval recursion against exhaustive enumeration",
         Axis::NMEll, {{0, 5}, {1, 8}, {0, 4}}, m_at_least_n,
         [](const Point& p, const Context& c) {
             return equal(count_ell_irpf(p.n, p.m, p.ell, c.conventions),
                          count_family({Family::ELL_IPF, p.n, p.m, p.ell}, c.enumeration));
         }},
        {"ell_irpf_square_vs_ell_ipf", "rational recursion on the square street against the square recursion",
         Axis::NEll, {{0, 9}, {0, 0}, {0, 7}}, any,
         [](const Point& p, const Context& c) {
             return equal(count_ell_irpf(p.n, p.n, p.ell, c.conventions), count_ell_ipf(p.n, p.ell));
         }},
        {"ell_ipf_stabilizes_to_pf", "ell >= n - 1 gives every parking function", Axis::NEll, {{1, 9}, {0, 0}, {0, 10}},
         [](const Point& p) { return p.ell >= p.n - 1; },
         [](const Point& p, const Context&) { return equal(count_ell_ipf(p.n, p.ell), count_rational_pf(p.n, p.n)); }},
        {"rational_pf_formula_vs_oracle", "(m+1-n)(m+1)^(n-1) against enumeration", Axis::NM, {{1, 5}, {1, 8}, {0, 0}},
         m_at_least_n,
         [](const Point& p, const Context& c) {
             return equal(count_rational_pf(p.n, p.m), count_family({Family::PF, p.n, p.m}, c.enumeration));
         }},
        {"irpf_square_closed_form", "tolerance-weighted sum on the square street against n!(n+1)^(n-1)", Axis::N,
         {{1, 5}, {0, 0}, {0, 0}}, any,
         [](const Point& p, const Context&) { return equal(count_irpf(p.n, p.n), count_ipf(p.n)); }},
        {"irpf_sum_vs_pair_oracle", "tolerance-weighted sum against enumeration of (prefs, tolerance) pairs",
         Axis::NM, {{1, 3}, {1, 5}, {0, 0}}, m_at_least_n,
         [](const Point& p, const Context& c) {
             return equal(count_irpf(p.n, p.m), count_family({Family::IPF_PAIR, p.n, p.m}, c.enumeration));
         }},
        {"uirpf_stirling1_vs_stirling2", "unit interval counts via Stirling numbers of both kinds", Axis::NM,
         {{1, 8}, {1, 12}, {0, 0}}, m_at_least_n,
         [](const Point& p, const Context&) {
             return equal(count_uirpf_stirling1(p.n, p.m), count_uirpf_stirling2(p.n, p.m));
         }},
        {"uirpf_formula_vs_oracle", "Stirling second-kind formula against enumeration", Axis::NM,
         {{1, 5}, {1, 8}, {0, 0}}, m_at_least_n,
         [](const Point& p, const Context& c) {
             return equal(count_uirpf_stirling2(p.n, p.m), count_family({Family::UIRPF, p.n, p.m}, c.enumeration));
         }},
        {"bpa_count_vs_formula", "generated barred arrangements against the Stirling formula", Axis::NM,
         {{1, 4}, {1, 7}, {0, 0}}, m_at_least_n,
         [](const Point& p, const Context& c) {
             return equal(Count(arrange::generate_bpa(p.n, p.m - p.n, c.enumeration.cap).size()),
                          count_uirpf_stirling2(p.n, p.m));
         }},
        {"nd_ell_ipf_series_vs_oracle", "bounded-height series coefficient against enumeration", Axis::NEll,
         {{0, 8}, {0, 0}, {0, 5}}, any,
         [](const Point& p, const Context& c) {
             return equal(count_nd_ell_ipf(p.n, p.ell),
                          count_family({Family::ND_ELL_IPF, p.n, p.n, p.ell}, c.enumeration));
         }},
        {"bounded_height_series_vs_walk", "series division against the confined-walk recurrence", Axis::NEll,
         {{0, 12}, {0, 0}, {0, 12}}, any,
         [](const Point& p, const Context&) {
             return equal(bounded_height_series(p.ell, p.n)[p.n], bounded_height_walk_counts(p.ell, p.n)[p.n]);
         }},
        {"square_dyck_bijection", "height <= ell+1 Dyck words onto nondecreasing ell-interval parking functions",
         Axis::NEll, {{0, 7}, {0, 0}, {0, 5}}, any,
         [](const Point& p, const Context& c) {
             return detail::dyck_bijection({p.n, p.n, p.ell}, c, lattice::PathModel::Diagonal);
         }},
        {"rational_dyck_bijection", "parking paths with reflected height <= ell+1 onto the rational family",
         Axis::NMEll, {{1, 5}, {1, 8}, {0, 4}}, m_above_n,
         [](const Point& p, const Context& c) { return detail::dyck_bijection(p, c, lattice::PathModel::Parking); }},
        {"rational_dyck_bijection_diagonal",
         "paths above y = (n/m)x with height <= ell+1 onto the rational family (known to fail for m > n)",
         Axis::NMEll, {{1, 5}, {1, 8}, {0, 3}}, m_above_n,
         [](const Point& p, const Context& c) { return detail::dyck_bijection(p, c, lattice::PathModel::Diagonal); },
         false},
        {"nd_ell_irpf_runs_vs_oracle", "empty-spot decomposition against enumeration", Axis::NMEll,
         {{0, 5}, {1, 8}, {0, 4}}, m_above_n,
         [](const Point& p, const Context& c) {
             return equal(count_nd_ell_irpf(p.n, p.m, p.ell),
                          count_family({Family::ND_ELL_IPF, p.n, p.m, p.ell}, c.enumeration));
         }},
        {"nd_ell_fubini_recursion_vs_oracle", "tie-length recursion against enumeration", Axis::NEll,
         {{0, 8}, {0, 0}, {0, 7}}, any,
         [](const Point& p, const Context& c) {
             return equal(count_nd_ell_fubini(p.n, p.ell),
                          count_family({Family::ND_ELL_FUBINI, p.n, p.n, p.ell}, c.enumeration));
         }},
        {"unit_interval_is_fubini", "unit interval parking functions against Fubini numbers", Axis::N,
         {{0, 7}, {0, 0}, {0, 0}}, any,
         [](const Point& p, const Context& c) {
             if (p.n == 0) return equal(fubini(0), Count(1));
             return equal(fubini(p.n), count_family({Family::UIRPF, p.n, p.n}, c.enumeration));
         }},
        {"fubini_rankings_vs_arrangements", "Fubini rankings, arrangements and Fubini numbers agree", Axis::N,
         {{0, 6}, {0, 0}, {0, 0}}, any,
         [](const Point& p, const Context& c) {
             Comparison r = equal(Count(arrange::generate_pa(p.n, c.enumeration.cap).size()),
                                  count_family({Family::FUBINI, p.n}, c.enumeration));
             if (r.lhs != fubini(p.n)) r.detail = "Fubini number " + fubini(p.n).str() + " differs";
             return r;
         }},
        {"fubini_pa_roundtrip", "ranking -> arrangement -> ranking and back", Axis::N, {{0, 5}, {0, 0}, {0, 0}}, any,
         [](const Point& p, const Context& c) {
             std::string detail;
             std::set<arrange::PreferentialArrangement> image;
             const auto rankings = enumerate_family({Family::FUBINI, p.n}, c.enumeration);
             for (const Member& r : rankings) {
                 auto pa = arrange::fubini_to_pa(r.prefs);
                 if (arrange::pa_to_fubini(pa) != r.prefs && detail.empty()) detail = "ranking " + detail::tuple_str(r.prefs);
                 image.insert(std::move(pa));
             }
             for (const auto& pa : arrange::generate_pa(p.n, c.enumeration.cap)) {
                 if (arrange::fubini_to_pa(arrange::pa_to_fubini(pa)) != pa && detail.empty()) detail = "arrangement " + pa.str();
             }
             return Comparison{Count(rankings.size()), Count(image.size()), detail};
         }},
        {"uirpf_bpa_roundtrip", "unit interval parking function -> barred arrangement -> back", Axis::NM,
         {{0, 4}, {1, 7}, {0, 0}}, m_at_least_n,
         [](const Point& p, const Context& c) {
             std::string detail;
             std::set<arrange::BarredPreferentialArrangement> image;
             const auto members = enumerate_family({Family::UIRPF, p.n, p.m}, c.enumeration);
             for (const Member& a : members) {
                 auto q = arrange::uirpf_to_bpa(a.prefs, p.m);
                 if ((q.bars() != p.m - p.n || arrange::bpa_to_uirpf(q) != a.prefs) && detail.empty()) {
                     detail = "prefs " + detail::tuple_str(a.prefs);
                 }
                 image.insert(std::move(q));
             }
             for (const auto& q : arrange::generate_bpa(p.n, p.m - p.n, c.enumeration.cap)) {
                 if (!(arrange::uirpf_to_bpa(arrange::bpa_to_uirpf(q), p.m) == q) && detail.empty()) detail = "arrangement " + q.str();
             }
             return Comparison{Count(members.size()), Count(image.size()), detail};
         }},
        {"stirling_row_sums", "sum_k s(n,k) = n! and sum_k k! S(n,k) = Fubini number", Axis::N,
         {{0, 12}, {0, 0}, {0, 0}}, any,
         [](const Point& p, const Context&) {
             Count first = 0, second = 0;
             for (int k = 0; k <= p.n; ++k) {
                 first += stirling1_unsigned(p.n, k);
                 second += factorial(k) * stirling2(p.n, k);
             }
             Comparison r = equal(first, factorial(p.n));
             if (second != fubini(p.n)) r.detail = "second-kind sum " + second.str();
             return r;
         }},
    };
    return identities;
}

inline const Identity& find_identity(const std::string& id) {
    for (const Identity& i : registry()) {
        if (i.id == id) return i;
    }
    throw Error(ErrorKind::ParseError, "unknown identity '" + id + "'");
}

/// Runs one identity over its sweep. Points outside the axis are pinned
/// (m = n for square identities, ell = 0 when unused).
inline VerificationReport verify(const Identity& identity, const SweepSpec& sweep, const Context& ctx = {}) {
    VerificationReport report;
    const bool uses_m = identity.axis == Axis::NM || identity.axis == Axis::NMEll;
    const bool uses_ell = identity.axis == Axis::NEll || identity.axis == Axis::NMEll;
    for (int n = sweep.n.lo; n <= sweep.n.hi; ++n) {
        const int m_lo = uses_m ? sweep.m.lo : n;
        const int m_hi = uses_m ? sweep.m.hi : n;
        for (int m = m_lo; m <= m_hi; ++m) {
            const int e_lo = uses_ell ? sweep.ell.lo : 0;
            const int e_hi = uses_ell ? sweep.ell.hi : 0;
            for (int ell = e_lo; ell <= e_hi; ++ell) {
                const Point p{n, m, ell};
                if (!identity.accepts(p)) continue;
                Comparison c = identity.eval(p, ctx);
                report.records.push_back({identity.id, p, identity.axis, c.lhs, c.rhs, c.pass(),
                                          c.pass() ? std::string{} : (c.detail.empty() ? "lhs != rhs" : c.detail)});
            }
        }
    }
    return report;
}

inline VerificationReport verify(const std::string& id, const Context& ctx = {}) {
    const Identity& identity = find_identity(id);
    return verify(identity, identity.sweep, ctx);
}

/// Sweep selection and overrides, usually read from a JSON config file:
/// {"cap": 10000000, "threads": 1, "only": ["id", ...],
///  "sweeps": {"id": {"n": [lo, hi], "m": [lo, hi], "ell": [lo, hi]}},
///  "conventions": {"empty_list_on_negative_street": 1}}
struct SweepConfig {
    Context context;
    std::vector<std::string> only;
    std::map<std::string, SweepSpec> overrides;

    static SweepConfig from_json(const nlohmann::json& j) {
        SweepConfig cfg;
        if (j.contains("cap")) cfg.context.enumeration.cap = j.at("cap").get<std::uint64_t>();
        if (j.contains("threads")) cfg.context.enumeration.threads = j.at("threads").get<unsigned>();
        if (j.contains("only")) cfg.only = j.at("only").get<std::vector<std::string>>();
        if (j.contains("conventions")) {
            const auto& c = j.at("conventions");
            if (c.contains("empty_list_on_negative_street")) {
                cfg.context.conventions.empty_list_on_negative_street =
                    Count(c.at("empty_list_on_negative_street").get<long long>());
            }
        }
        if (j.contains("sweeps")) {
            for (const auto& [id, s] : j.at("sweeps").items()) {
                SweepSpec spec = find_identity(id).sweep;
                auto range = [&](const char* key, Range& r) {
                    if (!s.contains(key)) return;
                    auto v = s.at(key).get<std::vector<int>>();
                    if (v.size() != 2 || v[0] > v[1]) throw Error(ErrorKind::ParseError, "range must be [lo, hi]");
                    r = {v[0], v[1]};
                };
                range("n", spec.n);
                range("m", spec.m);
                range("ell", spec.ell);
                cfg.overrides[id] = spec;
            }
        }
        return cfg;
    }
};

/// Runs the default registry (or the `only` subset) and concatenates reports.
inline VerificationReport verify_all(const SweepConfig& cfg = {}) {
    VerificationReport all;
    for (const Identity& identity : registry()) {
        const bool selected = cfg.only.empty()
                                  ? identity.in_default_sweep
                                  : std::find(cfg.only.begin(), cfg.only.end(), identity.id) != cfg.only.end();
        if (!selected) continue;
        auto it = cfg.overrides.find(identity.id);
        VerificationReport r = verify(identity, it != cfg.overrides.end() ? it->second : identity.sweep, cfg.context);
        all.records.insert(all.records.end(), r.records.begin(), r.records.end());
    }
    for (const std::string& id : cfg.only) find_identity(id);
    return all;
}

}  // namespace ipf::oracle
