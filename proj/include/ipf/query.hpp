#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ipf/arrange.hpp"
#include "ipf/classify.hpp"
#include "ipf/count.hpp"
#include "ipf/lattice.hpp"
#include "ipf/numbers.hpp"
#include "ipf/oracle.hpp"

namespace ipf {

enum class Method { ClosedForm, Recursion, GeneratingFunction, BijectionImage, Oracle };

inline constexpr Method kAllMethods[] = {Method::ClosedForm, Method::Recursion, Method::GeneratingFunction,
                                         Method::BijectionImage, Method::Oracle};

inline std::string_view to_string(Method m) {
    switch (m) {
    case Method::ClosedForm: return "closed_form";
    case Method::Recursion: return "recursion";
    case Method::GeneratingFunction: return "generating_function";
    case Method::BijectionImage: return "bijection_image";
    case Method::Oracle: return "oracle";
    }
    return "?";
}

inline Method method_from_string(std::string_view s) {
    for (Method m : kAllMethods) {
        if (to_string(m) == s) return m;
    }
    throw Error(ErrorKind::ParseError, "unknown method '" + std::string(s) + "'");
}

struct QueryOptions {
    oracle::EnumerateOptions enumeration;
    std::uint64_t irpf_cap = kDefaultIrpfCap;
};

struct MethodValue {
    Method method;
    std::string formula;
    Count value;
};

namespace detail {

inline Count falling_factorial(int m, int n) {
    Count r = 1;
    for (int i = 0; i < n; ++i) r *= m - i;
    return r;
}

// Nondecreasing rational parking functions: (m+1-n)/(m+1) * C(m+n, n).
inline Count nd_rational_pf(int n, int m) {
    const Count num = Count(m + 1 - n) * binomial(m + n, n);
    if (num % (m + 1) != 0) throw Error(ErrorKind::NonIntegerResult, "ballot count is not integral");
    return num / (m + 1);
}

inline std::uint64_t parking_paths(int n, int m, std::optional<int> max_height, std::uint64_t cap) {
    lattice::GenerateOptions opts;
    opts.max_height = max_height;
    opts.model = m == n ? lattice::PathModel::Diagonal : lattice::PathModel::Parking;
    opts.cap = cap;
    return lattice::count_dyck(n, m, opts);
}

}  // namespace detail

/// A family tag plus the way to count it.
struct CountQuery {
    FamilyTag tag;
    Method method = Method::Recursion;
};

/// Method label for `tag`, or empty when the method does not apply.
inline std::string method_formula(const FamilyTag& t, Method method) {
    const bool square = t.m == t.n;
    switch (t.family) {
    case Family::PF:
        if (method == Method::ClosedForm) return "(m+1-n)(m+1)^(n-1)";
        break;
    case Family::NDPF:
        if (method == Method::ClosedForm) return "(m+1-n)/(m+1) C(m+n,n)";
        if (method == Method::BijectionImage) return "lattice paths";
        break;
    case Family::IPF_PAIR:
        if (method == Method::ClosedForm && square) return "n!(n+1)^(n-1)";
        if (method == Method::Recursion) return "tolerance-weighted sum over PF(n,m)";
        break;
    case Family::ELL_IPF:
        if (method == Method::ClosedForm && (t.n == 0 || t.ell >= t.n - 1)) return "every parking function";
        if (method == Method::ClosedForm && t.ell == 0) return "m!/(m-n)!";
        if (method == Method::ClosedForm && t.ell == 1 && t.n >= 1) return "Stirling second kind sum";
        if (method == Method::Recursion) return square ? "car-n recursion" : "rational recursion";
        break;
    case Family::ND_ELL_IPF:
        if (method == Method::GeneratingFunction && square) return "f_(ell+1)/f_(ell+2) coefficient";
        if (method == Method::Recursion && !square) return "empty-spot run convolution";
        if (method == Method::BijectionImage) return "height <= ell+1 lattice paths";
        break;
    case Family::FUBINI:
        if (method == Method::ClosedForm) return "sum k! S(n,k)";
        if (method == Method::BijectionImage) return "preferential arrangements";
        break;
    case Family::ELL_FUBINI:
        if (method == Method::ClosedForm && (t.n == 0 || t.ell >= t.n - 1)) return "sum k! S(n,k)";
        if (method == Method::ClosedForm && t.ell == 0) return "n!";
        break;
    case Family::ND_ELL_FUBINI:
        if (method == Method::Recursion) return "tie-length recursion";
        if (method == Method::GeneratingFunction) return "1/(1-t-...-t^(ell+1)) coefficient";
        break;
    case Family::UIRPF:
        if (method == Method::ClosedForm && t.n >= 1) return "Stirling second kind sum";
        if (method == Method::Recursion && t.m >= 1) return "Stirling first kind sum over IPF_k(1)";
        if (method == Method::BijectionImage) return "barred preferential arrangements";
        break;
    }
    if (method == Method::Oracle) return "exhaustive enumeration";
    return {};
}

inline bool applicable(const FamilyTag& tag, Method method) { return !method_formula(tag, method).empty(); }

inline std::vector<Method> applicable_methods(const FamilyTag& tag) {
    std::vector<Method> out;
    for (Method m : kAllMethods) {
        if (applicable(tag, m)) out.push_back(m);
    }
    return out;
}

inline Count evaluate(const CountQuery& q, const QueryOptions& opts = {}) {
    const FamilyTag& t = q.tag;
    if (!applicable(t, q.method)) {
        throw Error(ErrorKind::OutOfDomain,
                    std::string(to_string(q.method)) + " does not apply to " + std::string(to_string(t.family)));
    }
    if (q.method == Method::Oracle) return oracle::count_family(t, opts.enumeration);
    const std::uint64_t cap = opts.enumeration.cap;
    switch (t.family) {
    case Family::PF: return t.n == 0 ? Count(1) : count_rational_pf(t.n, t.m);
    case Family::NDPF:
        if (q.method == Method::ClosedForm) return detail::nd_rational_pf(t.n, t.m);
        return detail::parking_paths(t.n, t.m, std::nullopt, cap);
    case Family::IPF_PAIR:
        if (t.n == 0) return 1;
        if (q.method == Method::ClosedForm) return count_ipf(t.n);
        return count_irpf(t.n, t.m, opts.irpf_cap);
    case Family::ELL_IPF:
        if (q.method == Method::Recursion) return t.m == t.n ? count_ell_ipf(t.n, t.ell) : count_ell_irpf(t.n, t.m, t.ell);
        if (t.n == 0) return 1;
        if (t.ell >= t.n - 1) return count_rational_pf(t.n, t.m);
        if (t.ell == 0) return detail::falling_factorial(t.m, t.n);
        return count_uirpf_stirling2(t.n, t.m);
    case Family::ND_ELL_IPF:
        if (q.method == Method::GeneratingFunction) return count_nd_ell_ipf(t.n, t.ell);
        if (q.method == Method::Recursion) return count_nd_ell_irpf(t.n, t.m, t.ell);
        return detail::parking_paths(t.n, t.m, t.ell + 1, cap);
    case Family::FUBINI:
        if (q.method == Method::ClosedForm) return fubini(t.n);
        return Count(arrange::generate_pa(t.n, cap).size());
    case Family::ELL_FUBINI:
        if (t.n == 0 || t.ell >= t.n - 1) return fubini(t.n);
        return factorial(t.n);
    case Family::ND_ELL_FUBINI:
        if (q.method == Method::Recursion) return count_nd_ell_fubini(t.n, t.ell);
        return fibonacci_order(t.ell + 1, t.n + 1);
    case Family::UIRPF:
        if (q.method == Method::ClosedForm) return count_uirpf_stirling2(t.n, t.m);
        if (q.method == Method::Recursion) return count_uirpf_stirling1(t.n, t.m);
        return Count(arrange::generate_bpa(t.n, t.m - t.n, cap).size());
    }
    throw Error(ErrorKind::OutOfDomain, "unhandled family");
}

inline std::vector<MethodValue> evaluate_all(const FamilyTag& tag, const QueryOptions& opts = {}) {
    std::vector<MethodValue> out;
    for (Method m : applicable_methods(tag)) out.push_back({m, method_formula(tag, m), evaluate({tag, m}, opts)});
    return out;
}

inline bool agree(const std::vector<MethodValue>& values) {
    for (const MethodValue& v : values) {
        if (v.value != values.front().value) return false;
    }
    return true;
}

}  // namespace ipf
