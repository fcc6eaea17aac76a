#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <mutex>
#include <string>
#include <vector>

#include "ipf/error.hpp"

namespace ipf {

/// Exact nonnegative count. All enumeration results use this type.
using Count = boost::multiprecision::cpp_int;

inline std::string to_string(const Count& c) { return c.str(); }

namespace detail {

// Lower-triangular table of counts grown row by row on demand.
class TriangleTable {
public:
    using RowRule = std::function<std::vector<Count>(const std::vector<Count>& prev, int n)>;

    TriangleTable(std::vector<Count> row0, RowRule rule)
        : rows_{std::move(row0)}, rule_(std::move(rule)) {}

    Count get(int n, int k) {
        if (n < 0 || k < 0 || k > n) return 0;
        std::lock_guard lock(mutex_);
        while (static_cast<int>(rows_.size()) <= n) {
            rows_.push_back(rule_(rows_.back(), static_cast<int>(rows_.size())));
        }
        return rows_[n][k];
    }

private:
    std::mutex mutex_;
    std::vector<std::vector<Count>> rows_;
    RowRule rule_;
};

inline TriangleTable& stirling2_table() {
    static TriangleTable table({Count(1)}, [](const std::vector<Count>& prev, int n) {
        std::vector<Count> row(n + 1, 0);
        for (int k = 1; k <= n; ++k) {
            Count left = k < n ? prev[k] : Count(0);
            row[k] = k * left + prev[k - 1];
        }
        return row;
    });
    return table;
}

inline TriangleTable& stirling1_table() {
    static TriangleTable table({Count(1)}, [](const std::vector<Count>& prev, int n) {
        std::vector<Count> row(n + 1, 0);
        for (int k = 1; k <= n; ++k) {
            Count left = k < n ? prev[k] : Count(0);
            row[k] = (n - 1) * left + prev[k - 1];
        }
        return row;
    });
    return table;
}

}  // namespace detail

inline Count factorial(int n) {
    Count r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Count power(const Count& base, int exp) {
    Count r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

/// Zero when k < 0 or k > n.
inline Count binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Count r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// Set partitions of [n] into k nonempty blocks.
inline Count stirling2(int n, int k) { return detail::stirling2_table().get(n, k); }

/// Permutations of [n] with exactly k cycles.
inline Count stirling1_unsigned(int n, int k) { return detail::stirling1_table().get(n, k); }

inline Count fubini(int n) {
    if (n < 0) return 0;
    Count total = 0;
    for (int k = 0; k <= n; ++k) total += factorial(k) * stirling2(n, k);
    return total;
}

inline Count catalan(int n) {
    if (n < 0) return 0;
    return binomial(2 * n, n) / (n + 1);
}

/// k-step Fibonacci numbers: F(0) = 0, F(1) = 1, and every later term is the
/// sum of the previous k terms (missing terms count as zero). For k = 2 this
/// is the usual Fibonacci sequence 0, 1, 1, 2, 3, 5, ...
inline Count fibonacci_order(int k, int n) {
    if (k < 1) throw Error(ErrorKind::OutOfDomain, "fibonacci order must be positive");
    if (n <= 0) return 0;
    std::vector<Count> f(n + 1, 0);
    f[1] = 1;
    for (int i = 2; i <= n; ++i) {
        for (int j = 1; j <= k && i - j >= 0; ++j) f[i] += f[i - j];
    }
    return f[n];
}

/// Polynomial with exact integer coefficients, ascending degree, trailing zeros trimmed.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Count> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    const std::vector<Count>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    Count operator[](int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : Count(0);
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<Count> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
        return IntPolynomial(std::move(out));
    }

    /// Multiplication by t.
    IntPolynomial shifted() const {
        if (is_zero()) return {};
        std::vector<Count> out(coeffs_.size() + 1, 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + 1] = coeffs_[i];
        return IntPolynomial(std::move(out));
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Count> coeffs_;
};

/// f_0 = f_1 = 1, f_{k+1} = f_k - t f_{k-1}.
inline IntPolynomial kreweras_poly(int k) {
    if (k < 0) throw Error(ErrorKind::OutOfDomain, "kreweras_poly needs k >= 0");
    IntPolynomial prev(std::vector<Count>{1});
    IntPolynomial cur(std::vector<Count>{1});
    for (int i = 1; i < k; ++i) {
        IntPolynomial next = cur - prev.shifted();
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// First `terms` coefficients of num/den as a formal power series. The
/// denominator must have constant term +-1 so that division stays integral.
inline std::vector<Count> series_quotient(const IntPolynomial& num, const IntPolynomial& den,
                                          int terms) {
    const Count d0 = den[0];
    if (d0 != 1 && d0 != -1) {
        throw Error(ErrorKind::NonIntegerResult, "series denominator must be a unit");
    }
    std::vector<Count> q(std::max(terms, 0), 0);
    for (int i = 0; i < terms; ++i) {
        Count acc = num[i];
        for (int j = 1; j <= std::min(i, den.degree()); ++j) acc -= den[j] * q[i - j];
        q[i] = acc * d0;  // d0 is its own inverse
    }
    return q;
}

/// Coefficients 0..N of f_k/f_{k+1}: entry n counts Dyck paths of semilength n
/// and height at most k.
inline std::vector<Count> bounded_height_series(int k, int N) {
    if (k < 0 || N < 0) throw Error(ErrorKind::OutOfDomain, "bounded_height_series needs k, N >= 0");
    return series_quotient(kreweras_poly(k), kreweras_poly(k + 1), N + 1);
}

/// Same numbers as bounded_height_series, computed by stepping a walk confined
/// to heights 0..k (a transfer-matrix recurrence on the coefficients).
inline std::vector<Count> bounded_height_walk_counts(int k, int N) {
    if (k < 0 || N < 0) throw Error(ErrorKind::OutOfDomain, "bounded_height_walk_counts needs k, N >= 0");
    std::vector<Count> out(N + 1, 0);
    std::vector<Count> at(k + 1, 0);
    at[0] = 1;
    out[0] = 1;
    for (int step = 1; step <= 2 * N; ++step) {
        std::vector<Count> next(k + 1, 0);
        for (int h = 0; h <= k; ++h) {
            if (at[h] == 0) continue;
            if (h + 1 <= k) next[h + 1] += at[h];
            if (h >= 1) next[h - 1] += at[h];
        }
        at = std::move(next);
        if (step % 2 == 0) out[step / 2] = at[0];
    }
    return out;
}

}  // namespace ipf
