#pragma once

#include <cctype>
#include <charconv>
#include <functional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ipf/count.hpp"
#include "ipf/error.hpp"
#include "ipf/numbers.hpp"

namespace ipf {

/// Parses "(a,b,c)" with optional whitespace; "()" is the empty tuple.
inline std::vector<int> parse_tuple(std::string_view text) {
    auto fail = [&](const std::string& why) {
        throw Error(ErrorKind::ParseError, "bad tuple '" + std::string(text) + "': " + why);
    };
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i == text.size() || text[i] != '(') fail("expected '('");
    ++i;
    std::vector<int> out;
    skip();
    if (i < text.size() && text[i] == ')') {
        ++i;
    } else {
        for (;;) {
            skip();
            int v = 0;
            auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
            if (ec != std::errc{}) fail("expected an integer");
            i = static_cast<std::size_t>(ptr - text.data());
            out.push_back(v);
            skip();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            fail("expected ',' or ')'");
        }
    }
    skip();
    if (i != text.size()) fail("trailing characters");
    return out;
}

inline std::string format_tuple(std::span<const int> t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

struct TableSpec {
    std::string id;
    int ell_lo, ell_hi;
    int n_lo, n_hi;
    std::function<Count(int n, int ell)> cell;
};

/// |IPF_n(ell)| for 0 <= ell <= 7, 1 <= n <= 9.
inline TableSpec table1_spec() {
    return {"table1", 0, 7, 1, 9, [](int n, int ell) { return count_ell_ipf(n, ell); }};
}

/// The published grid of nondecreasing ell-interval Fubini counts. Its
/// column n holds |FR_(n-1)(ell)|, i.e. the (ell+1)-step Fibonacci number
/// F(n) with F(0) = 0, F(1) = 1.
inline TableSpec table2_spec() {
    return {"table2", 1, 6, 1, 11, [](int n, int ell) { return count_nd_ell_fubini(n - 1, ell); }};
}

inline TableSpec table_spec(std::string_view id) {
    if (id == "table1") return table1_spec();
    if (id == "table2") return table2_spec();
    throw Error(ErrorKind::ParseError, "unknown table '" + std::string(id) + "'");
}

/// CSV with header "ell,<n values>" and one row per ell.
inline void write_table_csv(std::ostream& out, const TableSpec& t) {
    out << "ell";
    for (int n = t.n_lo; n <= t.n_hi; ++n) out << ',' << n;
    out << '\n';
    for (int ell = t.ell_lo; ell <= t.ell_hi; ++ell) {
        out << ell;
        for (int n = t.n_lo; n <= t.n_hi; ++n) out << ',' << t.cell(n, ell);
        out << '\n';
    }
}

inline std::string table_csv(const TableSpec& t) {
    std::ostringstream s;
    write_table_csv(s, t);
    return s.str();
}

/// OEIS b-file: "index value" per line, no header.
inline void write_bfile(std::ostream& out, const std::vector<Count>& values, int first_index) {
    for (std::size_t i = 0; i < values.size(); ++i) out << first_index + static_cast<int>(i) << ' ' << values[i] << '\n';
}

inline std::string bfile(const std::vector<Count>& values, int first_index) {
    std::ostringstream s;
    write_bfile(s, values, first_index);
    return s.str();
}

/// Dyck paths of semilength n and height exactly k, rows n = 1..rows,
/// k = 1..n, as H(k) - H(k-1) from the bounded-height series.
inline std::vector<Count> exact_height_triangle(int rows) {
    std::vector<Count> out;
    std::vector<std::vector<Count>> series;
    for (int k = 0; k <= rows; ++k) series.push_back(bounded_height_series(k, rows));
    for (int n = 1; n <= rows; ++n) {
        for (int k = 1; k <= n; ++k) out.push_back(series[k][n] - series[k - 1][n]);
    }
    return out;
}

}  // namespace ipf
