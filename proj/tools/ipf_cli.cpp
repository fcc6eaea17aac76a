#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ipf/ipf.hpp"

namespace {

using nlohmann::json;
using namespace ipf;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitScale = 3;

struct Globals {
    bool json = false;
    bool timing = false;
    unsigned threads = 1;
    std::string config;
    oracle::SweepConfig sweep;
};

// Parameters shared by count, enumerate, check and oeis.
struct Params {
    std::string family;
    int n = -1;
    int m = -1;
    int ell = 0;
};

void add_params(CLI::App* cmd, Params& p, bool need_n = true) {
    cmd->add_option("family", p.family, "PF, NDPF, IPF_PAIR, ELL_IPF, ND_ELL_IPF, FUBINI, ELL_FUBINI, ND_ELL_FUBINI, UIRPF")
        ->required();
    auto* n = cmd->add_option("-n,--cars", p.n, "number of cars");
    if (need_n) n->required();
    cmd->add_option("-m,--spots", p.m, "street length (defaults to n)");
    cmd->add_option("-l,--ell", p.ell, "interval width ell");
}

FamilyTag make_tag(const Params& p) { return FamilyTag(family_from_string(p.family), p.n, p.m, p.ell); }

json tag_json(const FamilyTag& t) {
    json j{{"family", std::string(to_string(t.family))}, {"n", t.n}};
    if (uses_street_length(t.family)) j["m"] = t.m;
    if (uses_ell(t.family) || t.family == Family::UIRPF) j["ell"] = t.ell;
    return j;
}

std::string tag_text(const FamilyTag& t) {
    std::string s = std::string(to_string(t.family)) + " n=" + std::to_string(t.n);
    if (uses_street_length(t.family)) s += " m=" + std::to_string(t.m);
    if (uses_ell(t.family)) s += " ell=" + std::to_string(t.ell);
    return s;
}

class Clock {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const Globals& g, json record, const Clock& clock) {
    if (g.timing) record["elapsed_ms"] = clock.ms();
    std::cout << record.dump() << '\n';
}

QueryOptions query_options(const Globals& g) {
    QueryOptions q;
    q.enumeration = g.sweep.context.enumeration;
    return q;
}

int cmd_count(const Globals& g, const Params& p, const std::string& method_name) {
    Clock clock;
    const FamilyTag tag = make_tag(p);
    const QueryOptions opts = query_options(g);
    if (method_name == "all") {
        const auto values = evaluate_all(tag, opts);
        const bool same = agree(values);
        if (g.json) {
            json methods = json::array();
            for (const auto& v : values) {
                methods.push_back({{"method", std::string(to_string(v.method))}, {"formula", v.formula}, {"count", v.value.str()}});
            }
            emit(g, {{"command", "count"}, {"query", tag_json(tag)}, {"method", "all"}, {"results", methods}, {"agree", same}},
                 clock);
        } else {
            for (const auto& v : values) std::cout << to_string(v.method) << ' ' << v.value << "  # " << v.formula << '\n';
            std::cout << (same ? "agree" : "DISAGREE") << '\n';
        }
        return same ? kExitOk : kExitFailure;
    }
    Method method;
    if (method_name.empty()) {
        const auto methods = applicable_methods(tag);
        method = methods.size() > 1 ? methods.front() : Method::Oracle;
        for (Method m : methods) {
            if (m == Method::Recursion) method = m;
        }
    } else {
        method = method_from_string(method_name);
    }
    const Count value = evaluate({tag, method}, opts);
    if (g.json) {
        emit(g, {{"command", "count"}, {"query", tag_json(tag)}, {"method", std::string(to_string(method))}, {"count", value.str()}},
             clock);
    } else {
        std::cout << value << '\n';
    }
    return kExitOk;
}

int cmd_enumerate(const Globals& g, const Params& p, bool count_only) {
    Clock clock;
    const FamilyTag tag = make_tag(p);
    const auto members = oracle::enumerate_family(tag, g.sweep.context.enumeration);
    if (g.json) {
        json list = json::array();
        if (!count_only) {
            for (const auto& mem : members) {
                if (tag.family == Family::IPF_PAIR) list.push_back({format_tuple(mem.prefs), format_tuple(mem.tol)});
                else list.push_back(format_tuple(mem.prefs));
            }
        }
        json rec{{"command", "enumerate"}, {"query", tag_json(tag)}, {"count", members.size()}};
        if (!count_only) rec["members"] = list;
        emit(g, rec, clock);
        return kExitOk;
    }
    if (!count_only) {
        for (const auto& mem : members) {
            std::cout << format_tuple(mem.prefs);
            if (tag.family == Family::IPF_PAIR) std::cout << ' ' << format_tuple(mem.tol);
            std::cout << '\n';
        }
    }
    std::cout << "# " << members.size() << " members of " << tag_text(tag) << '\n';
    return kExitOk;
}

int cmd_check(const Globals& g, Params p, const std::string& tuple, const std::string& tol_text) {
    Clock clock;
    const auto prefs = parse_tuple(tuple);
    p.n = static_cast<int>(prefs.size());
    const FamilyTag tag = make_tag(p);
    bool member = false;
    if (tag.family == Family::IPF_PAIR) {
        if (tol_text.empty()) throw Error(ErrorKind::MalformedInput, "IPF_PAIR needs --tol");
        member = is_interval_pf(prefs, parse_tuple(tol_text), tag.m);
    } else {
        member = is_member(tag, prefs);
    }
    json rec{{"command", "check"}, {"query", tag_json(tag)}, {"input", format_tuple(prefs)}, {"member", member}};
    std::string outcome_text;
    if (tag.family != Family::FUBINI && tag.family != Family::ELL_FUBINI && tag.family != Family::ND_ELL_FUBINI) {
        const ParkResult r = park(prefs, tag.m);
        if (r.ok()) {
            rec["outcome"] = format_tuple(r.outcome().slots());
            rec["displacement"] = format_tuple(displacements(prefs, r.outcome()));
            outcome_text = " outcome=" + format_tuple(r.outcome().slots()) +
                           " displacement=" + format_tuple(displacements(prefs, r.outcome()));
        } else {
            rec["failed_car"] = r.failure().car;
            outcome_text = " car " + std::to_string(r.failure().car) + " fails to park";
        }
    }
    if (g.json) emit(g, rec, clock);
    else std::cout << (member ? "member" : "not a member") << outcome_text << '\n';
    return kExitOk;
}

std::string normalize_transform(std::string t) {
    for (const char* arrow : {"->", "→", "_to_"}) {
        const auto pos = t.find(arrow);
        if (pos != std::string::npos) {
            t.replace(pos, std::string(arrow).size(), "-to-");
            break;
        }
    }
    return t;
}

int cmd_map(const Globals& g, const std::string& transform_arg, const std::string& input, int m, const std::string& shape) {
    Clock clock;
    const std::string transform = normalize_transform(transform_arg);
    std::string output;
    if (transform == "dyck-to-prefs") {
        int north = 0, east = 0;
        for (char c : input) {
            north += c == 'N';
            east += c == 'E';
        }
        if (!shape.empty()) {
            const auto s = parse_tuple("(" + shape + ")");
            if (s.size() != 2) throw Error(ErrorKind::ParseError, "shape must be n,m");
            north = s[0];
            east = s[1];
        }
        output = format_tuple(lattice::dyck_to_prefs(input, north, east));
    } else if (transform == "prefs-to-dyck") {
        const auto prefs = parse_tuple(input);
        const int n = static_cast<int>(prefs.size());
        output = lattice::prefs_to_dyck(prefs, n, m < 0 ? n : m).str();
    } else if (transform == "fub-to-pa") {
        output = arrange::fubini_to_pa(parse_tuple(input)).str();
    } else if (transform == "pa-to-fub") {
        output = format_tuple(arrange::pa_to_fubini(arrange::parse_pa(input)));
    } else if (transform == "uirpf-to-bpa") {
        const auto prefs = parse_tuple(input);
        output = arrange::uirpf_to_bpa(prefs, m < 0 ? static_cast<int>(prefs.size()) : m).str();
    } else if (transform == "bpa-to-uirpf") {
        output = format_tuple(arrange::bpa_to_uirpf(arrange::parse_bpa(input)));
    } else {
        throw Error(ErrorKind::ParseError, "unknown transform '" + transform_arg + "'");
    }
    if (g.json) emit(g, {{"command", "map"}, {"transform", transform}, {"input", input}, {"output", output}}, clock);
    else std::cout << output << '\n';
    return kExitOk;
}

int cmd_table(const Globals& g, const std::string& id, const std::vector<int>& cell) {
    Clock clock;
    const TableSpec spec = table_spec(id);
    if (!cell.empty()) {
        const int ell = cell[0], n = cell[1];
        if (ell < spec.ell_lo || ell > spec.ell_hi || n < spec.n_lo || n > spec.n_hi) {
            throw Error(ErrorKind::OutOfDomain, "cell outside " + id);
        }
        const Count v = spec.cell(n, ell);
        if (g.json) emit(g, {{"command", "table"}, {"table", id}, {"ell", ell}, {"n", n}, {"count", v.str()}}, clock);
        else std::cout << v << '\n';
        return kExitOk;
    }
    if (g.json) emit(g, {{"command", "table"}, {"table", id}, {"csv", table_csv(spec)}}, clock);
    else write_table_csv(std::cout, spec);
    return kExitOk;
}

int cmd_verify(const Globals& g, const std::vector<std::string>& only, const std::string& report_path, bool list) {
    if (list) {
        for (const auto& id : oracle::registry()) {
            std::cout << id.id << (id.in_default_sweep ? "" : " (not in default sweep)") << "  # " << id.description << '\n';
        }
        return kExitOk;
    }
    Clock clock;
    oracle::SweepConfig cfg = g.sweep;
    if (!only.empty()) cfg.only = only;
    const auto report = oracle::verify_all(cfg);
    const json doc = report.to_json();
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw Error(ErrorKind::MalformedInput, "cannot write " + report_path);
        out << doc.dump(2) << '\n';
    }
    if (g.json) {
        emit(g, doc, clock);
    } else {
        std::map<std::string, std::pair<int, int>> tally;
        std::vector<std::string> order;
        for (const auto& r : report.records) {
            if (!tally.count(r.identity)) order.push_back(r.identity);
            auto& t = tally[r.identity];
            ++t.first;
            t.second += !r.pass;
        }
        for (const auto& id : order) {
            const auto [total, failed] = tally[id];
            std::cout << (failed ? "FAIL " : "ok   ") << id << ' ' << (total - failed) << '/' << total << '\n';
        }
        int shown = 0;
        for (const auto& r : report.records) {
            if (r.pass || shown++ >= 20) continue;
            std::cout << "  counterexample " << r.identity << " n=" << r.point.n << " m=" << r.point.m
                      << " ell=" << r.point.ell << ": " << r.lhs << " vs " << r.rhs << " (" << r.detail << ")\n";
        }
        std::cout << report.records.size() << " checks, " << report.failures() << " failures\n";
    }
    return report.failures() == 0 ? kExitOk : kExitFailure;
}

struct OeisArgs {
    Params params;
    std::string axis = "n";
    int from = 0;
    int to = 0;
    int index_offset = 0;
    std::string method;
    std::string grid;
    int triangle_rows = 0;
};

int cmd_oeis(const Globals& g, const OeisArgs& a) {
    Clock clock;
    std::vector<Count> values;
    int first_index = a.index_offset;
    if (!a.grid.empty()) {
        // Rows as printed: ell ascending, n ascending within a row.
        const TableSpec spec = table_spec(a.grid);
        for (int ell = spec.ell_lo; ell <= spec.ell_hi; ++ell) {
            for (int n = spec.n_lo; n <= spec.n_hi; ++n) values.push_back(spec.cell(n, ell));
        }
        first_index = 1 + a.index_offset;
    } else if (a.triangle_rows > 0) {
        values = exact_height_triangle(a.triangle_rows);
        first_index = 1 + a.index_offset;
    } else {
        if (a.params.family.empty()) throw Error(ErrorKind::MalformedInput, "oeis needs a family, --grid or --triangle-rows");
        if (a.from > a.to) throw Error(ErrorKind::MalformedInput, "empty range");
        const QueryOptions opts = query_options(g);
        for (int v = a.from; v <= a.to; ++v) {
            Params p = a.params;
            if (a.axis == "n") p.n = v;
            else if (a.axis == "m") p.m = v;
            else if (a.axis == "ell") p.ell = v;
            else throw Error(ErrorKind::MalformedInput, "axis must be n, m or ell");
            if (p.n < 0) throw Error(ErrorKind::MalformedInput, "n is required unless it is the axis");
            const FamilyTag tag = make_tag(p);
            Method method = Method::Oracle;
            if (!a.method.empty()) {
                method = method_from_string(a.method);
            } else {
                for (Method m : applicable_methods(tag)) {
                    if (m != Method::Oracle) {
                        method = m;
                        break;
                    }
                }
            }
            values.push_back(evaluate({tag, method}, opts));
        }
        first_index = a.from + a.index_offset;
    }
    if (g.json) {
        json terms = json::array();
        for (std::size_t i = 0; i < values.size(); ++i) terms.push_back({first_index + static_cast<int>(i), values[i].str()});
        emit(g, {{"command", "oeis"}, {"terms", terms}}, clock);
    } else {
        write_bfile(std::cout, values, first_index);
    }
    return kExitOk;
}

void load_config(Globals& g) {
    if (!g.config.empty()) {
        std::ifstream in(g.config);
        if (!in) throw Error(ErrorKind::MalformedInput, "cannot read config " + g.config);
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception& e) {
            throw Error(ErrorKind::ParseError, std::string("config: ") + e.what());
        }
        g.sweep = oracle::SweepConfig::from_json(j);
    }
    if (const char* cap = std::getenv("IPF_ENUM_CAP")) {
        try {
            g.sweep.context.enumeration.cap = std::stoull(cap);
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "IPF_ENUM_CAP must be a positive integer");
        }
        if (g.sweep.context.enumeration.cap == 0) throw Error(ErrorKind::ParseError, "IPF_ENUM_CAP must be positive");
    }
    if (g.threads > 0) g.sweep.context.enumeration.threads = g.threads;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parking function counting, enumeration and verification"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "one JSON document per record");
    app.add_flag("--timing", g.timing, "add elapsed_ms to JSON records");
    app.add_option("--threads", g.threads, "oracle worker threads")->check(CLI::PositiveNumber);
    app.add_option("--config", g.config, "JSON config (cap, threads, only, sweeps, conventions)");

    Params count_p;
    std::string method;
    auto* count = app.add_subcommand("count", "count a family");
    add_params(count, count_p);
    count->add_option("--method", method, "closed_form, recursion, generating_function, bijection_image, oracle or all");

    Params enum_p;
    bool count_only = false;
    auto* enumerate = app.add_subcommand("enumerate", "list members in lexicographic order");
    add_params(enumerate, enum_p);
    enumerate->add_flag("--count-only", count_only, "print only the number of members");

    Params check_p;
    std::string tuple, tol;
    auto* check = app.add_subcommand("check", "membership test for one tuple");
    add_params(check, check_p, false);
    check->add_option("tuple", tuple, "preference tuple, e.g. \"(1,1,3)\"")->required();
    check->add_option("--tol", tol, "tolerance tuple for IPF_PAIR");

    std::string transform, input, shape;
    int map_m = -1;
    auto* map = app.add_subcommand("map", "apply a bijection");
    map->add_option("transform", transform,
                    "dyck-to-prefs, prefs-to-dyck, fub-to-pa, pa-to-fub, uirpf-to-bpa, bpa-to-uirpf")
        ->required();
    map->add_option("input", input, "object in canonical syntax")->required();
    map->add_option("-m,--spots", map_m, "street length for prefs-to-dyck and uirpf-to-bpa");
    map->add_option("--shape", shape, "n,m for dyck-to-prefs (default: count N and E steps)");

    std::string table_id;
    std::vector<int> cell;
    auto* table = app.add_subcommand("table", "reproduce a published table as CSV");
    table->add_option("table", table_id, "table1 or table2")->required()->check(CLI::IsMember({"table1", "table2"}));
    table->add_option("--cell", cell, "single cell: ell n")->expected(2);

    std::vector<std::string> only;
    std::string report_path;
    bool list = false;
    auto* verify = app.add_subcommand("verify", "run the identity registry against the oracle");
    verify->add_option("--only", only, "restrict to these identity ids");
    verify->add_option("--report", report_path, "write the JSON report here");
    verify->add_flag("--list", list, "list registered identities");

    OeisArgs oeis_args;
    auto* oeis = app.add_subcommand("oeis", "emit b-file lines \"n a(n)\"");
    oeis->add_option("family", oeis_args.params.family, "family to count along the axis");
    oeis->add_option("-n,--cars", oeis_args.params.n, "fixed n");
    oeis->add_option("-m,--spots", oeis_args.params.m, "fixed m");
    oeis->add_option("-l,--ell", oeis_args.params.ell, "fixed ell");
    oeis->add_option("--axis", oeis_args.axis, "varying parameter: n, m or ell");
    oeis->add_option("--from", oeis_args.from, "first axis value");
    oeis->add_option("--to", oeis_args.to, "last axis value");
    oeis->add_option("--index-offset", oeis_args.index_offset, "added to each printed index");
    oeis->add_option("--method", oeis_args.method, "counting method (default: first non-oracle method)");
    oeis->add_option("--grid", oeis_args.grid, "flatten a table row by row: table1 or table2");
    oeis->add_option("--triangle-rows", oeis_args.triangle_rows, "exact-height Dyck triangle with this many rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        load_config(g);
        if (*count) return cmd_count(g, count_p, method);
        if (*enumerate) return cmd_enumerate(g, enum_p, count_only);
        if (*check) return cmd_check(g, check_p, tuple, tol);
        if (*map) return cmd_map(g, transform, input, map_m, shape);
        if (*table) return cmd_table(g, table_id, cell);
        if (*verify) return cmd_verify(g, only, report_path, list);
        if (*oeis) return cmd_oeis(g, oeis_args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::ScaleExceeded ? kExitScale : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
