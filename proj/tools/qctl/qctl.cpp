// Copyright 2026 The hullprop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qctl.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hullprop/codekit.hpp"
#include "hullprop/fixtures.hpp"
#include "hullprop/grslab.hpp"
#include "hullprop/known_families.hpp"
#include "hullprop/qparams.hpp"
#include "hullprop/tables.hpp"
#include "json.hpp"

namespace qctl {

namespace {

using namespace hullprop;
using json = nlohmann::ordered_json;

// Everything the subcommands read from the command line.
struct Args {
    std::vector<std::string> spec;  // positional construction words
    std::string in;
    std::string out;
    std::optional<std::uint32_t> q;
    std::optional<std::size_t> k;
    std::optional<std::size_t> m;
    std::optional<std::size_t> s;
    std::optional<std::string> S;
    std::string mode = "puncture";
    std::string ip = "hermitian";
    std::string kind = "eaqecc";
    std::string format = "text";
    std::uint64_t budget = kDefaultBudget;
    unsigned jobs = 0;
    bool formula_only = false;
    bool unsafe = false;
    // compare-known with explicit parameters
    std::optional<std::size_t> n, kappa, delta, c, r;
};

class Usage : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

InnerProduct parse_ip(const std::string& s) {
    if (s == "hermitian") return InnerProduct::Hermitian;
    if (s == "euclid" || s == "euclidean") return InnerProduct::Euclidean;
    throw Usage("--ip must be euclid or hermitian");
}

DeriveMode parse_mode(const std::string& s) {
    if (s == "puncture") return DeriveMode::Puncture;
    if (s == "shorten") return DeriveMode::Shorten;
    throw Usage("--mode must be puncture or shorten");
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) continue;
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw Usage("bad index '" + item + "' in --S");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

std::string spec_text(const Args& a) {
    std::string text;
    for (const auto& w : a.spec) text += (text.empty() ? "" : " ") + w;
    if (a.q) text += " q=" + std::to_string(*a.q);
    if (a.k) text += " k=" + std::to_string(*a.k);
    if (a.m) text += " m=" + std::to_string(*a.m);
    return text;
}

LinearCode load_code(const Args& a) {
    if (!a.in.empty()) {
        if (a.in == "-") return read_code(std::cin);
        std::ifstream f(a.in);
        if (!f) throw Usage("cannot open " + a.in);
        return read_code(f);
    }
    if (a.spec.empty()) throw Usage("give a code with --in FILE or a construction string");
    return construct_from_string(spec_text(a)).code;
}

// Writes to --out when given, otherwise to `out`.
void emit(const Args& a, std::ostream& out, const std::string& text) {
    if (a.out.empty() || a.out == "-") {
        out << text;
        return;
    }
    std::ofstream f(a.out);
    if (!f) throw Usage("cannot write " + a.out);
    f << text;
}

std::string code_shape(const LinearCode& c) {
    return "[" + std::to_string(c.n()) + "," + std::to_string(c.k()) + "]_" + std::to_string(c.field()->order());
}

// Exact weight, or ">=b" when the budget ran out.
std::string weight_text(const std::function<std::size_t()>& f) {
    try {
        const std::size_t w = f();
        return w == kInfiniteWeight ? "inf" : std::to_string(w);
    } catch (const BudgetExceeded& e) {
        return ">=" + std::to_string(e.lower_bound());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NoNonzeroCodewords) return "-";
        throw;
    }
}

bool has_hermitian(const LinearCode& c) {
    try {
        hermitian_base(*c.field());
        return true;
    } catch (const Error&) {
        return false;
    }
}

std::vector<std::size_t> coordinate_set(const Args& a, std::size_t n) {
    if (a.S) return normalize_index_set(parse_index_list(*a.S), n);
    std::vector<std::size_t> s(a.s.value_or(0));
    std::iota(s.begin(), s.end(), std::size_t{0});
    return normalize_index_set(s, n);
}

// ---------------------------------------------------------------------------

int cmd_construct(const Args& a, std::ostream& out, std::ostream& err) {
    const Construction con = construct_from_string(spec_text(a));
    emit(a, out, format_code(con.code));
    err << con.label << ": " << code_shape(con.code) << "\n";
    return 0;
}

int cmd_inspect(const Args& a, std::ostream& out, std::ostream&) {
    const LinearCode c = load_code(a);
    json j;
    j["n"] = c.n();
    j["k"] = c.k();
    j["field"] = c.field()->name();
    j["d"] = weight_text([&] { return min_distance(c, a.budget); });
    for (InnerProduct ip : {InnerProduct::Euclidean, InnerProduct::Hermitian}) {
        const std::string key = std::string(to_string(ip));
        if (ip == InnerProduct::Hermitian && !has_hermitian(c)) {
            j["hull_" + key] = nullptr;
            continue;
        }
        const HullReport h = hull(c, ip);
        const LinearCode hd = dual(h.hull, ip);
        j["hull_" + key] = {{"dim", h.ell},
                            {"d", weight_text([&] { return min_distance(h.hull, a.budget); })},
                            {"d2", weight_text([&] { return min_distance(hd, a.budget); })}};
    }
    if (a.format == "json") {
        out << j.dump() << "\n";
        return 0;
    }
    out << "code " << code_shape(c) << " over " << c.field()->name() << "\n";
    out << "d = " << j["d"].get<std::string>() << "\n";
    for (const char* key : {"euclid", "hermitian"}) {
        const json& h = j["hull_" + std::string(key)];
        if (h.is_null()) {
            out << key << " hull: n/a (field is not a quadratic extension)\n";
            continue;
        }
        out << key << " hull: dim " << h["dim"].get<std::size_t>() << ", d " << h["d"].get<std::string>()
            << ", d2 " << h["d2"].get<std::string>() << "\n";
    }
    return 0;
}

int cmd_hull(const Args& a, std::ostream& out, std::ostream& err) {
    const LinearCode c = load_code(a);
    const HullReport h = hull(c, parse_ip(a.ip));
    err << to_string(h.inner_product) << " hull of " << code_shape(c) << ": dimension " << h.ell << "\n";
    if (h.ell == 0) {
        emit(a, out, "code " + c.field()->name() + " " + std::to_string(c.n()) + " 0\n");
        return 0;
    }
    emit(a, out, format_code(h.hull));
    return 0;
}

int cmd_derive(const Args& a, DeriveMode mode, std::ostream& out, std::ostream& err) {
    const LinearCode c = load_code(a);
    const std::vector<std::size_t> S = coordinate_set(a, c.n());
    const InnerProduct ip = parse_ip(a.ip);
    const DerivedHullReport rep = hull_of_derived(c, S, mode, ip);
    const LinearCode derived = derive(c, S, mode);
    err << to_string(mode) << " " << code_shape(c) << " -> " << code_shape(derived) << "; hull dim "
        << rep.derived.ell << ", (Hull)_S dim " << rep.shortened_hull.k()
        << (rep.containment_only ? " (S not in a hull information set: containment only)" : "") << "\n";
    if (derived.k() == 0) {
        emit(a, out, "code " + c.field()->name() + " " + std::to_string(derived.n()) + " 0\n");
        return 0;
    }
    emit(a, out, format_code(derived));
    return 0;
}

int cmd_lcd(const Args& a, std::ostream& out, std::ostream& err) {
    const LinearCode c = load_code(a);
    const InnerProduct ip = parse_ip(a.ip);
    const LinearCode l = make_lcd(c, parse_mode(a.mode), ip);
    err << "LCD " << code_shape(l) << " (" << to_string(ip) << " hull dim " << hull(l, ip).ell << ")\n";
    if (l.k() == 0) {
        emit(a, out, "code " + c.field()->name() + " " + std::to_string(l.n()) + " 0\n");
        return 0;
    }
    emit(a, out, format_code(l));
    return 0;
}

template <class P>
void print_params(const Args& a, const P& p, std::ostream& out) {
    if (a.format == "json") {
        out << to_json(p) << "\n";
        return;
    }
    out << format_params(p) << "  pure=" << to_string(p.pure) << " optimal=" << to_string(is_optimal(p)) << "\n";
    for (const BoundVerdict& b : check_bounds(p)) {
        out << "  " << to_string(b.id) << ": " << (b.satisfied ? "ok" : "VIOLATED") << ", slack " << b.slack
            << ", tight " << to_string(b.tight) << "\n";
    }
    for (const auto& step : p.provenance) out << "  <- " << step << "\n";
    out << "  " << describe_matches(compare_known(p));
}

int cmd_eaqecc(const Args& a, std::ostream& out) {
    const LinearCode c = load_code(a);
    print_params(a, eaqecc_from_code(c, a.budget), out);
    return 0;
}

int cmd_subsystem(const Args& a, std::ostream& out) {
    const LinearCode c = load_code(a);
    print_params(a, subsystem_from_code(c, a.budget), out);
    return 0;
}

int cmd_propagate(const Args& a, std::ostream& out) {
    const LinearCode c = load_code(a);
    PropagationOptions opts;
    opts.budget = a.budget;
    opts.unsafe = a.unsafe;
    std::size_t s = a.s.value_or(0);
    if (a.S) {
        opts.coordinates = parse_index_list(*a.S);
        s = normalize_index_set(*opts.coordinates, c.n()).size();
    }
    const DeriveMode mode = parse_mode(a.mode);
    if (a.kind == "eaqecc") {
        print_params(a, propagate_eaqecc(c, s, mode, opts), out);
    } else if (a.kind == "subsystem") {
        print_params(a, propagate_subsystem(c, s, mode, opts), out);
    } else {
        throw Usage("--kind must be eaqecc or subsystem");
    }
    return 0;
}

int cmd_table(const Args& a, int table, std::ostream& out) {
    if (!a.q) throw Usage("--q is required");
    TableOptions opts;
    opts.q = *a.q;
    opts.kmax = a.k;
    opts.budget = a.budget;
    opts.formula_only = a.formula_only;
    opts.jobs = a.jobs;
    const auto rows = table == 1 ? generate_table1(opts) : generate_table2(opts);
    if (a.format == "json") {
        emit(a, out, table_json(rows));
    } else if (a.format == "csv" || a.format == "text") {
        emit(a, out, table_csv(rows));
    } else {
        throw Usage("--format must be csv or json");
    }
    return table_exit_code(rows);
}

// Locates the first generator entry where `c` departs from the stock fixture.
std::string locate_difference(const LinearCode& stock, const LinearCode& c) {
    if (stock.n() != c.n() || stock.k() != c.k() || stock.field() != c.field()) {
        return "shape " + code_shape(c) + " differs from the stock " + code_shape(stock);
    }
    const FMatrix& g0 = stock.generator();
    const FMatrix& g1 = c.generator();
    for (std::size_t r = 0; r < g0.rows(); ++r) {
        for (std::size_t col = 0; col < g0.cols(); ++col) {
            if (g0.raw(r, col) != g1.raw(r, col)) {
                return "canonical generator differs from the stock fixture at row " + std::to_string(r) +
                       ", column " + std::to_string(col) + " (stock " + g0.f().format(g0.at(r, col)) + ", got " +
                       g1.f().format(g1.at(r, col)) + ")";
            }
        }
    }
    return "";
}

int cmd_verify_counterexample(const Args& a, std::ostream& out) {
    const FixtureExpectation want;
    const LinearCode stock = fixture_28_10();
    const LinearCode c = a.in.empty() ? stock : load_code(a);
    std::vector<std::size_t> S = {0, 1, 2, 3, 4, 5};
    if (a.S) S = normalize_index_set(parse_index_list(*a.S), c.n());

    std::vector<std::string> failures;
    auto check = [&](const std::string& what, const std::string& expected, const std::string& got) {
        const bool ok = expected == got;
        out << (ok ? "  ok   " : "  FAIL ") << what << ": expected " << expected << ", got " << got << "\n";
        if (!ok) failures.push_back(what);
    };
    auto shape = [](std::size_t n, std::size_t k, const std::string& d) {
        return "[" + std::to_string(n) + "," + std::to_string(k) + "," + d + "]_4";
    };

    out << "fixture " << code_shape(c) << "\n";
    const HullReport h = hull(c, InnerProduct::Hermitian);
    const LinearCode hd = dual(h.hull, InnerProduct::Hermitian);
    check("code", shape(want.n, want.k, std::to_string(want.d)),
          shape(c.n(), c.k(), weight_text([&] { return min_distance(c, a.budget); })));
    check("hermitian hull", shape(want.n, want.hull_dim, std::to_string(want.hull_d)),
          shape(c.n(), h.ell, weight_text([&] { return min_distance(h.hull, a.budget); })));
    check("hull dual", shape(want.n, want.n - want.hull_dim, std::to_string(want.hull_dual_d)),
          shape(c.n(), hd.k(), weight_text([&] { return min_distance(hd, a.budget); })));

    const DerivedHullReport sh = hull_of_derived(c, S, DeriveMode::Shorten, InnerProduct::Hermitian);
    const DerivedHullReport pu = hull_of_derived(c, S, DeriveMode::Puncture, InnerProduct::Hermitian);
    const bool stock_set = S == std::vector<std::size_t>{0, 1, 2, 3, 4, 5};
    std::array<std::size_t, 3> expect{};
    if (stock_set) {
        expect = {want.shortened_hull_dim, want.hull_of_shortened_dim, want.hull_of_punctured_dim};
    } else if (S.empty()) {
        expect = {want.hull_dim, want.hull_dim, want.hull_dim};
    }
    if (stock_set || S.empty()) {
        check("dim (Hull)_S", std::to_string(expect[0]), std::to_string(sh.shortened_hull.k()));
        check("dim Hull(C_S)", std::to_string(expect[1]), std::to_string(sh.derived.ell));
        check("dim Hull(C^S)", std::to_string(expect[2]), std::to_string(pu.derived.ell));
    } else {
        out << "  info dims for this S (no reference values): (Hull)_S " << sh.shortened_hull.k() << ", Hull(C_S) "
            << sh.derived.ell << ", Hull(C^S) " << pu.derived.ell << "\n";
    }

    if (failures.empty()) {
        out << "PASS\n";
        return 0;
    }
    const std::string where = locate_difference(stock, c);
    if (!where.empty()) out << "  located: " << where << "\n";
    out << "FAIL (" << failures.size() << " mismatches)\n";
    return 1;
}

int cmd_compare_known(const Args& a, std::ostream& out) {
    const bool explicit_params = a.n || a.kappa || a.delta;
    if (a.kind != "eaqecc" && a.kind != "subsystem") throw Usage("--kind must be eaqecc or subsystem");
    if (explicit_params) {
        if (!a.q || !a.n || !a.kappa || !a.delta) throw Usage("explicit parameters need --q --n --kappa --delta");
        if (a.kind == "eaqecc") {
            EaqeccParams p;
            p.q = *a.q;
            p.n = *a.n;
            p.kappa = *a.kappa;
            p.c = a.c.value_or(1);
            p.delta_lower = *a.delta;
            p.delta_exact = *a.delta;
            out << format_params(p) << ": " << describe_matches(compare_known(p));
        } else {
            SubsystemParams p;
            p.q = *a.q;
            p.n = *a.n;
            p.kappa = *a.kappa;
            p.r = a.r.value_or(0);
            p.delta_lower = *a.delta;
            p.delta_exact = *a.delta;
            out << format_params(p) << ": " << describe_matches(compare_known(p));
        }
        return 0;
    }
    const LinearCode c = load_code(a);
    if (a.kind == "eaqecc") {
        const EaqeccParams p = eaqecc_from_code(c, a.budget);
        out << format_params(p) << ": " << describe_matches(compare_known(p));
    } else {
        const SubsystemParams p = subsystem_from_code(c, a.budget);
        out << format_params(p) << ": " << describe_matches(compare_known(p));
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hermitian hulls, their propagation rules and the quantum codes they give"};
    app.name("qctl");
    app.require_subcommand(1);
    Args a;

    auto add_code_input = [&](CLI::App* sub) {
        sub->add_option("spec", a.spec, "construction words, e.g. grscon2 q=3 k=2");
        sub->add_option("--in", a.in, "code file ('-' for stdin)");
        sub->add_option("--q", a.q, "field parameter q");
        sub->add_option("--k", a.k, "dimension parameter k");
        sub->add_option("--m", a.m, "weight parameter m (grscon4)");
        sub->add_option("--budget", a.budget, "enumeration budget for weight computations");
    };
    auto add_set = [&](CLI::App* sub) {
        sub->add_option("--s", a.s, "number of coordinates");
        sub->add_option("--S", a.S, "explicit comma-separated coordinate list");
    };
    auto* construct = app.add_subcommand("construct", "build a code from a construction string");
    add_code_input(construct);
    construct->add_option("--out", a.out, "output file");

    auto* inspect = app.add_subcommand("inspect", "n, k, d, both hulls and d2");
    add_code_input(inspect);
    inspect->add_option("--format", a.format, "text or json");

    auto* hull_cmd = app.add_subcommand("hull", "write the hull as a code file");
    add_code_input(hull_cmd);
    hull_cmd->add_option("--ip", a.ip, "euclid or hermitian");
    hull_cmd->add_option("--out", a.out, "output file");

    auto* puncture_cmd = app.add_subcommand("puncture", "puncture on S");
    auto* shorten_cmd = app.add_subcommand("shorten", "shorten on S");
    for (auto* sub : {puncture_cmd, shorten_cmd}) {
        add_code_input(sub);
        add_set(sub);
        sub->add_option("--ip", a.ip, "euclid or hermitian");
        sub->add_option("--out", a.out, "output file");
    }

    auto* lcd = app.add_subcommand("lcd", "derive an LCD code from the hull");
    add_code_input(lcd);
    lcd->add_option("--mode", a.mode, "puncture or shorten");
    lcd->add_option("--ip", a.ip, "euclid or hermitian");
    lcd->add_option("--out", a.out, "output file");

    auto* eaqecc = app.add_subcommand("eaqecc", "EAQECC parameters of a code over GF(q^2)");
    auto* subsystem = app.add_subcommand("subsystem", "subsystem code parameters of a code over GF(q^2)");
    for (auto* sub : {eaqecc, subsystem}) {
        add_code_input(sub);
        sub->add_option("--format", a.format, "text or json");
    }

    auto* propagate = app.add_subcommand("propagate", "apply a propagation rule");
    add_code_input(propagate);
    add_set(propagate);
    propagate->add_option("--mode", a.mode, "puncture or shorten");
    propagate->add_option("--kind", a.kind, "eaqecc or subsystem");
    propagate->add_option("--format", a.format, "text or json");
    propagate->add_flag("--unsafe", a.unsafe, "allow the shorten rule on a source of unknown or no purity");

    auto* table1 = app.add_subcommand("table1", "regenerate the sixteen EAQECC families");
    auto* table2 = app.add_subcommand("table2", "regenerate the eight subsystem families");
    for (auto* sub : {table1, table2}) {
        sub->add_option("--q", a.q, "field parameter q")->required();
        sub->add_option("--k", a.k, "largest k to enumerate");
        sub->add_option("--budget", a.budget, "enumeration budget per weight computation");
        sub->add_option("--format", a.format, "csv or json");
        sub->add_option("--out", a.out, "output file");
        sub->add_option("--jobs", a.jobs, "worker threads (0: all cores)");
        sub->add_flag("--formula-only", a.formula_only, "print closed forms without constructing codes");
    }

    auto* verify = app.add_subcommand("verify-counterexample", "check the [28,10,9]_4 fixture");
    verify->add_option("--in", a.in, "code file to check instead of the stock fixture");
    verify->add_option("--S", a.S, "coordinate list (default 0,1,2,3,4,5)");
    verify->add_option("--budget", a.budget, "enumeration budget");

    auto* compare = app.add_subcommand("compare-known", "match parameters against known optimal families");
    add_code_input(compare);
    compare->add_option("--kind", a.kind, "eaqecc or subsystem");
    compare->add_option("--n", a.n, "length");
    compare->add_option("--kappa", a.kappa, "logical dimension");
    compare->add_option("--delta", a.delta, "minimum distance");
    compare->add_option("--c", a.c, "entangled pairs (default 1)");
    compare->add_option("--r", a.r, "gauge qudits");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*construct) return cmd_construct(a, out, err);
        if (*inspect) return cmd_inspect(a, out, err);
        if (*hull_cmd) return cmd_hull(a, out, err);
        if (*puncture_cmd) return cmd_derive(a, DeriveMode::Puncture, out, err);
        if (*shorten_cmd) return cmd_derive(a, DeriveMode::Shorten, out, err);
        if (*lcd) return cmd_lcd(a, out, err);
        if (*eaqecc) return cmd_eaqecc(a, out);
        if (*subsystem) return cmd_subsystem(a, out);
        if (*propagate) return cmd_propagate(a, out);
        if (*table1) return cmd_table(a, 1, out);
        if (*table2) return cmd_table(a, 2, out);
        if (*verify) return cmd_verify_counterexample(a, out);
        if (*compare) return cmd_compare_known(a, out);
    } catch (const Usage& e) {
        err << "usage error: " << e.what() << "\n";
        return 64;
    } catch (const Error& e) {
        err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
        return e.code() == ErrorCode::ContractViolation ? 1 : 3;
    }
    return 64;
}

}  // namespace qctl
