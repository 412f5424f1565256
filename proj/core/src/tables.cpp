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

#include "hullprop/tables.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "hullprop/grslab.hpp"
#include "json.hpp"

namespace hullprop {

namespace {

using ll = long long;

struct Shape {
    int group;  // 0..3 selects GRScon1..4
    bool use_dual;
    DeriveMode mode;
};

Shape table1_shape(int family) {
    const int pos = (family - 1) % 4;
    return {(family - 1) / 4, pos < 2, pos % 2 == 0 ? DeriveMode::Puncture : DeriveMode::Shorten};
}

Shape table2_shape(int family) {
    return {(family - 1) / 2, false, family % 2 == 1 ? DeriveMode::Puncture : DeriveMode::Shorten};
}

// Lengths the four constructions produce: q^2, q^2-1, q^2-i(q+1), q^2-j(q+1)-1.
struct Lengths {
    ll Q, Li, Lj;
};

Lengths lengths(std::uint32_t q, std::size_t k, std::size_t m) {
    const ll qq = q;
    const ll i = k >= 1 ? std::gcd(static_cast<ll>(k) - 1, qq - 1) : 0;
    const ll j = m + 1 >= k ? std::gcd(static_cast<ll>(m) - static_cast<ll>(k) + 1, qq - 1) : 0;
    return {qq * qq, qq * qq - i * (qq + 1), qq * qq - j * (qq + 1)};
}

std::string construction_text(int group, std::uint32_t q, std::size_t k, std::size_t m) {
    const std::string qs = " q=" + std::to_string(q);
    switch (group) {
        case 0: return "grscon1" + qs;
        case 1: return "grscon2" + qs + " k=" + std::to_string(k);
        case 2: return "grscon3" + qs + " k=" + std::to_string(k);
        default: return "grscon4" + qs + " k=" + std::to_string(k) + " m=" + std::to_string(m);
    }
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string format_formula(const TableRow& row) {
    const FormulaParams& f = row.formula;
    const std::string sep = row.table == 1 ? ";" : ",";
    std::string out = "[[" + std::to_string(f.n) + "," + std::to_string(f.kappa) + ",";
    if (row.table == 1) return out + std::to_string(f.delta) + sep + std::to_string(f.c_or_r) + "]]_" + std::to_string(row.q);
    return out + std::to_string(f.c_or_r) + sep + std::to_string(f.delta) + "]]_" + std::to_string(row.q);
}

void build_row(TableRow& row, std::uint64_t budget) {
    try {
        const Construction con = construct_from_string(row.recipe.construction);
        const LinearCode source = row.recipe.use_dual ? dual(con.code, InnerProduct::Hermitian) : con.code;
        PropagationOptions popts;
        popts.budget = budget;
        row.recipe.coordinates = default_propagation_set(source, row.s);
        popts.coordinates = row.recipe.coordinates;
        if (row.table == 1) {
            row.eaqecc = propagate_eaqecc(source, row.s, row.recipe.mode, popts);
            row.eaqecc->provenance.insert(row.eaqecc->provenance.begin(),
                                          row.recipe.construction + (row.recipe.use_dual ? " (Hermitian dual)" : ""));
        } else {
            row.subsystem = propagate_subsystem(source, row.s, row.recipe.mode, popts);
            row.subsystem->provenance.insert(row.subsystem->provenance.begin(), row.recipe.construction);
        }
        row.constructed = true;
    } catch (const Error& e) {
        row.contract_violation = e.code() == ErrorCode::ContractViolation;
        row.note = std::string(error_code_name(e.code())) + ": " + e.what();
        return;
    }
    const bool exact = row.table == 1 ? row.eaqecc->delta_exact.has_value() : row.subsystem->delta_exact.has_value();
    row.verified = exact;
    row.matches_formula = exact && row.computed() == row.formula;
    if (!exact) row.note = "distance budget exhausted; delta is a lower bound";
    if (exact && !row.matches_formula) {
        row.note = "printed closed form differs from the constructed code";
    }
}

void run_rows(std::vector<TableRow>& rows, const TableOptions& opts) {
    if (opts.formula_only) {
        for (auto& row : rows) {
            row.formula_only = true;
            row.note = "formula only; not constructed";
        }
        return;
    }
    unsigned jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(rows.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) build_row(rows[i], opts.budget);
    };
    if (jobs <= 1) {
        worker();
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
}

void check_options(const TableOptions& opts) {
    const auto pm = prime_power(opts.q);
    if (!pm) raise(ErrorCode::ParameterOutOfRange, "q = " + std::to_string(opts.q) + " is not a prime power");
    if (!opts.formula_only && opts.q > 4) {
        raise(ErrorCode::ParameterOutOfRange, "exact tables are limited to q <= 4; use formula-only mode");
    }
}

std::vector<TableRow> enumerate(int table, const TableOptions& opts) {
    check_options(opts);
    const std::uint32_t q = opts.q;
    const std::size_t kmax = std::min<std::size_t>(q - 1, opts.kmax.value_or(q - 1));
    const int families = table == 1 ? 16 : 8;
    std::vector<TableRow> rows;
    for (int family = 1; family <= families; ++family) {
        const Shape shape = table == 1 ? table1_shape(family) : table2_shape(family);
        auto emit = [&](std::size_t k, std::optional<std::size_t> m, std::size_t s) {
            TableRow row;
            row.table = table;
            row.family = family;
            row.q = q;
            row.k = k;
            row.m = m;
            row.s = s;
            row.formula = table == 1 ? table1_formula(family, q, k, m.value_or(0), s)
                                     : table2_formula(family, q, k, m.value_or(0), s);
            row.recipe.construction = construction_text(shape.group, q, k, m.value_or(0));
            row.recipe.use_dual = shape.use_dual;
            row.recipe.mode = shape.mode;
            rows.push_back(std::move(row));
        };
        if (shape.group == 0) {
            for (std::size_t s = 0; s < q; ++s) emit(q, std::nullopt, s);
            continue;
        }
        for (std::size_t k = 2; k <= kmax; ++k) {
            if (shape.group < 3) {
                for (std::size_t s = 0; s < k; ++s) emit(k, std::nullopt, s);
                continue;
            }
            for (std::size_t m = k; m + 2 <= q; ++m) {
                for (std::size_t s = 0; s < k; ++s) emit(k, m, s);
            }
        }
    }
    run_rows(rows, opts);
    return rows;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

nlohmann::ordered_json tri_json(Tri t) {
    if (t == Tri::Unknown) return nullptr;
    return t == Tri::Yes;
}

}  // namespace

FormulaParams TableRow::computed() const {
    if (eaqecc) {
        return {static_cast<ll>(eaqecc->n), static_cast<ll>(eaqecc->kappa), static_cast<ll>(eaqecc->delta()),
                static_cast<ll>(eaqecc->c)};
    }
    if (subsystem) {
        return {static_cast<ll>(subsystem->n), static_cast<ll>(subsystem->kappa),
                static_cast<ll>(subsystem->delta()), static_cast<ll>(subsystem->r)};
    }
    raise(ErrorCode::ParameterOutOfRange, "row was not constructed");
}

Tri TableRow::pure() const {
    if (eaqecc) return eaqecc->pure;
    if (subsystem) return subsystem->pure;
    return Tri::Unknown;
}

Tri TableRow::optimal() const {
    if (eaqecc) return is_optimal(*eaqecc);
    if (subsystem) return is_optimal(*subsystem);
    return Tri::Unknown;
}

FormulaParams table1_formula(int family, std::uint32_t q, std::size_t k, std::size_t m, std::size_t s) {
    const Lengths L = lengths(q, k, m);
    const ll qq = q, kk = static_cast<ll>(k), ss = static_cast<ll>(s);
    const ll Q = L.Q;
    switch (family) {
        case 1: return {Q - ss, 1, Q - qq + 1, Q - 2 * qq + 1 + ss};
        case 2: return {Q - ss, 1 + ss, Q - qq + 1 - ss, Q - 2 * qq + 1};
        case 3: return {Q - ss, Q - 2 * qq + 1, qq + 1, 1 + ss};
        case 4: return {Q - ss, Q - 2 * qq + 1 + ss, qq + 1 - ss, 1};
        case 5: return {Q - 1 - ss, 1, Q - kk, Q - 2 * kk + ss};
        case 6: return {Q - 1 - ss, 1 + ss, Q - kk - ss, Q - 2 * kk};
        case 7: return {Q - 1 - ss, Q - 2 * kk, kk + 1, 1 + ss};
        case 8: return {Q - 1 - ss, Q - 2 * kk + ss, kk + 1 - ss, 1};
        case 9: return {L.Li - ss, 1, L.Li - kk + 1, L.Li - 2 * kk + 1 + ss};
        case 10: return {L.Li - ss, 1 + ss, L.Li - kk + 1 - ss, L.Li - 2 * kk + 1};
        case 11: return {L.Li - ss, L.Li - 2 * kk + 1, kk + 1, 1 + ss};
        case 12: return {L.Li - ss, L.Li - 2 * kk + 1 + ss, kk + 1 - ss, 1};
        // As printed: lengths use j while the c and kappa columns use i.
        case 13: return {L.Lj - 1 - ss, 1, L.Lj - kk, L.Li - 2 * kk + ss};
        case 14: return {L.Lj - 1 - ss, 1 + ss, L.Lj - kk - ss, L.Li - 2 * kk};
        case 15: return {L.Lj - 1 - ss, L.Li - 2 * kk, kk + 1, 1 + ss};
        case 16: return {L.Lj - 1 - ss, L.Li - 2 * kk + ss, kk + 1 - ss, 1};
        default: raise(ErrorCode::ParameterOutOfRange, "EAQECC family must be in 1..16");
    }
}

FormulaParams table2_formula(int family, std::uint32_t q, std::size_t k, std::size_t m, std::size_t s) {
    const Lengths L = lengths(q, k, m);
    const ll qq = q, kk = static_cast<ll>(k), ss = static_cast<ll>(s);
    const ll Q = L.Q;
    switch (family) {
        case 1: return {Q - ss, Q - 2 * qq + 1, qq - ss, 1 + ss};
        case 2: return {Q - ss, Q - 2 * qq + 1 + ss, qq - ss, 1};
        case 3: return {Q - 1 - ss, Q - 2 * kk, kk - ss, 1 + ss};
        case 4: return {Q - 1 - ss, Q - 2 * kk + ss, kk - ss, 1};
        case 5: return {L.Li - ss, L.Li - 2 * kk + 1, kk - ss, 1 + ss};
        case 6: return {L.Li - ss, L.Li - 2 * kk + 1 + ss, kk - ss, 1};
        case 7: return {L.Lj - 1 - ss, L.Lj - 2 * kk, kk - ss, 1 + ss};
        case 8: return {L.Lj - 1 - ss, L.Lj - 2 * kk + ss, kk - ss, 1};
        default: raise(ErrorCode::ParameterOutOfRange, "subsystem family must be in 1..8");
    }
}

std::vector<TableRow> generate_table1(const TableOptions& opts) { return enumerate(1, opts); }

std::vector<TableRow> generate_table2(const TableOptions& opts) { return enumerate(2, opts); }

TableRow replay_row(const TableRow& row, std::uint64_t budget) {
    TableRow fresh = row;
    fresh.eaqecc.reset();
    fresh.subsystem.reset();
    fresh.constructed = fresh.matches_formula = fresh.verified = fresh.contract_violation = false;
    fresh.note.clear();
    build_row(fresh, budget);
    return fresh;
}

std::string table_csv(const std::vector<TableRow>& rows) {
    std::string out = "family,q,k,m,s,n,kappa,delta,c_or_r,pure,optimal,matches_formula,verified,formula,note\n";
    for (const TableRow& row : rows) {
        const FormulaParams shown = row.constructed ? row.computed() : row.formula;
        const bool exact = row.constructed && row.verified;
        std::string delta = (exact ? "" : ">=") + std::to_string(shown.delta);
        if (!row.constructed) delta = std::to_string(shown.delta);
        out += std::to_string(row.family) + "," + std::to_string(row.q) + "," + std::to_string(row.k) + "," +
               (row.m ? std::to_string(*row.m) : "") + "," + std::to_string(row.s) + "," + std::to_string(shown.n) +
               "," + std::to_string(shown.kappa) + "," + delta + "," + std::to_string(shown.c_or_r) + "," +
               std::string(to_string(row.pure())) + "," + std::string(to_string(row.optimal())) + "," +
               yes_no(row.matches_formula) + "," + yes_no(row.verified) + "," + csv_field(format_formula(row)) + "," +
               csv_field(row.note) + "\n";
    }
    return out;
}

std::string table_json(const std::vector<TableRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const TableRow& row : rows) {
        nlohmann::ordered_json j;
        j["table"] = row.table;
        j["family"] = row.family;
        j["q"] = row.q;
        j["k"] = row.k;
        j["m"] = row.m ? nlohmann::ordered_json(*row.m) : nlohmann::ordered_json(nullptr);
        j["s"] = row.s;
        const char* extra = row.table == 1 ? "c" : "r";
        j["formula"] = {{"n", row.formula.n},
                        {"kappa", row.formula.kappa},
                        {"delta", row.formula.delta},
                        {extra, row.formula.c_or_r}};
        if (row.eaqecc) j["params"] = nlohmann::ordered_json::parse(to_json(*row.eaqecc));
        else if (row.subsystem) j["params"] = nlohmann::ordered_json::parse(to_json(*row.subsystem));
        else j["params"] = nullptr;
        j["pure"] = tri_json(row.pure());
        j["optimal"] = tri_json(row.optimal());
        j["matches_formula"] = row.matches_formula;
        j["verified"] = row.verified;
        j["contract_violation"] = row.contract_violation;
        j["note"] = row.note;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

int table_exit_code(const std::vector<TableRow>& rows) {
    if (std::any_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.contract_violation; })) return 1;
    if (std::any_of(rows.begin(), rows.end(), [](const TableRow& r) { return !r.formula_only && !r.verified; })) {
        return 2;
    }
    return 0;
}

}  // namespace hullprop
