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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hullprop/qparams.hpp"

namespace hullprop {

/// Closed-form parameters of one family member. `c_or_r` is c for the
/// EAQECC table and r for the subsystem table.
struct FormulaParams {
    long long n = 0;
    long long kappa = 0;
    long long delta = 0;
    long long c_or_r = 0;

    bool operator==(const FormulaParams&) const = default;
};

/// How a row was produced, enough to rebuild it from scratch.
struct RowRecipe {
    std::string construction;  // accepted by construct_from_string
    bool use_dual = false;     // start from the Hermitian dual of the construction
    DeriveMode mode = DeriveMode::Puncture;
    std::vector<std::size_t> coordinates;
};

struct TableRow {
    int table = 1;  // 1: EAQECC families 1-16, 2: subsystem families 1-8
    int family = 0;
    std::uint32_t q = 0;
    std::size_t k = 0;
    std::optional<std::size_t> m;
    std::size_t s = 0;

    FormulaParams formula;
    std::optional<EaqeccParams> eaqecc;
    std::optional<SubsystemParams> subsystem;
    RowRecipe recipe;

    bool formula_only = false;  // closed form printed without construction
    bool constructed = false;
    bool matches_formula = false;
    bool verified = false;
    bool contract_violation = false;
    std::string note;

    /// Computed parameters in the same shape as `formula` (requires constructed).
    FormulaParams computed() const;
    Tri pure() const;
    Tri optimal() const;
};

struct TableOptions {
    std::uint32_t q = 2;
    std::optional<std::size_t> kmax;
    std::uint64_t budget = kDefaultBudget;
    /// Print closed forms only. Required for q > 4.
    bool formula_only = false;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned jobs = 0;
};

/// Closed forms. Rows 13-16 of the EAQECC table use both gcd(k-1, q-1) and
/// gcd(m-k+1, q-1) exactly as printed, so they disagree with the
/// constructed codes whenever the two gcds differ.
FormulaParams table1_formula(int family, std::uint32_t q, std::size_t k, std::size_t m, std::size_t s);
FormulaParams table2_formula(int family, std::uint32_t q, std::size_t k, std::size_t m, std::size_t s);

/// Every family, every legal (k, m, s). Rows come back sorted by
/// (family, k, m, s) whatever the worker count.
std::vector<TableRow> generate_table1(const TableOptions& opts);
std::vector<TableRow> generate_table2(const TableOptions& opts);

/// Rebuilds a constructed row from its recipe.
TableRow replay_row(const TableRow& row, std::uint64_t budget = kDefaultBudget);

std::string table_csv(const std::vector<TableRow>& rows);
std::string table_json(const std::vector<TableRow>& rows);

/// 1 when any row broke a contract, else 2 when any attempted row is
/// unverified, else 0. Formula-only rows count as neither.
int table_exit_code(const std::vector<TableRow>& rows);

}  // namespace hullprop
