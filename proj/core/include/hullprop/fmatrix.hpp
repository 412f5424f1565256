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
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hullprop/galois.hpp"

namespace hullprop {

/// Dense row-major matrix over a Field, entries stored as discrete logs.
class FMatrix {
public:
    using Log = Field::Log;

    FMatrix() = default;
    /// rows x cols zero matrix.
    FMatrix(FieldPtr field, std::size_t rows, std::size_t cols);

    static FMatrix identity(FieldPtr field, std::size_t n);
    static FMatrix from_rows(FieldPtr field, const std::vector<std::vector<Felt>>& rows, std::size_t cols);
    /// Vector as a single-row matrix.
    static FMatrix row_vector(FieldPtr field, std::span<const Felt> v);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const FieldPtr& field() const noexcept { return field_; }
    const Field& f() const noexcept { return *field_; }

    Felt at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, Felt v);

    Log raw(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Log& raw(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    std::span<const Log> row_raw(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<Log> row_raw(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    std::vector<Felt> row(std::size_t r) const;

    bool is_zero() const noexcept;

    friend bool operator==(const FMatrix& a, const FMatrix& b);

private:
    FieldPtr field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Log> data_;
};

struct RrefResult {
    FMatrix reduced;                  // zero rows dropped
    std::vector<std::size_t> pivots;  // strictly increasing
};

RrefResult rref(const FMatrix& m);
std::size_t rank(const FMatrix& m);
/// Basis of {x : m x^T = 0}, in RREF.
FMatrix nullspace(const FMatrix& m);
/// Basis of {u : u m = 0}, in RREF.
FMatrix left_nullspace(const FMatrix& m);

FMatrix mul(const FMatrix& a, const FMatrix& b);
FMatrix transpose(const FMatrix& m);
/// Entrywise x -> x^q.
FMatrix conjugate(const FMatrix& m, std::uint32_t q);
/// (G^dagger)_{ij} = (G_{ji})^q.
FMatrix hermitian_transpose(const FMatrix& m, std::uint32_t q);
FMatrix vstack(const FMatrix& top, const FMatrix& bottom);
/// Columns [0, col) and [col, cols).
std::pair<FMatrix, FMatrix> hsplit(const FMatrix& m, std::size_t col);
FMatrix select_columns(const FMatrix& m, std::span<const std::size_t> cols);
FMatrix select_rows(const FMatrix& m, std::span<const std::size_t> rows);
/// Removes the listed columns, keeping the remaining ones in order.
FMatrix drop_columns(const FMatrix& m, std::span<const std::size_t> cols);
/// v * m for a row vector v of length m.rows().
std::vector<Felt> vec_mul(std::span<const Felt> v, const FMatrix& m);

/// "GF(p^m) rows cols" header, then one whitespace-separated row per line.
std::string format_matrix(const FMatrix& m);
void write_matrix(std::ostream& out, const FMatrix& m);
FMatrix read_matrix(std::istream& in);

}  // namespace hullprop
