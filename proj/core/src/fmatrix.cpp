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

#include "hullprop/fmatrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace hullprop {

namespace {

void require_same_field(const FMatrix& a, const FMatrix& b) {
    if (a.field() != b.field()) raise(ErrorCode::FieldMismatch, "matrices over different fields");
}

}  // namespace

FMatrix::FMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Field::kZero) {}

FMatrix FMatrix::identity(FieldPtr field, std::size_t n) {
    FMatrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.raw(i, i) = 0;
    return m;
}

FMatrix FMatrix::from_rows(FieldPtr field, const std::vector<std::vector<Felt>>& rows, std::size_t cols) {
    FMatrix m(std::move(field), rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) raise(ErrorCode::DimensionMismatch, "ragged row in matrix literal");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

FMatrix FMatrix::row_vector(FieldPtr field, std::span<const Felt> v) {
    FMatrix m(std::move(field), 1, v.size());
    for (std::size_t c = 0; c < v.size(); ++c) m.set(0, c, v[c]);
    return m;
}

Felt FMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) raise(ErrorCode::IndexOutOfRange, "matrix index out of range");
    return field_->wrap(raw(r, c));
}

void FMatrix::set(std::size_t r, std::size_t c, Felt v) {
    if (r >= rows_ || c >= cols_) raise(ErrorCode::IndexOutOfRange, "matrix index out of range");
    field_->check(v);
    raw(r, c) = v.log;
}

std::vector<Felt> FMatrix::row(std::size_t r) const {
    std::vector<Felt> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
    return out;
}

bool FMatrix::is_zero() const noexcept {
    for (Log x : data_) {
        if (x != Field::kZero) return false;
    }
    return true;
}

bool operator==(const FMatrix& a, const FMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RrefResult rref(const FMatrix& m) {
    const Field& f = m.f();
    FMatrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        std::size_t sel = row;
        while (sel < r.rows() && r.raw(sel, col) == Field::kZero) ++sel;
        if (sel == r.rows()) continue;
        if (sel != row) {
            auto a = r.row_raw(sel);
            auto b = r.row_raw(row);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        // normalize pivot to 1
        const Field::Log scale = f.inv_raw(r.raw(row, col));
        for (std::size_t c = col; c < r.cols(); ++c) r.raw(row, c) = f.mul_raw(r.raw(row, c), scale);
        for (std::size_t other = 0; other < r.rows(); ++other) {
            if (other == row) continue;
            const Field::Log factor = r.raw(other, col);
            if (factor == Field::kZero) continue;
            const Field::Log neg = f.neg_raw(factor);
            for (std::size_t c = col; c < r.cols(); ++c) {
                r.raw(other, c) = f.add_raw(r.raw(other, c), f.mul_raw(neg, r.raw(row, c)));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    std::vector<std::size_t> keep(row);
    for (std::size_t i = 0; i < row; ++i) keep[i] = i;
    return {select_rows(r, keep), std::move(pivots)};
}

std::size_t rank(const FMatrix& m) { return rref(m).pivots.size(); }

FMatrix nullspace(const FMatrix& m) {
    const Field& f = m.f();
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }
    FMatrix basis(m.field(), free_cols.size(), m.cols());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        const std::size_t fc = free_cols[i];
        basis.raw(i, fc) = 0;
        for (std::size_t j = 0; j < pivots.size(); ++j) {
            basis.raw(i, pivots[j]) = f.neg_raw(r.raw(j, fc));
        }
    }
    return rref(basis).reduced;
}

FMatrix left_nullspace(const FMatrix& m) { return nullspace(transpose(m)); }

FMatrix mul(const FMatrix& a, const FMatrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows()) raise(ErrorCode::DimensionMismatch, "inner dimensions differ in product");
    const Field& f = a.f();
    FMatrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Field::Log aik = a.raw(i, k);
            if (aik == Field::kZero) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out.raw(i, j) = f.add_raw(out.raw(i, j), f.mul_raw(aik, b.raw(k, j)));
            }
        }
    }
    return out;
}

FMatrix transpose(const FMatrix& m) {
    FMatrix out(m.field(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out.raw(j, i) = m.raw(i, j);
    }
    return out;
}

FMatrix conjugate(const FMatrix& m, std::uint32_t q) {
    const Field& f = m.f();
    if (static_cast<std::uint64_t>(q) * q != f.order()) {
        raise(ErrorCode::NotQuadraticExtension, f.name() + " is not GF(" + std::to_string(q) + "^2)");
    }
    FMatrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out.raw(i, j) = f.pow_raw(m.raw(i, j), q);
    }
    return out;
}

FMatrix hermitian_transpose(const FMatrix& m, std::uint32_t q) { return transpose(conjugate(m, q)); }

FMatrix vstack(const FMatrix& top, const FMatrix& bottom) {
    require_same_field(top, bottom);
    if (top.cols() != bottom.cols()) raise(ErrorCode::DimensionMismatch, "column counts differ in vstack");
    FMatrix out(top.field(), top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i) {
        for (std::size_t j = 0; j < top.cols(); ++j) out.raw(i, j) = top.raw(i, j);
    }
    for (std::size_t i = 0; i < bottom.rows(); ++i) {
        for (std::size_t j = 0; j < top.cols(); ++j) out.raw(top.rows() + i, j) = bottom.raw(i, j);
    }
    return out;
}

std::pair<FMatrix, FMatrix> hsplit(const FMatrix& m, std::size_t col) {
    if (col > m.cols()) raise(ErrorCode::DimensionMismatch, "split column beyond matrix width");
    std::vector<std::size_t> left(col);
    std::vector<std::size_t> right(m.cols() - col);
    for (std::size_t i = 0; i < col; ++i) left[i] = i;
    for (std::size_t i = col; i < m.cols(); ++i) right[i - col] = i;
    return {select_columns(m, left), select_columns(m, right)};
}

FMatrix select_columns(const FMatrix& m, std::span<const std::size_t> cols) {
    FMatrix out(m.field(), m.rows(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= m.cols()) raise(ErrorCode::IndexOutOfRange, "column index out of range");
        for (std::size_t i = 0; i < m.rows(); ++i) out.raw(i, j) = m.raw(i, cols[j]);
    }
    return out;
}

FMatrix select_rows(const FMatrix& m, std::span<const std::size_t> rows) {
    FMatrix out(m.field(), rows.size(), m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] >= m.rows()) raise(ErrorCode::IndexOutOfRange, "row index out of range");
        for (std::size_t j = 0; j < m.cols(); ++j) out.raw(i, j) = m.raw(rows[i], j);
    }
    return out;
}

FMatrix drop_columns(const FMatrix& m, std::span<const std::size_t> cols) {
    std::vector<bool> drop(m.cols(), false);
    for (std::size_t c : cols) {
        if (c >= m.cols()) raise(ErrorCode::IndexOutOfRange, "column index out of range");
        drop[c] = true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!drop[c]) keep.push_back(c);
    }
    return select_columns(m, keep);
}

std::vector<Felt> vec_mul(std::span<const Felt> v, const FMatrix& m) {
    if (v.size() != m.rows()) raise(ErrorCode::DimensionMismatch, "vector length differs from row count");
    const Field& f = m.f();
    std::vector<Field::Log> acc(m.cols(), Field::kZero);
    for (std::size_t i = 0; i < v.size(); ++i) {
        f.check(v[i]);
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) acc[j] = f.add_raw(acc[j], f.mul_raw(v[i].log, m.raw(i, j)));
    }
    std::vector<Felt> out;
    out.reserve(acc.size());
    for (auto x : acc) out.push_back(f.wrap(x));
    return out;
}

std::string format_matrix(const FMatrix& m) {
    std::ostringstream out;
    write_matrix(out, m);
    return out.str();
}

void write_matrix(std::ostream& out, const FMatrix& m) {
    const Field& f = m.f();
    out << f.name() << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ' ';
            out << f.format(m.at(i, j));
        }
        out << '\n';
    }
}

FMatrix read_matrix(std::istream& in) {
    std::string header;
    while (header.empty()) {
        if (!std::getline(in, header)) raise(ErrorCode::ParseError, "missing matrix header");
        if (!header.empty() && header.back() == '\r') header.pop_back();
    }
    std::istringstream hs(header);
    std::string field_name;
    long long rows = -1;
    long long cols = -1;
    std::string extra;
    if (!(hs >> field_name >> rows >> cols) || (hs >> extra) || rows < 0 || cols < 0) {
        raise(ErrorCode::ParseError, "bad matrix header '" + header + "', expected 'GF(p^m) rows cols'");
    }
    FieldPtr field = parse_field_name(field_name);
    FMatrix m(field, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (long long i = 0; i < rows; ++i) {
        std::string line;
        if (!std::getline(in, line)) raise(ErrorCode::ParseError, "matrix ends after " + std::to_string(i) + " rows");
        std::istringstream ls(line);
        std::string token;
        long long j = 0;
        while (ls >> token) {
            if (j >= cols) raise(ErrorCode::ParseError, "too many entries in row " + std::to_string(i));
            m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), field->parse(token));
            ++j;
        }
        if (j != cols) raise(ErrorCode::ParseError, "too few entries in row " + std::to_string(i));
    }
    return m;
}

}  // namespace hullprop
