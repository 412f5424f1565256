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

#include <sstream>

#include "doctest.h"
#include "expect.hpp"
#include "hullprop/fixtures.hpp"
#include "hullprop/fmatrix.hpp"
#include "oracles.hpp"

using namespace hullprop;

TEST_CASE("rref of identity and zero matrices") {
    const FieldPtr f = make_field_of_order(9);
    const auto id = rref(FMatrix::identity(f, 5));
    CHECK(id.reduced == FMatrix::identity(f, 5));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2, 3, 4});
    const auto z = rref(FMatrix(f, 3, 4));
    CHECK(z.reduced.rows() == 0);
    CHECK(z.reduced.cols() == 4);
    CHECK(z.pivots.empty());
}

TEST_CASE("the 10 x 28 fixture generator has rank 10") {
    CHECK(rank(fixture_28_10().generator()) == 10);
}

TEST_CASE("rank agrees with an independent elimination") {
    oracle::Gen gen(3);
    for (unsigned order : {2u, 4u, 5u, 9u, 16u}) {
        const FieldPtr f = make_field_of_order(order);
        const oracle::PolyField ref(order);
        for (int t = 0; t < 60; ++t) {
            const std::size_t rows = gen.uniform(1, 6), cols = gen.uniform(1, 8);
            FMatrix m = gen.matrix(f, rows, cols);
            // Make some rows dependent so that rank deficits show up.
            if (rows > 2 && gen.coin()) {
                for (std::size_t c = 0; c < cols; ++c) m.set(rows - 1, c, f->add(m.at(0, c), m.at(1, c)));
            }
            CHECK(rank(m) == oracle::rank(ref, oracle::to_mat(m)));
        }
    }
}

TEST_CASE("rref is idempotent and independent of the row basis") {
    oracle::Gen gen(5);
    const FieldPtr f = make_field_of_order(9);
    for (int t = 0; t < 50; ++t) {
        const FMatrix m = gen.matrix(f, gen.uniform(1, 5), gen.uniform(2, 7));
        const auto r = rref(m);
        CHECK(rref(r.reduced).reduced == r.reduced);
        // Replace row 0 by a random combination involving it and scramble.
        FMatrix s = m;
        const Felt lam = gen.nonzero(*f);
        const Felt mu = gen.element(*f);
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Felt v = f->mul(lam, m.at(0, c));
            if (m.rows() > 1) v = f->add(v, f->mul(mu, m.at(m.rows() - 1, c)));
            s.set(0, c, v);
        }
        std::vector<std::size_t> order = gen.permutation(m.rows());
        s = select_rows(s, order);
        CHECK(rref(s).reduced == r.reduced);
        for (std::size_t i = 1; i < r.pivots.size(); ++i) CHECK(r.pivots[i - 1] < r.pivots[i]);
    }
}

TEST_CASE("nullspace: multiply-back and rank-nullity") {
    oracle::Gen gen(7);
    for (unsigned order : {3u, 4u, 9u}) {
        const FieldPtr f = make_field_of_order(order);
        for (int t = 0; t < 50; ++t) {
            const FMatrix m = gen.matrix(f, gen.uniform(1, 4), gen.uniform(2, 8));
            const FMatrix ns = nullspace(m);
            CHECK(rank(m) + ns.rows() == m.cols());
            if (ns.rows()) CHECK(mul(m, transpose(ns)).is_zero());
            CHECK(rref(ns).reduced == ns);
            const FMatrix lns = left_nullspace(m);
            CHECK(rank(m) + lns.rows() == m.rows());
            if (lns.rows()) CHECK(mul(lns, m).is_zero());
        }
    }
    const FieldPtr f = make_field_of_order(4);
    CHECK(nullspace(FMatrix::identity(f, 3)).rows() == 0);
    const FMatrix ones = FMatrix::from_rows(f, {{f->one(), f->one()}}, 2);
    CHECK(nullspace(ones) == ones);  // char 2: (1,1) is orthogonal to itself
}

TEST_CASE("Hermitian transpose") {
    const FieldPtr f = make_field_of_order(4);
    const Felt w = f->from_log(1);
    const FMatrix v = FMatrix::from_rows(f, {{w, f->one()}}, 2);
    const FMatrix vt = hermitian_transpose(v, 2);
    REQUIRE(vt.rows() == 2);
    REQUIRE(vt.cols() == 1);
    CHECK(vt.at(0, 0) == f->mul(w, w));
    CHECK(vt.at(1, 0) == f->one());

    oracle::Gen gen(13);
    const FieldPtr f9 = make_field_of_order(9);
    for (int t = 0; t < 40; ++t) {
        const FMatrix a = gen.matrix(f9, gen.uniform(1, 4), gen.uniform(1, 4));
        const FMatrix b = gen.matrix(f9, a.cols(), gen.uniform(1, 4));
        CHECK(hermitian_transpose(hermitian_transpose(a, 3), 3) == a);
        CHECK(hermitian_transpose(mul(a, b), 3) == mul(hermitian_transpose(b, 3), hermitian_transpose(a, 3)));
    }
    // Entries in GF(3) are fixed, so the Hermitian transpose is the plain one.
    const FieldPtr f9p = make_field_of_order(9);
    FMatrix real(f9p, 2, 3);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 3; ++c) real.set(r, c, f9p->from_log(4 * static_cast<std::int64_t>(r + c)));
    CHECK(hermitian_transpose(real, 3) == transpose(real));
    CHECK_RAISES(hermitian_transpose(real, 2), ErrorCode::NotQuadraticExtension);
}

TEST_CASE("products, stacking and column selection") {
    oracle::Gen gen(17);
    const FieldPtr f = make_field_of_order(5);
    const FMatrix a = gen.matrix(f, 3, 4);
    CHECK(mul(a, FMatrix::identity(f, 4)) == a);
    CHECK_RAISES(mul(a, a), ErrorCode::DimensionMismatch);
    const std::vector<std::size_t> none;
    CHECK(drop_columns(a, none) == a);
    const std::vector<std::size_t> all = {0, 1, 2, 3};
    CHECK(select_columns(a, all) == a);
    const auto [left, right] = hsplit(a, 1);
    CHECK(left.cols() == 1);
    CHECK(right.cols() == 3);
    const std::vector<std::size_t> drop = {0};
    CHECK(drop_columns(a, drop) == right);
    const FMatrix st = vstack(a, a);
    CHECK(st.rows() == 6);
    CHECK(rank(st) == rank(a));
    const auto row = a.row(1);
    const std::vector<Felt> unit = {f->zero(), f->one(), f->zero()};
    CHECK(vec_mul(unit, a) == row);
}

TEST_CASE("matrix text round trip") {
    oracle::Gen gen(19);
    const FieldPtr f = make_field_of_order(16);
    const FMatrix a = gen.matrix(f, 3, 5);
    std::istringstream in(format_matrix(a));
    CHECK(read_matrix(in) == a);
    CHECK(format_matrix(FMatrix::identity(f, 1)) == "GF(2^4) 1 1\na^0\n");
    std::istringstream bad("GF(2^4) 2 2\na^0 0\n0\n");
    CHECK_RAISES(read_matrix(bad), ErrorCode::ParseError);
}
