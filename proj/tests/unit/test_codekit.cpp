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
#include "hullprop/codekit.hpp"
#include "hullprop/fixtures.hpp"
#include "hullprop/grslab.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace hullprop;

namespace {

std::vector<std::size_t> first(std::size_t s) {
    std::vector<std::size_t> out(s);
    for (std::size_t i = 0; i < s; ++i) out[i] = i;
    return out;
}

void run_property(const char* name, std::string (*prop)(oracle::Gen&, std::uint32_t), int trials) {
    for (std::uint32_t q : {2u, 3u}) {
        oracle::Gen gen(1000 + q);
        for (int t = 0; t < trials; ++t) {
            const std::string failure = prop(gen, q);
            INFO(name, " q=", q, " trial ", t);
            REQUIRE_MESSAGE(failure.empty(), failure);
        }
    }
}

}  // namespace

TEST_CASE("dual: biduality, MDS dual of a GRS code, full space") {
    oracle::Gen gen(21);
    for (int t = 0; t < 30; ++t) {
        const LinearCode c = props::random_code(gen, 2 + t % 2);
        CHECK(dual(dual(c, InnerProduct::Hermitian), InnerProduct::Hermitian) == c);
        CHECK(dual(dual(c, InnerProduct::Euclidean), InnerProduct::Euclidean) == c);
    }
    const LinearCode grs = grs_code(grscon1(2));
    REQUIRE(grs.n() == 4);
    REQUIRE(grs.k() == 2);
    const LinearCode gd = dual(grs, InnerProduct::Hermitian);
    CHECK(gd.k() == 2);
    CHECK(min_distance(gd) == 3);
    CHECK(dual(LinearCode::full(make_field_of_order(4), 4), InnerProduct::Hermitian).k() == 0);
    CHECK_RAISES(dual(LinearCode::full(make_field_of_order(8), 3), InnerProduct::Hermitian),
                 ErrorCode::NotQuadraticExtension);
}

TEST_CASE("hull of the fixture and of the first GRS construction") {
    const LinearCode c = fixture_28_10();
    REQUIRE(c.n() == 28);
    REQUIRE(c.k() == 10);
    CHECK(min_distance(c) == 9);
    HullReport h = hull(c, InnerProduct::Hermitian);
    CHECK(h.ell == 1);
    CHECK(h.hull.k() == 1);
    CHECK(min_distance(h.hull) == 20);
    compute_d2(h);
    CHECK(h.d2 == std::optional<std::size_t>(1));
    CHECK(information_set(h.hull).size() == 1);
    CHECK(information_set(h.hull)[0] == h.hull.pivots()[0]);

    const GrsSpec spec = grscon1(3);
    const LinearCode g = grs_code(spec);
    const HullReport gh = hull(g, InnerProduct::Hermitian);
    CHECK(gh.ell == 2);
    CHECK(gh.hull == grs_code(spec.with_k(2)));

    // A Hermitian self-orthogonal code is its own hull.
    CHECK(hull(gh.hull, InnerProduct::Hermitian).hull == gh.hull);
    CHECK(hull(gh.hull, InnerProduct::Hermitian).ell == gh.hull.k());
}

TEST_CASE("puncture and shorten basics") {
    const LinearCode c = fixture_28_10();
    const std::vector<std::size_t> none;
    CHECK(puncture(c, none) == c);
    CHECK(shorten(c, none) == c);
    const LinearCode sh = shorten(c, first(6));
    CHECK(sh.n() == 22);
    CHECK(sh.k() >= c.k() - 6);
    // Independent count: codewords vanishing on S have dimension k - rank(G[:, S]).
    const oracle::PolyField F(4);
    oracle::Mat cols;
    for (const auto& row : oracle::to_mat(c.generator())) cols.push_back(oracle::Vec(row.begin(), row.begin() + 6));
    CHECK(sh.k() == c.k() - oracle::rank(F, cols));
    const std::vector<std::size_t> bad = {28};
    CHECK_RAISES(puncture(c, bad), ErrorCode::IndexOutOfRange);
}

TEST_CASE("relative minimum weight") {
    const LinearCode grs = grs_code(grscon1(2));
    const HullReport h = hull(grs, InnerProduct::Hermitian);
    const LinearCode gd = dual(grs, InnerProduct::Hermitian);
    const oracle::PolyField F(4);
    const std::size_t expected =
        oracle::relative_weight(F, oracle::to_mat(gd.generator()), oracle::to_mat(h.hull.generator()), 4);
    CHECK(expected == 3);
    CHECK(relative_min_weight(gd, h.hull) == expected);
    CHECK(relative_min_weight(grs, LinearCode::zero(grs.field(), 4)) == min_distance(grs));
    CHECK(relative_min_weight(grs, grs) == kInfiniteWeight);
    GrsSpec rep = grscon1(2).with_k(1);
    CHECK(min_distance(grs_code(rep)) == 4);
    CHECK_RAISES(min_distance(LinearCode::zero(grs.field(), 4)), ErrorCode::NoNonzeroCodewords);
    CHECK_RAISES(relative_min_weight(grs, gd), ErrorCode::NotASubcode);
}

TEST_CASE("min_distance agrees with enumeration") {
    oracle::Gen gen(23);
    for (int t = 0; t < 40; ++t) {
        const std::uint32_t q = 2 + t % 2;
        const LinearCode c = props::random_code(gen, q, 9, 4);
        const oracle::PolyField F(q * q);
        CHECK(min_distance(c) == oracle::min_weight(F, oracle::to_mat(c.generator()), c.n()));
    }
}

TEST_CASE("min_distance respects its budget") {
    try {
        (void)min_distance(fixture_28_10(), 10);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.code() == ErrorCode::BudgetExceeded);
        CHECK(e.lower_bound() <= 9);
    }
}

TEST_CASE("monomial maps") {
    const LinearCode c = fixture_28_10();
    const FieldPtr f = c.field();
    MonomialMap id{first(28), std::vector<Felt>(28, f->one())};
    CHECK(apply_monomial(c, id) == c);
    MonomialMap scale{first(28), std::vector<Felt>(28, f->from_log(1))};
    CHECK(apply_monomial(c, scale) == c);

    // Reversing the coordinates moves the hull pivot accordingly.
    std::vector<std::size_t> rev(28);
    for (std::size_t i = 0; i < 28; ++i) rev[i] = 27 - i;
    MonomialMap flip{rev, std::vector<Felt>(28, f->one())};
    const HullReport h = hull(c, InnerProduct::Hermitian);
    const HullReport hf = hull(apply_monomial(c, flip), InnerProduct::Hermitian);
    CHECK(hf.hull == apply_monomial(h.hull, flip));
    std::size_t last_support = 0;
    for (std::size_t i = 0; i < 28; ++i)
        if (!h.hull.generator().at(0, i).is_zero()) last_support = i;
    CHECK(hf.hull.pivots()[0] == 27 - last_support);
}

TEST_CASE("hull of derived codes on the fixture") {
    const LinearCode c = fixture_28_10();
    const DerivedHullReport sh = hull_of_derived(c, first(6), DeriveMode::Shorten, InnerProduct::Hermitian);
    const DerivedHullReport pu = hull_of_derived(c, first(6), DeriveMode::Puncture, InnerProduct::Hermitian);
    CHECK(sh.shortened_hull.k() == 0);
    CHECK(sh.derived.ell == 1);
    CHECK(pu.derived.ell == 2);
    CHECK_FALSE(sh.in_information_set);
    CHECK(sh.containment_only);

    const std::vector<std::size_t> none;
    const DerivedHullReport same = hull_of_derived(c, none, DeriveMode::Puncture, InnerProduct::Hermitian);
    CHECK(same.derived.hull == hull(c, InnerProduct::Hermitian).hull);
}

TEST_CASE("hull of derived codes inside an information set of the hull") {
    const LinearCode g = grs_code(grscon1(3));
    const HullReport h = hull(g, InnerProduct::Hermitian);
    const std::vector<std::size_t> S = {h.hull.pivots()[0]};
    for (DeriveMode mode : {DeriveMode::Puncture, DeriveMode::Shorten}) {
        const DerivedHullReport r = hull_of_derived(g, S, mode, InnerProduct::Hermitian);
        CHECK(r.in_information_set);
        CHECK_FALSE(r.containment_only);
        CHECK(r.derived.ell == 1);
        CHECK(r.derived.hull == r.shortened_hull);
    }
    // The Gram matrix of the punctured code has rank k - ell + s.
    const LinearCode p = puncture(g, S);
    CHECK(rank(mul(p.generator(), hermitian_transpose(p.generator(), 3))) == g.k() - h.ell + S.size());
}

TEST_CASE("make_lcd") {
    const LinearCode c = fixture_28_10();
    const LinearCode l = make_lcd(c, DeriveMode::Shorten, InnerProduct::Hermitian);
    CHECK(l.n() == 27);
    CHECK(l.k() == 9);
    CHECK(hull(l, InnerProduct::Hermitian).ell == 0);
    CHECK(make_lcd(l, DeriveMode::Puncture, InnerProduct::Hermitian) == l);

    const LinearCode g = grs_code(grscon2(3, 2));
    const LinearCode lp = make_lcd(g, DeriveMode::Puncture, InnerProduct::Hermitian);
    CHECK(lp.n() == g.n() - 1);
    CHECK(hull(lp, InnerProduct::Hermitian).ell == 0);
}

TEST_CASE("code file round trip") {
    const LinearCode c = fixture_28_10();
    std::istringstream in(format_code(c));
    CHECK(read_code(in) == c);
    CHECK(format_code(c).rfind("code GF(2^2) 28 10\n", 0) == 0);
    std::istringstream empty("code GF(2^2) 4 0\n");
    CHECK_RAISES(read_code(empty), ErrorCode::ParseError);
    std::istringstream junk("code GF(2^2) 2 1\na^0 b\n");
    CHECK_RAISES(read_code(junk), ErrorCode::ParseError);
}

TEST_CASE("property: puncture/shorten duality") { run_property("duality", props::duality_pair, 60); }
TEST_CASE("property: derived hulls contain the shortened hull") {
    run_property("containment", props::hull_containment, 60);
}
TEST_CASE("property: derived hulls on a hull information set") {
    run_property("equality", props::hull_equality, 60);
}
TEST_CASE("property: permutation equivariance") {
    run_property("equivariance", props::permutation_equivariance, 60);
}
TEST_CASE("property: derived code parameters") { run_property("parameters", props::derived_parameters, 40); }
TEST_CASE("property: hull dimension from the Gram matrix") {
    run_property("dimension", props::hull_dimension_formula, 60);
}
TEST_CASE("property: shortened difference identity") {
    oracle::Gen gen(29);
    for (int t = 0; t < 40; ++t) {
        const std::string failure = props::shortened_difference(gen, 2);
        REQUIRE_MESSAGE(failure.empty(), failure);
    }
}
TEST_CASE("property: make_lcd yields zero hulls") {
    oracle::Gen gen(31);
    for (int t = 0; t < 20; ++t) {
        for (InnerProduct ip : {InnerProduct::Hermitian, InnerProduct::Euclidean}) {
            for (DeriveMode mode : {DeriveMode::Puncture, DeriveMode::Shorten}) {
                const std::string failure = props::lcd_production(gen, 2 + t % 2, ip, mode);
                REQUIRE_MESSAGE(failure.empty(), failure);
            }
        }
    }
}
