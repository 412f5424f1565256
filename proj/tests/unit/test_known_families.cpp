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

#include <algorithm>

#include "doctest.h"
#include "hullprop/known_families.hpp"

using namespace hullprop;

namespace {

EaqeccParams ea(std::uint32_t q, std::size_t n, std::size_t kappa, std::size_t delta, std::size_t c) {
    EaqeccParams p;
    p.q = q;
    p.n = n;
    p.kappa = kappa;
    p.delta_exact = delta;
    p.delta_lower = delta;
    p.c = c;
    return p;
}

SubsystemParams sub(std::uint32_t q, std::size_t n, std::size_t kappa, std::size_t r, std::size_t delta) {
    SubsystemParams p;
    p.q = q;
    p.n = n;
    p.kappa = kappa;
    p.r = r;
    p.delta_exact = delta;
    p.delta_lower = delta;
    return p;
}

bool has(const std::vector<KnownMatch>& v, int table, int row) {
    return std::any_of(v.begin(), v.end(), [&](const KnownMatch& m) { return m.table == table && m.row == row; });
}

}  // namespace

TEST_CASE("length q^2 - 1 family with one entangled pair") {
    for (std::uint32_t q : {3u, 4u, 5u, 7u}) {
        for (std::size_t k = 2; k <= 2 * q - 2; ++k) {
            CAPTURE(q);
            CAPTURE(k);
            CHECK(has(compare_known(ea(q, q * q - 1, q * q - 2 * k + 2, k, 1)), 3, 6));
        }
    }
    // Out of the k range.
    CHECK_FALSE(has(compare_known(ea(3, 8, 9 - 14 + 2 + 100, 7, 1)), 3, 6));
    // Two entangled pairs never match the list.
    CHECK(compare_known(ea(3, 8, 7, 2, 2)).empty());
}

TEST_CASE("subsystem family of length 2^(2m) + 1") {
    for (std::uint32_t q : {2u, 4u, 8u, 16u}) {
        CAPTURE(q);
        CHECK(has(compare_known(sub(q, q * q + 1, (q - 1) * (q - 1), 4, q - 1)), 4, 3));
    }
    CHECK_FALSE(has(compare_known(sub(3, 10, 4, 4, 2)), 4, 3));
}

TEST_CASE("unmatched records") {
    const auto none = compare_known(ea(2, 100, 1, 1, 1));
    CHECK(none.empty());
    CHECK(describe_matches(none) == "no known-family match\n");
    const auto some = compare_known(ea(3, 8, 5, 3, 1));
    REQUIRE_FALSE(some.empty());
    CHECK(describe_matches(some).rfind("table 3 row ", 0) == 0);
}
