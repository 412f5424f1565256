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

#include "hullprop/fixtures.hpp"

#include <array>
#include <sstream>
#include <string>

namespace hullprop {
namespace {

// Rows as printed, with '&' between entries and w a root of x^2 + x + 1.
constexpr std::array<const char*, 10> kRows = {
    "1&0&0&0&0&0&0&0&w&0&0&1&0&w^2&w&w^2&w&w^2&0&0&0&w^2&w&w^2&1&w&1&w",
    "0&1&0&0&0&0&0&0&1&0&0&1&w&w&w^2&w&1&1&w^2&w^2&w&0&1&0&1&w&1&1",
    "0&0&1&0&0&0&0&0&w&0&0&w^2&w&w&w&1&0&w&w&w&1&w&1&w&w^2&1&1&0",
    "0&0&0&1&0&0&0&0&w&0&0&w&1&w^2&w&w&0&0&w^2&w&w&0&0&w^2&w&1&w&w^2",
    "0&0&0&0&1&0&0&0&1&0&0&w&w^2&0&1&1&0&1&0&1&1&0&w^2&1&0&w&1&w",
    "0&0&0&0&0&1&0&0&w&0&0&0&1&w^2&0&1&w^2&0&w&w^2&w^2&w&1&w^2&w&w&w^2&w^2",
    "0&0&0&0&0&0&1&0&w&0&0&1&0&w^2&w^2&1&w^2&w^2&w&0&0&w&w&0&w^2&w&0&w",
    "0&0&0&0&0&0&0&1&w&0&0&0&w^2&w&1&w^2&0&0&w^2&w&w&w^2&0&w^2&w&0&0&w^2",
    "0&0&0&0&0&0&0&0&0&1&0&1&w&1&w^2&0&w&1&1&1&0&w^2&w&w&w&w^2&w^2&w",
    "0&0&0&0&0&0&0&0&0&0&1&0&w&w^2&w&w&w&w^2&0&w^2&w&w^2&1&1&1&w&w^2&w",
};

}  // namespace

LinearCode fixture_28_10() {
    // The Conway polynomial for GF(4) is x^2 + x + 1, so alpha plays w.
    FieldPtr f = make_field(2, 2);
    FMatrix g(f, kRows.size(), 28);
    for (std::size_t r = 0; r < kRows.size(); ++r) {
        std::istringstream in(kRows[r]);
        std::string tok;
        std::size_t c = 0;
        while (std::getline(in, tok, '&')) {
            Felt x = f->zero();
            if (tok == "1") x = f->one();
            else if (tok == "w") x = f->from_log(1);
            else if (tok == "w^2") x = f->from_log(2);
            else if (tok != "0") raise(ErrorCode::ContractViolation, "bad fixture token " + tok);
            g.set(r, c++, x);
        }
        if (c != 28) raise(ErrorCode::ContractViolation, "fixture row has wrong length");
    }
    return LinearCode(g);
}

}  // namespace hullprop
