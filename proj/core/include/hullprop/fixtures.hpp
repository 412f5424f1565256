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

#include "hullprop/codekit.hpp"

namespace hullprop {

/// The [28,10,9] code over GF(4) = {0, 1, w, w^2} (w^2 + w + 1 = 0) whose
/// Hermitian hull does not commute with puncturing or shortening on the first
/// six coordinates. Its hull is [28,1,20] and the hull's dual is [28,27,1].
LinearCode fixture_28_10();

/// Known dimensions for S = {0..5}: the shortened hull, the hull of the
/// shortened code and the hull of the punctured code.
struct FixtureExpectation {
    std::size_t n = 28, k = 10, d = 9;
    std::size_t hull_dim = 1, hull_d = 20, hull_dual_d = 1;
    std::size_t shortened_hull_dim = 0, hull_of_shortened_dim = 1, hull_of_punctured_dim = 2;
};

}  // namespace hullprop
