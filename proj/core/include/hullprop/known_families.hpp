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

#include <string>
#include <vector>

#include "hullprop/qparams.hpp"

namespace hullprop {

/// A published family whose parameter pattern a record fits.
struct KnownMatch {
    int table = 0;  // 3: EAQECCs with one entangled pair, 4: subsystem codes
    int row = 0;
    std::string pattern;
    std::string constraints;
};

/// Matches against the reference list of optimal [[n,κ,δ;1]]_q families.
/// Records with c != 1 never match.
std::vector<KnownMatch> compare_known(const EaqeccParams& p);
/// Matches against the reference list of optimal subsystem code families.
std::vector<KnownMatch> compare_known(const SubsystemParams& p);

/// "table 3 row 6: n = q^2-1, ..." lines, or "no known-family match".
std::string describe_matches(const std::vector<KnownMatch>& matches);

}  // namespace hullprop
