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
#include <string_view>
#include <vector>

#include "hullprop/codekit.hpp"

namespace hullprop {

enum class Tri { No, Yes, Unknown };
std::string_view to_string(Tri t);

/// [[n, kappa, delta; c]]_q from a code over GF(q^2).
struct EaqeccParams {
    std::uint32_t q = 0;
    std::size_t n = 0;
    std::size_t kappa = 0;
    std::size_t c = 0;
    std::size_t delta_lower = 0;
    std::optional<std::size_t> delta_exact;
    Tri pure = Tri::Unknown;
    std::vector<std::string> provenance;

    std::size_t delta() const noexcept { return delta_exact.value_or(delta_lower); }
};

/// [[n, kappa, r, delta]]_q from a code over GF(q^2).
struct SubsystemParams {
    std::uint32_t q = 0;
    std::size_t n = 0;
    std::size_t kappa = 0;
    std::size_t r = 0;
    std::size_t delta_lower = 0;
    std::optional<std::size_t> delta_exact;
    Tri pure = Tri::Unknown;
    std::vector<std::string> provenance;

    std::size_t delta() const noexcept { return delta_exact.value_or(delta_lower); }
};

enum class BoundId { EA1, EA2, EA3, EAQMDS, SubSingleton };
std::string_view to_string(BoundId id);

/// `slack` is rhs - lhs of the bound in integer form. EA-3 is compared after
/// clearing its (positive) denominator, so its slack is scaled by 3δ-3-n.
/// Without an exact δ, `tight` is Unknown and `satisfied` is evaluated at the
/// certified lower bound.
struct BoundVerdict {
    BoundId id;
    bool satisfied;
    Tri tight;
    long long slack;
};

/// Hermitian construction: c = k - ell, kappa = n - 2k + c,
/// delta = wt(C^perp \ Hull). Errors: NoDual (k == n), NoLogicalQudits
/// (C^perp == Hull), NotQuadraticExtension.
EaqeccParams eaqecc_from_code(const LinearCode& code, std::uint64_t budget = kDefaultBudget,
                              std::string_view label = "code");
/// The two codes obtained from C and from C^perp.
std::pair<EaqeccParams, EaqeccParams> eaqecc_pair(const LinearCode& code, std::uint64_t budget = kDefaultBudget);

/// kappa = n - k - ell, r = k - ell, delta = wt(Hull^perp \ C). Requires
/// k + ell < n (DimensionConstraintViolated otherwise).
SubsystemParams subsystem_from_code(const LinearCode& code, std::uint64_t budget = kDefaultBudget,
                                    std::string_view label = "code");

std::vector<BoundVerdict> check_bounds(const EaqeccParams& p);
std::vector<BoundVerdict> check_bounds(const SubsystemParams& p);

/// Equality in 2δ <= n + c - κ + 2.
Tri is_optimal(const EaqeccParams& p);
/// Equality in κ + r <= n - 2δ + 2.
Tri is_optimal(const SubsystemParams& p);
/// Equality in EA-1 when δ <= n/2, in EA-3 when δ - 1 >= n/2; No otherwise.
Tri is_qmds(const EaqeccParams& p);

struct PropagationOptions {
    std::uint64_t budget = kDefaultBudget;
    /// Coordinates to remove; defaults to the first s pivots of the hull.
    std::optional<std::vector<std::size_t>> coordinates;
    /// Lets the shorten rule run on an impure source. The output then carries
    /// no distance guarantee beyond what was computed for it directly.
    bool unsafe = false;
};

/// Puncture: [[n-s, κ, >=δ; c+s]]. Shorten (pure source): [[n-s, κ+s, >=δ-s; c]].
/// Every contract is asserted; a failure raises ContractViolation.
/// Errors: SOutOfRange (s > ell), PurityRequired, ParameterOutOfRange
/// (coordinates not inside an information set of the hull).
EaqeccParams propagate_eaqecc(const LinearCode& code, std::size_t s, DeriveMode mode,
                              const PropagationOptions& opts = {});

/// Puncture: [[n-s, κ, r+s, >=δ-s]]. Shorten (pure source): [[n-s, κ+s, r, >=δ-s]].
SubsystemParams propagate_subsystem(const LinearCode& code, std::size_t s, DeriveMode mode,
                                    const PropagationOptions& opts = {});

/// Default coordinate choice for propagation: the first s hull pivots.
std::vector<std::size_t> default_propagation_set(const LinearCode& code, std::size_t s);

/// "[[n,κ,δ;c]]_q", with ">=" before δ when it is only a lower bound.
std::string format_params(const EaqeccParams& p);
/// "[[n,κ,r,δ]]_q".
std::string format_params(const SubsystemParams& p);

/// Stable JSON record, e.g. {"type":"eaqecc","q":2,"n":4,...}.
std::string to_json(const EaqeccParams& p);
std::string to_json(const SubsystemParams& p);

}  // namespace hullprop
