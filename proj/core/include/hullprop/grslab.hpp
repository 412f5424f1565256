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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hullprop/codekit.hpp"

namespace hullprop {

/// GRS_k(b, a): evaluations (a_1 f(b_1), ..., a_n f(b_n)) of polynomials of
/// degree below k. Points must be distinct and multipliers nonzero.
struct GrsSpec {
    FieldPtr field;
    std::size_t k = 0;
    std::vector<Felt> b;
    std::vector<Felt> a;
    std::string label;

    std::size_t n() const noexcept { return b.size(); }
    GrsSpec with_k(std::size_t new_k) const;
};

/// Rows (a_i b_i^t)_i for t < k. k may be 0 (the zero code).
LinearCode grs_code(const GrsSpec& spec);
void validate_grs(const GrsSpec& spec);

/// E(D_{k,ell}): the extended cyclic code over GF(q) of length q^2 whose
/// cyclic part has the defining set below (reduced mod q^2 - 1, sorted).
struct ExtCyclicSpec {
    std::uint32_t q = 0;
    std::size_t k = 0;
    std::size_t ell = 0;
    std::vector<std::uint32_t> defining_set;
};

/// Requires 0 <= ell <= k <= q and k >= 1.
ExtCyclicSpec make_ext_cyclic_spec(std::uint32_t q, std::size_t k, std::size_t ell);
/// Nullspace of the all-ones row (present when ell >= 1) and the rows
/// (alpha^(s u))_u followed by 0.
LinearCode build_ext_cyclic(const ExtCyclicSpec& spec);
/// The parity-check matrix used by build_ext_cyclic, over GF(q^2).
FMatrix ext_cyclic_parity_check(const ExtCyclicSpec& spec);

/// Coefficients of the trace form of a codeword in E(D_{k,k-1}) minus
/// E(D_{k,k}). diag[t - (k-1)] holds theta_{t,t} in GF(q) for t in
/// [k-1, q-1]; off holds theta_{i,j} in GF(q^2) for (i,j) in T (absent = 0).
struct TraceAssignment {
    std::vector<Felt> diag;
    std::map<std::pair<std::size_t, std::size_t>, Felt> off;
};

/// T = union over i in [k, q-1] of {(i, j) : j in [0, k-1] or [i+1, q-1]}.
std::vector<std::pair<std::size_t, std::size_t>> trace_index_set(std::uint32_t q, std::size_t k);
/// All-zero assignment with theta_{k-1,k-1} = 1.
TraceAssignment unit_assignment(std::uint32_t q, std::size_t k);

/// (c_0, ..., c_{q^2-2}, c_ext) over GF(q) with
///   c_r = sum_t theta_tt alpha^(-r t (q+1)) + sum_T Tr(theta_ij alpha^(-r(i+qj))).
/// The extension coordinate makes the full sum vanish, so
/// c_ext = -sum_r c_r = theta_{q-1,q-1}; both facts are checked.
/// Requires 1 <= k < q.
std::vector<Felt> trace_codeword(std::uint32_t q, std::size_t k, const TraceAssignment& theta);

/// Hartmann-Tzeng lower bound for a cyclic code of length n with the given
/// defining set. Without `search` only the consecutive-run (BCH) form is
/// tried.
std::size_t ht_bound(const std::vector<std::uint32_t>& defining_set, std::size_t n, bool search = true);

/// P(C) = {a in GF(q)^n : sum a_i u_i v_i^q = 0 for all u, v in C}.
LinearCode rains_p(const LinearCode& c);
/// Same with u ranging over `inner` and v over `outer`.
LinearCode rains_p_pair(const LinearCode& inner, const LinearCode& outer);

/// Turns x in E(D_{k,k-1}) \ E(D_{k,k}) into a GRS spec of length wt(x)
/// whose Hermitian hull is its own (k-1)-dimensional GRS subcode. Each
/// multiplier is the smallest-exponent solution of a^(q+1) = x_i, unless
/// `preimage_choice` selects another one (index into the sorted list, per
/// coordinate of the support).
GrsSpec hull_mds_from_codeword(std::uint32_t q, std::size_t k, const std::vector<Felt>& x,
                               const std::vector<std::size_t>* preimage_choice = nullptr);

/// True when hull(GRS_k) == GRS_{k-1} for this spec (Hermitian).
bool has_mds_hull(const GrsSpec& spec);

GrsSpec grscon1(std::uint32_t q);
GrsSpec grscon2(std::uint32_t q, std::size_t k);
GrsSpec grscon3(std::uint32_t q, std::size_t k);
GrsSpec grscon4(std::uint32_t q, std::size_t k, std::size_t m);

/// Assignment of the named GRScon3 / GRScon4 codewords.
TraceAssignment grscon3_assignment(std::uint32_t q, std::size_t k);
TraceAssignment grscon4_assignment(std::uint32_t q, std::size_t k, std::size_t m);

/// Scans assignments in lexicographic order for a trace codeword of weight m.
/// BudgetExceeded once `budget` assignments were tried without success.
std::optional<TraceAssignment> find_assignment_of_weight(std::uint32_t q, std::size_t k, std::size_t m,
                                                         std::uint64_t budget);

/// A code built from a textual description.
struct Construction {
    LinearCode code;
    std::optional<GrsSpec> grs;
    std::string label;
};

/// Accepted forms:
///   grscon1 q=Q | grscon2 q=Q k=K | grscon3 q=Q k=K | grscon4 q=Q k=K m=M
///   grs GF(p^m) k=K b=x,y,... a=x,y,...
///   ext q=Q k=K ell=L
///   fixture28
Construction construct_from_string(std::string_view text);
/// Explicit "grs" form of a spec, accepted back by construct_from_string.
std::string format_grs_spec(const GrsSpec& spec);

}  // namespace hullprop
