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
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hullprop/fmatrix.hpp"
#include "hullprop/galois.hpp"

namespace hullprop {

enum class InnerProduct { Euclidean, Hermitian };
enum class DeriveMode { Puncture, Shorten };

std::string_view to_string(InnerProduct ip);
std::string_view to_string(DeriveMode mode);

/// A linear [n, k] code stored by its canonical RREF generator matrix, so two
/// codes are equal exactly when their generators are identical.
class LinearCode {
public:
    /// Row space of `generator`; the rows need not be independent.
    explicit LinearCode(const FMatrix& generator);

    static LinearCode zero(FieldPtr field, std::size_t n);
    static LinearCode full(FieldPtr field, std::size_t n);

    const FieldPtr& field() const noexcept { return gen_.field(); }
    std::size_t n() const noexcept { return gen_.cols(); }
    std::size_t k() const noexcept { return gen_.rows(); }
    const FMatrix& generator() const noexcept { return gen_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(std::span<const Felt> v) const;
    /// Membership by back-substitution against the RREF rows.
    bool contains_raw(std::span<const Field::Log> v) const;
    bool contains(const LinearCode& sub) const;

    friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.gen_ == b.gen_; }

private:
    FMatrix gen_;
    std::vector<std::size_t> pivots_;
};

struct HullReport {
    LinearCode hull;
    std::size_t ell = 0;
    /// Minimum distance of the dual of the hull; filled by compute_d2().
    std::optional<std::size_t> d2;
    InnerProduct inner_product = InnerProduct::Hermitian;
};

/// rho_a: coordinate i of the image is scalars[i] * c[perm[i]].
struct MonomialMap {
    std::vector<std::size_t> perm;
    std::vector<Felt> scalars;
};

struct DerivedHullReport {
    HullReport derived;          // hull of the punctured or shortened code
    LinearCode shortened_hull;   // (Hull(C))_S
    bool in_information_set;     // S extends to an information set of Hull(C)
    bool containment_only;       // precondition failed; only (Hull(C))_S <= Hull(derived) was asserted
};

/// q with field order q^2; throws NotQuadraticExtension otherwise.
std::uint32_t hermitian_base(const Field& field);

LinearCode dual(const LinearCode& c, InnerProduct ip);
/// Hull C ∩ C^perp; ell = k - rank(G G^dagger) (or G G^T).
HullReport hull(const LinearCode& c, InnerProduct ip);
LinearCode intersect(const LinearCode& a, const LinearCode& b);

/// Sorted, deduplicated copy of S; IndexOutOfRange if any index >= n.
std::vector<std::size_t> normalize_index_set(std::span<const std::size_t> s, std::size_t n);
LinearCode puncture(const LinearCode& c, std::span<const std::size_t> s);
LinearCode shorten(const LinearCode& c, std::span<const std::size_t> s);
LinearCode derive(const LinearCode& c, std::span<const std::size_t> s, DeriveMode mode);

/// Leftmost information set: the RREF pivots.
std::vector<std::size_t> information_set(const LinearCode& c);
/// True when the columns of c's generator indexed by S are independent.
bool extends_to_information_set(const LinearCode& c, std::span<const std::size_t> s);

LinearCode apply_monomial(const LinearCode& c, const MonomialMap& m);

/// Hull of C^S or C_S, checked against (Hull(C))_S: equality with dimension
/// ell - s when S extends to an information set of the hull, containment
/// otherwise. A failed check raises ContractViolation.
DerivedHullReport hull_of_derived(const LinearCode& c, std::span<const std::size_t> s, DeriveMode mode,
                                  InnerProduct ip);

/// Derives on a full information set of the hull, yielding an LCD code.
LinearCode make_lcd(const LinearCode& c, DeriveMode mode, InnerProduct ip);

// Weights ------------------------------------------------------------------

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;
inline constexpr std::size_t kInfiniteWeight = std::numeric_limits<std::size_t>::max();

/// Exact minimum distance. NoNonzeroCodewords for k == 0, BudgetExceeded
/// when neither enumeration strategy fits in `budget` evaluations.
std::size_t min_distance(const LinearCode& c, std::uint64_t budget = kDefaultBudget);

/// min wt(A \ B) for B a subcode of A; kInfiniteWeight when A == B.
std::size_t relative_min_weight(const LinearCode& a, const LinearCode& b, std::uint64_t budget = kDefaultBudget);

/// Fills report.d2 with the minimum distance of the dual of the hull.
void compute_d2(HullReport& report, std::uint64_t budget = kDefaultBudget);

std::size_t weight(std::span<const Felt> v);

// Code files ----------------------------------------------------------------

/// "code GF(p^m) n k" followed by the generator in matrix text format.
std::string format_code(const LinearCode& c);
void write_code(std::ostream& out, const LinearCode& c);
/// ParseError on malformed input, a rank-deficient generator, or k == 0.
LinearCode read_code(std::istream& in);

}  // namespace hullprop
