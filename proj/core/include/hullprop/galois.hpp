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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hullprop/error.hpp"

namespace hullprop {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A field element in discrete-log form: either zero or alpha^log.
/// `field_id` ties the element to the Field that produced it.
struct Felt {
    std::uint32_t field_id = 0;
    std::int32_t log = -1;

    bool is_zero() const noexcept { return log < 0; }
    friend bool operator==(const Felt&, const Felt&) = default;
};

/// GF(p^m) for p^m <= 1024, built from a fixed Conway polynomial so that the
/// primitive element alpha (and therefore every "a^k" label) is canonical.
///
/// Elements have two encodings: the discrete log (alpha^e, or kZero) and the
/// vector index sum_i c_i p^i of the coefficient vector of the polynomial
/// residue. Addition runs through a Zech-logarithm table built once.
///
/// Instances are immutable and shared; obtain them through make_field().
class Field {
public:
    using Log = std::int32_t;
    static constexpr Log kZero = -1;

    Field(std::uint32_t p, std::uint32_t m, std::uint32_t id);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return m_; }
    std::uint32_t order() const noexcept { return order_; }
    std::uint32_t id() const noexcept { return id_; }
    /// Coefficients of the defining polynomial, constant term first, monic.
    const std::vector<std::uint32_t>& prim_poly() const noexcept { return poly_; }
    /// vector index -> log (index 0 maps to kZero).
    const std::vector<Log>& log_table() const noexcept { return log_; }
    /// log -> vector index, length order-1.
    const std::vector<std::uint32_t>& antilog_table() const noexcept { return antilog_; }
    /// q such that order == q^2, if the degree is even.
    std::optional<std::uint32_t> base_order() const noexcept;
    /// "GF(p^m)".
    std::string name() const;

    Felt zero() const noexcept { return {id_, kZero}; }
    Felt one() const noexcept { return {id_, 0}; }
    Felt from_log(std::int64_t e) const noexcept { return {id_, reduce(e)}; }
    /// Wraps a raw log (kZero or [0, order-2]) without reduction.
    Felt wrap(Log raw) const noexcept { return {id_, raw}; }
    /// Image of an integer in the prime subfield.
    Felt from_int(std::int64_t v) const;
    Felt from_vector_index(std::uint32_t idx) const;
    std::uint32_t vector_index(Felt x) const;
    std::vector<Felt> elements() const;

    Felt add(Felt a, Felt b) const;
    Felt sub(Felt a, Felt b) const;
    Felt mul(Felt a, Felt b) const;
    Felt div(Felt a, Felt b) const;
    Felt inv(Felt a) const;
    Felt neg(Felt a) const;
    Felt pow(Felt a, std::int64_t e) const;

    /// x -> x^q. Requires order == q^2.
    Felt frobenius_q(Felt x, std::uint32_t q) const;
    /// All a with a^(q+1) == x, sorted by exponent. Requires x in GF(q)*.
    std::vector<Felt> norm_preimages(Felt x, std::uint32_t q) const;
    bool in_subfield_of_order(Felt x, std::uint32_t q) const;

    std::string format(Felt x) const;
    Felt parse(std::string_view text) const;

    // Unchecked log-domain arithmetic for inner loops. Inputs must be valid
    // logs of this field (kZero or [0, order-2]).
    Log add_raw(Log a, Log b) const noexcept {
        if (a < 0) return b;
        if (b < 0) return a;
        Log d = b - a;
        if (d < 0) d += group_;
        const Log z = zech_[static_cast<std::size_t>(d)];
        if (z < 0) return kZero;
        Log r = a + z;
        return r >= group_ ? r - group_ : r;
    }
    Log mul_raw(Log a, Log b) const noexcept {
        if (a < 0 || b < 0) return kZero;
        Log r = a + b;
        return r >= group_ ? r - group_ : r;
    }
    Log neg_raw(Log a) const noexcept { return mul_raw(a, minus_one_); }
    Log sub_raw(Log a, Log b) const noexcept { return add_raw(a, neg_raw(b)); }
    Log inv_raw(Log a) const noexcept { return a == 0 ? 0 : group_ - a; }
    Log pow_raw(Log a, std::int64_t e) const noexcept {
        if (a < 0) return e == 0 ? 0 : kZero;
        return reduce(static_cast<std::int64_t>(a) * e);
    }
    Log reduce(std::int64_t e) const noexcept {
        const std::int64_t r = e % group_;
        return static_cast<Log>(r < 0 ? r + group_ : r);
    }
    Log minus_one() const noexcept { return minus_one_; }

    /// Throws FieldMismatch unless x belongs to this field.
    void check(Felt x) const;

private:
    std::uint32_t p_;
    std::uint32_t m_;
    std::uint32_t order_;
    std::int32_t group_;  // order - 1
    std::uint32_t id_;
    Log minus_one_;
    std::vector<std::uint32_t> poly_;
    std::vector<Log> log_;
    std::vector<std::uint32_t> antilog_;
    std::vector<Log> zech_;
};

/// Shared, canonical GF(p^m). Repeated calls return the same instance.
/// Errors: NotPrime, FieldTooLarge, NoPolynomialListed.
FieldPtr make_field(std::uint32_t p, std::uint32_t m);
/// GF(order) for a prime power order.
FieldPtr make_field_of_order(std::uint32_t order);
/// GF(q^2), the home of Hermitian algebra over base order q.
FieldPtr make_quadratic_field(std::uint32_t q);
/// Parses "GF(p^m)" or "GF(p)".
FieldPtr parse_field_name(std::string_view text);

/// Conway polynomial for GF(p^m), constant term first; nullopt if not listed.
std::optional<std::vector<std::uint32_t>> conway_polynomial(std::uint32_t p, std::uint32_t m);

bool is_prime(std::uint64_t n);
/// (p, m) with p^m == n, or nullopt when n is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t n);

/// Canonical inclusion GF(p^d) -> GF(p^m) for d | m, sending the small
/// field's alpha to big_alpha^((p^m-1)/(p^d-1)). Conway compatibility makes
/// this a field homomorphism; the constructor checks that it is.
class SubfieldEmbedding {
public:
    SubfieldEmbedding(FieldPtr big, FieldPtr small);

    const FieldPtr& big() const noexcept { return big_; }
    const FieldPtr& small() const noexcept { return small_; }

    Felt lift(Felt x) const;
    /// Throws NotInSubfield if x is outside the image.
    Felt restrict(Felt x) const;
    bool contains(Felt x) const;

private:
    FieldPtr big_;
    FieldPtr small_;
    std::int32_t ratio_;
};

}  // namespace hullprop
