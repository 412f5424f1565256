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

#include "hullprop/galois.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>

namespace hullprop {

namespace {

constexpr std::uint32_t kMaxOrder = 1024;

using Poly = std::vector<std::uint32_t>;  // constant term first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo b over GF(p); b must be monic and nonzero.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = (a[shift + i] + p - (lead * b[i]) % p) % p;
        }
        trim(a);
    }
    return a;
}

// Trial division by every monic polynomial of degree 1..m/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    for (std::size_t d = 1; d <= m / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::uint32_t add_vectors(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    if (p == 2) return a ^ b;
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    while (a > 0 || b > 0) {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    return out;
}

std::atomic<std::uint32_t> g_next_id{1};

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    std::uint64_t p = 2;
    while (n % p != 0) ++p;
    std::uint32_t m = 0;
    while (n % p == 0) {
        n /= p;
        ++m;
    }
    if (n != 1) return std::nullopt;
    return std::make_pair(static_cast<std::uint32_t>(p), m);
}

Field::Field(std::uint32_t p, std::uint32_t m, std::uint32_t id) : p_(p), m_(m), id_(id) {
    if (!is_prime(p)) raise(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (m == 0) raise(ErrorCode::ParameterOutOfRange, "extension degree must be positive");
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        order *= p;
        if (order > kMaxOrder) {
            raise(ErrorCode::FieldTooLarge,
                  "GF(" + std::to_string(p) + "^" + std::to_string(m) + ") exceeds 1024 elements");
        }
    }
    order_ = static_cast<std::uint32_t>(order);
    group_ = static_cast<std::int32_t>(order_ - 1);

    auto poly = conway_polynomial(p, m);
    if (!poly) {
        raise(ErrorCode::NoPolynomialListed,
              "no Conway polynomial listed for GF(" + std::to_string(p) + "^" + std::to_string(m) + ")");
    }
    poly_ = *poly;
    if (!is_irreducible(poly_, p_)) {
        raise(ErrorCode::ContractViolation, "listed polynomial for " + name() + " is reducible");
    }

    antilog_.assign(order_ - 1, 0);
    log_.assign(order_, kZero);
    Poly cur(m_, 0);
    cur[0] = 1;
    auto index_of = [&](const Poly& v) {
        std::uint32_t idx = 0;
        for (std::size_t i = m_; i-- > 0;) idx = idx * p_ + v[i];
        return idx;
    };
    for (std::int32_t e = 0; e < group_; ++e) {
        const std::uint32_t idx = index_of(cur);
        if (log_[idx] != kZero) {
            raise(ErrorCode::ContractViolation, "listed polynomial for " + name() + " is not primitive");
        }
        antilog_[static_cast<std::size_t>(e)] = idx;
        log_[idx] = e;
        // cur <- cur * x mod poly
        const std::uint32_t top = cur[m_ - 1];
        for (std::size_t i = m_ - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            cur[i] = (cur[i] + p_ - (top * poly_[i]) % p_) % p_;
        }
    }

    zech_.assign(order_ - 1, kZero);
    for (std::int32_t d = 0; d < group_; ++d) {
        const std::uint32_t sum = add_vectors(1, antilog_[static_cast<std::size_t>(d)], p_);
        zech_[static_cast<std::size_t>(d)] = log_[sum];
    }
    minus_one_ = (p_ == 2) ? 0 : group_ / 2;
}

std::optional<std::uint32_t> Field::base_order() const noexcept {
    if (m_ % 2 != 0) return std::nullopt;
    std::uint32_t q = 1;
    for (std::uint32_t i = 0; i < m_ / 2; ++i) q *= p_;
    return q;
}

std::string Field::name() const { return "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")"; }

void Field::check(Felt x) const {
    if (x.field_id != id_) raise(ErrorCode::FieldMismatch, "element does not belong to " + name());
    if (x.log < kZero || x.log >= group_) raise(ErrorCode::FieldMismatch, "element exponent out of range");
}

Felt Field::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return {id_, log_[static_cast<std::size_t>(r)]};
}

Felt Field::from_vector_index(std::uint32_t idx) const {
    if (idx >= order_) raise(ErrorCode::IndexOutOfRange, "vector index out of range for " + name());
    return {id_, log_[idx]};
}

std::uint32_t Field::vector_index(Felt x) const {
    check(x);
    return x.is_zero() ? 0 : antilog_[static_cast<std::size_t>(x.log)];
}

std::vector<Felt> Field::elements() const {
    std::vector<Felt> out;
    out.reserve(order_);
    out.push_back(zero());
    for (std::int32_t e = 0; e < group_; ++e) out.push_back({id_, e});
    return out;
}

Felt Field::add(Felt a, Felt b) const {
    check(a);
    check(b);
    return {id_, add_raw(a.log, b.log)};
}

Felt Field::sub(Felt a, Felt b) const {
    check(a);
    check(b);
    return {id_, sub_raw(a.log, b.log)};
}

Felt Field::mul(Felt a, Felt b) const {
    check(a);
    check(b);
    return {id_, mul_raw(a.log, b.log)};
}

Felt Field::inv(Felt a) const {
    check(a);
    if (a.is_zero()) raise(ErrorCode::DivisionByZero, "inverse of zero in " + name());
    return {id_, inv_raw(a.log)};
}

Felt Field::div(Felt a, Felt b) const { return mul(a, inv(b)); }

Felt Field::neg(Felt a) const {
    check(a);
    return {id_, neg_raw(a.log)};
}

Felt Field::pow(Felt a, std::int64_t e) const {
    check(a);
    if (a.is_zero() && e < 0) raise(ErrorCode::DivisionByZero, "negative power of zero");
    return {id_, pow_raw(a.log, e)};
}

Felt Field::frobenius_q(Felt x, std::uint32_t q) const {
    check(x);
    if (static_cast<std::uint64_t>(q) * q != order_) {
        raise(ErrorCode::NotQuadraticExtension, name() + " is not GF(" + std::to_string(q) + "^2)");
    }
    return {id_, pow_raw(x.log, q)};
}

bool Field::in_subfield_of_order(Felt x, std::uint32_t q) const {
    check(x);
    if (x.is_zero()) return true;
    const std::int32_t step = group_ / static_cast<std::int32_t>(q - 1);
    return x.log % step == 0;
}

std::vector<Felt> Field::norm_preimages(Felt x, std::uint32_t q) const {
    check(x);
    if (static_cast<std::uint64_t>(q) * q != order_) {
        raise(ErrorCode::NotQuadraticExtension, name() + " is not GF(" + std::to_string(q) + "^2)");
    }
    if (x.is_zero()) raise(ErrorCode::ZeroArgument, "norm preimage of zero");
    const std::int32_t qp1 = static_cast<std::int32_t>(q + 1);
    if (x.log % qp1 != 0) raise(ErrorCode::NotInBaseField, format(x) + " is not in GF(" + std::to_string(q) + ")");
    const std::int32_t u = x.log / qp1;
    std::vector<Felt> out;
    out.reserve(q + 1);
    for (std::int32_t t = 0; t <= static_cast<std::int32_t>(q); ++t) {
        out.push_back({id_, reduce(u + static_cast<std::int64_t>(t) * (q - 1))});
    }
    std::sort(out.begin(), out.end(), [](Felt a, Felt b) { return a.log < b.log; });
    return out;
}

std::string Field::format(Felt x) const {
    check(x);
    if (x.is_zero()) return "0";
    return "a^" + std::to_string(x.log);
}

Felt Field::parse(std::string_view text) const {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
    if (text == "0") return zero();
    if (text.size() < 3 || text.substr(0, 2) != "a^") {
        raise(ErrorCode::ParseError, "bad element '" + std::string(text) + "', expected 0 or a^k");
    }
    std::int64_t e = -1;
    const auto digits = text.substr(2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || e < 0 || e >= group_) {
        raise(ErrorCode::ParseError, "bad exponent in '" + std::string(text) + "' for " + name());
    }
    return {id_, static_cast<Log>(e)};
}

FieldPtr make_field(std::uint32_t p, std::uint32_t m) {
    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> registry;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = registry.find({p, m});
    if (it != registry.end()) return it->second;
    auto field = std::make_shared<const Field>(p, m, g_next_id.fetch_add(1));
    registry.emplace(std::make_pair(p, m), field);
    return field;
}

FieldPtr make_field_of_order(std::uint32_t order) {
    auto pm = prime_power(order);
    if (!pm) raise(ErrorCode::NotPrime, std::to_string(order) + " is not a prime power");
    return make_field(pm->first, pm->second);
}

FieldPtr make_quadratic_field(std::uint32_t q) {
    auto pm = prime_power(q);
    if (!pm) raise(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
    return make_field(pm->first, 2 * pm->second);
}

FieldPtr parse_field_name(std::string_view text) {
    auto fail = [&]() -> FieldPtr {
        raise(ErrorCode::ParseError, "bad field name '" + std::string(text) + "', expected GF(p^m)");
    };
    if (text.size() < 5 || text.substr(0, 3) != "GF(" || text.back() != ')') return fail();
    auto body = text.substr(3, text.size() - 4);
    std::uint32_t p = 0;
    std::uint32_t m = 1;
    auto caret = body.find('^');
    auto pstr = body.substr(0, caret);
    auto [pp, pe] = std::from_chars(pstr.data(), pstr.data() + pstr.size(), p);
    if (pe != std::errc() || pp != pstr.data() + pstr.size()) return fail();
    if (caret != std::string_view::npos) {
        auto mstr = body.substr(caret + 1);
        auto [mp, me] = std::from_chars(mstr.data(), mstr.data() + mstr.size(), m);
        if (me != std::errc() || mp != mstr.data() + mstr.size()) return fail();
    }
    return make_field(p, m);
}

SubfieldEmbedding::SubfieldEmbedding(FieldPtr big, FieldPtr small) : big_(std::move(big)), small_(std::move(small)) {
    if (big_->characteristic() != small_->characteristic() || big_->degree() % small_->degree() != 0) {
        raise(ErrorCode::FieldMismatch, small_->name() + " is not a subfield of " + big_->name());
    }
    ratio_ = static_cast<std::int32_t>((big_->order() - 1) / (small_->order() - 1));
    // The small field's defining polynomial must vanish at big_alpha^ratio.
    Field::Log acc = Field::kZero;
    const auto& poly = small_->prim_poly();
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Field::Log coeff = big_->from_int(poly[i]).log;
        acc = big_->add_raw(acc, big_->mul_raw(coeff, big_->reduce(static_cast<std::int64_t>(ratio_) * i)));
    }
    if (acc != Field::kZero) {
        raise(ErrorCode::ContractViolation,
              "defining polynomials of " + small_->name() + " and " + big_->name() + " are not compatible");
    }
}

Felt SubfieldEmbedding::lift(Felt x) const {
    small_->check(x);
    if (x.is_zero()) return big_->zero();
    return big_->from_log(static_cast<std::int64_t>(x.log) * ratio_);
}

bool SubfieldEmbedding::contains(Felt x) const {
    big_->check(x);
    return x.is_zero() || x.log % ratio_ == 0;
}

Felt SubfieldEmbedding::restrict(Felt x) const {
    if (!contains(x)) raise(ErrorCode::NotInSubfield, big_->format(x) + " is not in " + small_->name());
    if (x.is_zero()) return small_->zero();
    return small_->from_log(x.log / ratio_);
}

}  // namespace hullprop
