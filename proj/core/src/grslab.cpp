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

#include "hullprop/grslab.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "hullprop/fixtures.hpp"

namespace hullprop {
namespace {

using Log = Field::Log;

std::uint32_t group_order(std::uint32_t q) { return q * q - 1; }

FieldPtr base_field(std::uint32_t q) { return make_field_of_order(q); }

FMatrix restrict_matrix(const FMatrix& m, const SubfieldEmbedding& emb) {
    FMatrix out(emb.small(), m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (!emb.contains(m.at(r, c))) {
                raise(ErrorCode::ContractViolation, "expected a basis defined over " + emb.small()->name());
            }
            out.set(r, c, emb.restrict(m.at(r, c)));
        }
    }
    return out;
}

// Evaluation points (alpha^0, ..., alpha^(q^2-2)) optionally followed by 0.
std::vector<Felt> standard_points(const Field& f, bool with_zero) {
    std::vector<Felt> b;
    for (std::uint32_t i = 0; i + 1 < f.order(); ++i) b.push_back(f.from_log(i));
    if (with_zero) b.push_back(f.zero());
    return b;
}

GrsSpec verified(GrsSpec spec) {
    if (!has_mds_hull(spec)) {
        raise(ErrorCode::ContractViolation, spec.label + ": Hermitian hull is not GRS_{k-1}");
    }
    return spec;
}

Felt smallest_norm_preimage(const Field& f2, Felt x, std::uint32_t q) {
    if (x.is_zero()) raise(ErrorCode::NormUnsolvable, "a^(q+1) = 0 has no nonzero solution");
    try {
        return f2.norm_preimages(x, q).front();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotInBaseField) raise(ErrorCode::NormUnsolvable, e.what());
        throw;
    }
}

// Coordinates ell in [1, q^2-2] with period ∤ ell, in increasing order.
std::vector<std::uint32_t> coset_complement(std::uint32_t q, std::uint32_t period) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t l = 1; l + 1 < q * q; ++l) {
        if (l % period != 0) out.push_back(l);
    }
    return out;
}

void require_prime_power(std::uint32_t q) {
    if (q < 2 || !prime_power(q)) raise(ErrorCode::ParameterOutOfRange, std::to_string(q) + " is not a prime power");
}

}  // namespace

GrsSpec GrsSpec::with_k(std::size_t new_k) const {
    GrsSpec s = *this;
    s.k = new_k;
    return s;
}

void validate_grs(const GrsSpec& spec) {
    if (!spec.field) raise(ErrorCode::ContractViolation, "GRS spec without a field");
    if (spec.a.size() != spec.b.size()) raise(ErrorCode::LengthMismatch, "|a| differs from |b|");
    if (spec.k > spec.n()) raise(ErrorCode::ParameterOutOfRange, "GRS dimension exceeds length");
    const Field& f = *spec.field;
    std::set<Log> seen;
    for (const Felt& x : spec.b) {
        f.check(x);
        if (!seen.insert(x.log).second) raise(ErrorCode::DuplicateEvaluationPoints, "repeated point " + f.format(x));
    }
    for (const Felt& x : spec.a) {
        f.check(x);
        if (x.is_zero()) raise(ErrorCode::ZeroMultiplier, "GRS multiplier is zero");
    }
}

LinearCode grs_code(const GrsSpec& spec) {
    validate_grs(spec);
    const Field& f = *spec.field;
    FMatrix g(spec.field, spec.k, spec.n());
    for (std::size_t t = 0; t < spec.k; ++t) {
        for (std::size_t i = 0; i < spec.n(); ++i) {
            g.raw(t, i) = f.mul_raw(spec.a[i].log, f.pow_raw(spec.b[i].log, static_cast<std::int64_t>(t)));
        }
    }
    return LinearCode(g);
}

ExtCyclicSpec make_ext_cyclic_spec(std::uint32_t q, std::size_t k, std::size_t ell) {
    require_prime_power(q);
    if (k < 1 || k > q || ell > k) {
        raise(ErrorCode::ParameterOutOfRange, "E(D_{k,ell}) needs 0 <= ell <= k <= q and k >= 1");
    }
    const std::uint32_t n = group_order(q);
    std::set<std::uint32_t> d;
    auto put = [&](std::size_t i, std::size_t j) { d.insert(static_cast<std::uint32_t>((i + q * j) % n)); };
    for (std::size_t i = 0; i < ell; ++i) {
        for (std::size_t j = ell; j < k; ++j) put(i, j);
    }
    for (std::size_t i = ell; i < k; ++i) {
        for (std::size_t j = 0; j < ell; ++j) put(i, j);
    }
    for (std::size_t i = 0; i < ell; ++i) {
        for (std::size_t j = 0; j < ell; ++j) {
            if (i != 0 || j != 0) put(i, j);
        }
    }
    return ExtCyclicSpec{q, k, ell, {d.begin(), d.end()}};
}

FMatrix ext_cyclic_parity_check(const ExtCyclicSpec& spec) {
    FieldPtr f2 = make_quadratic_field(spec.q);
    const std::uint32_t n = group_order(spec.q);
    // The all-ones row stands for the exponent 0, which belongs to the
    // defining pairs only when ell >= 1. With ell = 0 there are no
    // constraints and the code is the whole space, of dimension q^2.
    const std::size_t top = spec.ell > 0 ? 1 : 0;
    FMatrix h(f2, spec.defining_set.size() + top, n + 1);
    if (top) {
        for (std::uint32_t u = 0; u <= n; ++u) h.raw(0, u) = 0;
    }
    for (std::size_t r = 0; r < spec.defining_set.size(); ++r) {
        const std::int64_t s = spec.defining_set[r];
        for (std::uint32_t u = 0; u < n; ++u) h.raw(r + top, u) = f2->reduce(s * u);
    }
    return h;
}

LinearCode build_ext_cyclic(const ExtCyclicSpec& spec) {
    FMatrix h = ext_cyclic_parity_check(spec);
    // The defining set is closed under multiplication by q, so the solution
    // space is Frobenius-stable and its RREF basis already lies in GF(q).
    SubfieldEmbedding emb(h.field(), base_field(spec.q));
    if (h.rows() == 0) return LinearCode::full(emb.small(), h.cols());
    FMatrix basis = nullspace(h);
    if (basis.rows() == 0) return LinearCode::zero(emb.small(), h.cols());
    return LinearCode(restrict_matrix(basis, emb));
}

std::vector<std::pair<std::size_t, std::size_t>> trace_index_set(std::uint32_t q, std::size_t k) {
    std::vector<std::pair<std::size_t, std::size_t>> t;
    for (std::size_t i = k; i < q; ++i) {
        for (std::size_t j = 0; j < k; ++j) t.emplace_back(i, j);
        for (std::size_t j = i + 1; j < q; ++j) t.emplace_back(i, j);
    }
    return t;
}

TraceAssignment unit_assignment(std::uint32_t q, std::size_t k) {
    require_prime_power(q);
    if (k < 1 || k >= q) raise(ErrorCode::ParameterOutOfRange, "trace form needs 1 <= k < q");
    FieldPtr fq = base_field(q);
    TraceAssignment a;
    a.diag.assign(q - k + 1, fq->zero());
    a.diag[0] = fq->one();
    return a;
}

std::vector<Felt> trace_codeword(std::uint32_t q, std::size_t k, const TraceAssignment& theta) {
    require_prime_power(q);
    if (k < 1 || k >= q) raise(ErrorCode::ParameterOutOfRange, "trace form needs 1 <= k < q");
    FieldPtr fq = base_field(q);
    FieldPtr f2 = make_quadratic_field(q);
    SubfieldEmbedding emb(f2, fq);

    if (theta.diag.size() != q - k + 1) raise(ErrorCode::InvalidAssignment, "need one diagonal theta per t in [k-1, q-1]");
    for (const Felt& x : theta.diag) {
        if (x.field_id != fq->id()) raise(ErrorCode::InvalidAssignment, "diagonal thetas must lie in GF(q)");
    }
    if (theta.diag[0].is_zero()) raise(ErrorCode::InvalidAssignment, "theta_{k-1,k-1} must be nonzero");
    const auto tset = trace_index_set(q, k);
    for (const auto& [ij, v] : theta.off) {
        if (std::find(tset.begin(), tset.end(), ij) == tset.end()) {
            raise(ErrorCode::InvalidAssignment,
                  "(" + std::to_string(ij.first) + "," + std::to_string(ij.second) + ") is not in T");
        }
        if (v.field_id != f2->id()) raise(ErrorCode::InvalidAssignment, "off-diagonal thetas must lie in GF(q^2)");
    }

    const std::uint32_t n = group_order(q);
    const Field& F = *f2;
    std::vector<Felt> out;
    out.reserve(n + 1);
    Log total = Field::kZero;
    for (std::uint32_t r = 0; r < n; ++r) {
        Log acc = Field::kZero;
        for (std::size_t t = k - 1; t < q; ++t) {
            const Log th = emb.lift(theta.diag[t - (k - 1)]).log;
            const std::int64_t e = -static_cast<std::int64_t>(r) * static_cast<std::int64_t>(t) * (q + 1);
            acc = F.add_raw(acc, F.mul_raw(th, F.reduce(e)));
        }
        for (const auto& [ij, v] : theta.off) {
            const auto exponent = static_cast<std::int64_t>(ij.first + q * ij.second);
            const Log y = F.mul_raw(v.log, F.reduce(-static_cast<std::int64_t>(r) * exponent));
            acc = F.add_raw(acc, F.add_raw(y, F.pow_raw(y, q)));
        }
        const Felt c = emb.restrict(F.wrap(acc));
        total = fq->add_raw(total, c.log);
        out.push_back(c);
    }
    // sum_r alpha^(-r t (q+1)) is -1 when (q-1) | t and 0 otherwise, and no
    // exponent in T is a multiple of q^2 - 1, so the parity coordinate equals
    // theta_{q-1,q-1}, plus theta_{0,0} in the degenerate case k = 1.
    const Felt ext = fq->wrap(fq->neg_raw(total));
    Felt expected = theta.diag.back();
    if (k == 1) expected = fq->add(expected, theta.diag.front());
    if (ext != expected) raise(ErrorCode::ContractViolation, "trace codeword parity coordinate mismatch");
    out.push_back(ext);
    return out;
}

std::size_t ht_bound(const std::vector<std::uint32_t>& defining_set, std::size_t n, bool search) {
    if (n == 0) return 1;
    std::vector<char> in_d(n, 0);
    for (auto x : defining_set) {
        if (x >= n) raise(ErrorCode::IndexOutOfRange, "defining set element outside [0, n)");
        in_d[x] = 1;
    }
    const std::size_t dsize = static_cast<std::size_t>(std::count(in_d.begin(), in_d.end(), 1));
    if (dsize == 0) return 1;

    std::vector<std::size_t> units;
    for (std::size_t b = 1; b < n || (n == 1 && b == 1); ++b) {
        if (std::gcd(b, n) == 1) units.push_back(b % n);
        if (n == 1) break;
    }

    std::size_t best = 1;
    std::vector<std::size_t> run(n);
    for (std::size_t b : units) {
        // run[a] = number of consecutive i with a + b i in D (at most |D|).
        for (std::size_t a = 0; a < n; ++a) {
            std::size_t len = 0;
            while (len < dsize && in_d[(a + b * len) % n]) ++len;
            run[a] = len;
            best = std::max(best, len + 1);
        }
        if (!search) continue;
        // Grid {a + b i1 + c i2 : i1 <= x-2, i2 <= y} inside D gives x + y.
        for (std::size_t c : units) {
            for (std::size_t a = 0; a < n; ++a) {
                std::size_t low = run[a];
                for (std::size_t y = 0; low > 0 && y <= dsize; ++y) {
                    low = std::min(low, run[(a + c * y) % n]);
                    if (low == 0) break;
                    best = std::max(best, low + 1 + y);
                }
            }
        }
    }
    return best;
}

LinearCode rains_p_pair(const LinearCode& inner, const LinearCode& outer) {
    if (inner.field() != outer.field()) raise(ErrorCode::FieldMismatch, "codes live over different fields");
    if (inner.n() != outer.n()) raise(ErrorCode::LengthMismatch, "codes have different lengths");
    const Field& f = *inner.field();
    const std::uint32_t q = hermitian_base(f);
    SubfieldEmbedding emb(inner.field(), base_field(q));
    const std::size_t n = inner.n();
    // For a over GF(q), sum a_i w_i = 0 iff the conjugate sum also vanishes;
    // adding both rows keeps the solution space Frobenius-stable.
    FMatrix rows(inner.field(), 2 * inner.k() * outer.k(), n);
    std::size_t r = 0;
    for (std::size_t i = 0; i < inner.k(); ++i) {
        for (std::size_t j = 0; j < outer.k(); ++j) {
            for (std::size_t c = 0; c < n; ++c) {
                const Log w = f.mul_raw(inner.generator().raw(i, c), f.pow_raw(outer.generator().raw(j, c), q));
                rows.raw(r, c) = w;
                rows.raw(r + 1, c) = f.pow_raw(w, q);
            }
            r += 2;
        }
    }
    FMatrix basis = nullspace(rows);
    if (basis.rows() == 0) return LinearCode::zero(emb.small(), n);
    return LinearCode(restrict_matrix(basis, emb));
}

LinearCode rains_p(const LinearCode& c) { return rains_p_pair(c, c); }

bool has_mds_hull(const GrsSpec& spec) {
    if (spec.k == 0) return true;
    const LinearCode h = hull(grs_code(spec), InnerProduct::Hermitian).hull;
    return h == grs_code(spec.with_k(spec.k - 1));
}

GrsSpec hull_mds_from_codeword(std::uint32_t q, std::size_t k, const std::vector<Felt>& x,
                               const std::vector<std::size_t>* preimage_choice) {
    require_prime_power(q);
    if (k < 1 || k > q) raise(ErrorCode::ParameterOutOfRange, "need 1 <= k <= q");
    FieldPtr fq = base_field(q);
    FieldPtr f2 = make_quadratic_field(q);
    if (x.size() != static_cast<std::size_t>(q) * q) raise(ErrorCode::LengthMismatch, "codeword length must be q^2");
    for (const Felt& v : x) {
        if (v.field_id != fq->id()) raise(ErrorCode::FieldMismatch, "codeword entries must lie in GF(q)");
    }
    const LinearCode outer = build_ext_cyclic(make_ext_cyclic_spec(q, k, k - 1));
    const LinearCode inner = build_ext_cyclic(make_ext_cyclic_spec(q, k, k));
    if (!outer.contains(x) || inner.contains(x)) {
        raise(ErrorCode::NotInDifferenceSet, "codeword is not in E(D_{k,k-1}) \\ E(D_{k,k})");
    }

    SubfieldEmbedding emb(f2, fq);
    const auto points = standard_points(*f2, true);
    GrsSpec spec;
    spec.field = f2;
    spec.k = k;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        const Felt lifted = emb.lift(x[i]);
        Felt a = smallest_norm_preimage(*f2, lifted, q);
        if (preimage_choice) {
            if (pos >= preimage_choice->size() || (*preimage_choice)[pos] > q) {
                raise(ErrorCode::ParameterOutOfRange, "preimage choice list too short or out of range");
            }
            a = f2->norm_preimages(lifted, q)[(*preimage_choice)[pos]];
        }
        spec.b.push_back(points[i]);
        spec.a.push_back(a);
        ++pos;
    }
    if (spec.n() < k) raise(ErrorCode::ParameterOutOfRange, "codeword weight is below k");
    spec.label = "hull-mds q=" + std::to_string(q) + " k=" + std::to_string(k) + " m=" + std::to_string(spec.n());
    return verified(std::move(spec));
}

GrsSpec grscon1(std::uint32_t q) {
    require_prime_power(q);
    FieldPtr f2 = make_quadratic_field(q);
    GrsSpec spec;
    spec.field = f2;
    spec.k = q;
    spec.b = standard_points(*f2, true);
    spec.a.assign(spec.b.size(), f2->one());
    spec.label = "grscon1 q=" + std::to_string(q);
    return verified(std::move(spec));
}

GrsSpec grscon2(std::uint32_t q, std::size_t k) {
    require_prime_power(q);
    if (k <= 1 || k >= q) raise(ErrorCode::ParameterOutOfRange, "grscon2 needs 1 < k < q");
    FieldPtr f2 = make_quadratic_field(q);
    GrsSpec spec;
    spec.field = f2;
    spec.k = k;
    spec.b = standard_points(*f2, false);
    for (std::size_t t = 0; t < spec.b.size(); ++t) {
        spec.a.push_back(f2->from_log(-static_cast<std::int64_t>(t) * static_cast<std::int64_t>(k - 1)));
    }
    spec.label = "grscon2 q=" + std::to_string(q) + " k=" + std::to_string(k);
    return verified(std::move(spec));
}

GrsSpec grscon3(std::uint32_t q, std::size_t k) {
    require_prime_power(q);
    if (k < 1 || k >= q) raise(ErrorCode::ParameterOutOfRange, "grscon3 needs 1 <= k < q");
    FieldPtr f2 = make_quadratic_field(q);
    const Field& F = *f2;
    const std::uint32_t s = std::gcd(static_cast<std::uint32_t>(k - 1), q - 1);
    GrsSpec spec;
    spec.field = f2;
    spec.k = k;
    for (std::uint32_t l : coset_complement(q, (q - 1) / s)) {
        const std::int64_t e = -static_cast<std::int64_t>(l) * static_cast<std::int64_t>(k - 1) * (q + 1);
        const Felt norm = F.sub(F.from_log(e), F.one());
        spec.b.push_back(F.from_log(l));
        spec.a.push_back(smallest_norm_preimage(F, norm, q));
    }
    // a^(q+1) = -1; in characteristic 2 this reads a^(q+1) = 1.
    spec.b.push_back(F.zero());
    spec.a.push_back(smallest_norm_preimage(F, F.neg(F.one()), q));
    if (spec.n() != q * q - s * (q + 1)) raise(ErrorCode::ContractViolation, "grscon3 length mismatch");
    spec.label = "grscon3 q=" + std::to_string(q) + " k=" + std::to_string(k);
    return verified(std::move(spec));
}

GrsSpec grscon4(std::uint32_t q, std::size_t k, std::size_t m) {
    require_prime_power(q);
    if (k < 1 || k >= q || m < k || m + 1 >= q) {
        raise(ErrorCode::ParameterOutOfRange, "grscon4 needs 1 <= k < q and k-1 < m < q-1");
    }
    FieldPtr f2 = make_quadratic_field(q);
    const Field& F = *f2;
    const std::uint32_t s = std::gcd(static_cast<std::uint32_t>(m - k + 1), q - 1);
    if (q - 1 - s == 0) raise(ErrorCode::EmptyConstruction, "grscon4 has length 0");
    GrsSpec spec;
    spec.field = f2;
    spec.k = k;
    // The codeword behind this construction has theta_{k-1,k-1} = 1 and
    // theta_{m,m} = -1, so its entries are alpha^(-l(k-1)(q+1)) - alpha^(-l m (q+1)).
    for (std::uint32_t l : coset_complement(q, (q - 1) / s)) {
        const std::int64_t e = -static_cast<std::int64_t>(l) * (q + 1);
        const Felt norm = F.sub(F.from_log(e * static_cast<std::int64_t>(k - 1)), F.from_log(e * static_cast<std::int64_t>(m)));
        spec.b.push_back(F.from_log(l));
        spec.a.push_back(smallest_norm_preimage(F, norm, q));
    }
    if (spec.n() != (q + 1) * (q - 1 - s)) raise(ErrorCode::ContractViolation, "grscon4 length mismatch");
    spec.label = "grscon4 q=" + std::to_string(q) + " k=" + std::to_string(k) + " m=" + std::to_string(m);
    return verified(std::move(spec));
}

TraceAssignment grscon3_assignment(std::uint32_t q, std::size_t k) {
    TraceAssignment a = unit_assignment(q, k);
    FieldPtr fq = base_field(q);
    a.diag.back() = fq->add(a.diag.back(), fq->neg(fq->one()));
    return a;
}

TraceAssignment grscon4_assignment(std::uint32_t q, std::size_t k, std::size_t m) {
    TraceAssignment a = unit_assignment(q, k);
    if (m < k || m + 1 >= q) raise(ErrorCode::ParameterOutOfRange, "need k-1 < m < q-1");
    FieldPtr fq = base_field(q);
    a.diag[m - (k - 1)] = fq->neg(fq->one());
    return a;
}

std::optional<TraceAssignment> find_assignment_of_weight(std::uint32_t q, std::size_t k, std::size_t m,
                                                         std::uint64_t budget) {
    TraceAssignment a = unit_assignment(q, k);
    FieldPtr fq = base_field(q);
    FieldPtr f2 = make_quadratic_field(q);
    const auto tset = trace_index_set(q, k);
    // Digit labels: 0 is zero, d > 0 is alpha^(d-1). Digit 0 (theta_{k-1,k-1})
    // skips zero; the last digit varies fastest.
    const std::size_t nd = a.diag.size() + tset.size();
    std::vector<std::uint32_t> digit(nd, 0);
    digit[0] = 1;
    auto radix = [&](std::size_t i) { return i < a.diag.size() ? q : q * q; };
    std::uint64_t tried = 0;
    for (;;) {
        for (std::size_t i = 0; i < a.diag.size(); ++i) {
            a.diag[i] = digit[i] == 0 ? fq->zero() : fq->from_log(digit[i] - 1);
        }
        a.off.clear();
        for (std::size_t i = 0; i < tset.size(); ++i) {
            const auto d = digit[a.diag.size() + i];
            if (d != 0) a.off[tset[i]] = f2->from_log(d - 1);
        }
        const auto cw = trace_codeword(q, k, a);
        if (weight(cw) == m) return a;
        if (++tried >= budget) throw BudgetExceeded(0, std::nullopt, "assignment scan budget exhausted");
        std::size_t i = nd;
        bool advanced = false;
        while (i-- > 0) {
            if (digit[i] + 1 < radix(i)) {
                ++digit[i];
                advanced = true;
                break;
            }
            digit[i] = i == 0 ? 1 : 0;
        }
        if (!advanced) return std::nullopt;
    }
}

// Text forms ----------------------------------------------------------------

namespace {

std::size_t parse_count(const std::string& key, const std::string& value) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        raise(ErrorCode::ParseError, "bad integer for " + key + ": '" + value + "'");
    }
    return v;
}

std::vector<Felt> parse_elements(const Field& f, const std::string& list) {
    std::vector<Felt> out;
    std::istringstream in(list);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(f.parse(tok));
    return out;
}

std::string join_elements(const Field& f, const std::vector<Felt>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += f.format(v[i]);
    }
    return s;
}

}  // namespace

std::string format_grs_spec(const GrsSpec& spec) {
    const Field& f = *spec.field;
    return "grs " + f.name() + " k=" + std::to_string(spec.k) + " b=" + join_elements(f, spec.b) +
           " a=" + join_elements(f, spec.a);
}

Construction construct_from_string(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string kind;
    if (!(in >> kind)) raise(ErrorCode::ParseError, "empty construction string");
    std::string field_name;
    if (kind == "grs" && !(in >> field_name)) raise(ErrorCode::ParseError, "grs form needs a field name");

    std::map<std::string, std::string> kv;
    std::string tok;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0) raise(ErrorCode::ParseError, "expected key=value, got '" + tok + "'");
        kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    auto take = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) raise(ErrorCode::ParseError, kind + " needs " + key + "=");
        std::string v = it->second;
        kv.erase(it);
        return v;
    };
    auto number = [&](const std::string& key) { return parse_count(key, take(key)); };
    auto finish = [&]() {
        if (!kv.empty()) raise(ErrorCode::ParseError, "unknown key '" + kv.begin()->first + "' for " + kind);
    };
    auto from_spec = [&](GrsSpec spec) {
        finish();
        LinearCode code = grs_code(spec);
        std::string label = spec.label;
        return Construction{std::move(code), std::move(spec), std::move(label)};
    };

    if (kind == "grscon1") {
        const auto q = number("q");
        return from_spec(grscon1(static_cast<std::uint32_t>(q)));
    }
    if (kind == "grscon2" || kind == "grscon3") {
        const auto q = static_cast<std::uint32_t>(number("q"));
        const auto k = number("k");
        return from_spec(kind == "grscon2" ? grscon2(q, k) : grscon3(q, k));
    }
    if (kind == "grscon4") {
        const auto q = static_cast<std::uint32_t>(number("q"));
        const auto k = number("k");
        const auto m = number("m");
        return from_spec(grscon4(q, k, m));
    }
    if (kind == "grs") {
        FieldPtr f = parse_field_name(field_name);
        GrsSpec spec;
        spec.field = f;
        spec.k = number("k");
        spec.b = parse_elements(*f, take("b"));
        spec.a = parse_elements(*f, take("a"));
        spec.label = "grs";
        return from_spec(std::move(spec));
    }
    if (kind == "ext") {
        const auto q = static_cast<std::uint32_t>(number("q"));
        const auto k = number("k");
        const auto ell = number("ell");
        finish();
        std::string label = "ext q=" + std::to_string(q) + " k=" + std::to_string(k) + " ell=" + std::to_string(ell);
        return Construction{build_ext_cyclic(make_ext_cyclic_spec(q, k, ell)), std::nullopt, label};
    }
    if (kind == "fixture28") {
        finish();
        return Construction{fixture_28_10(), std::nullopt, "fixture28"};
    }
    raise(ErrorCode::ParseError, "unknown construction '" + kind + "'");
}

}  // namespace hullprop
