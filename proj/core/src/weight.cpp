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

// Minimum-weight search. Two strategies, picked by estimated cost:
//
//  * message enumeration walks one representative per projective point of
//    the message space, updating the codeword incrementally so each step
//    touches a single generator row;
//  * support enumeration walks supports T of growing size w and asks whether
//    some codeword is supported inside T, which is a nullspace question on the
//    columns of a parity-check matrix. The first w that succeeds is the answer.
//
// Relative weights (A minus a subcode B) reuse both: a candidate only counts
// when it falls outside B.

#include <algorithm>
#include <cmath>

#include "hullprop/codekit.hpp"

namespace hullprop {
namespace {

using Log = Field::Log;

long double projective_messages(std::uint32_t q, std::size_t k) {
    return (std::pow(static_cast<long double>(q), static_cast<long double>(k)) - 1.0L) / (q - 1.0L);
}

long double support_cost(std::size_t n, std::size_t w_max) {
    long double total = 0;
    long double binom = 1;
    for (std::size_t w = 1; w <= w_max; ++w) {
        binom = binom * static_cast<long double>(n - w + 1) / static_cast<long double>(w);
        total += binom;
    }
    return total;
}

std::size_t by_messages(const LinearCode& a, const LinearCode* b) {
    const Field& f = *a.field();
    const std::size_t n = a.n();
    const std::size_t k = a.k();
    const Log top = static_cast<Log>(f.order()) - 1;  // labels 0 (zero), 1..top (alpha^(label-1))
    const FMatrix& g = a.generator();

    std::size_t best = kInfiniteWeight;
    std::vector<Log> cw(n);
    std::vector<Log> digits(k);

    auto add_row = [&](std::size_t row, Log coef, std::size_t& wt) {
        const auto r = g.row_raw(row);
        for (std::size_t j = 0; j < n; ++j) {
            if (r[j] == Field::kZero) continue;
            const Log before = cw[j];
            cw[j] = f.add_raw(before, f.mul_raw(coef, r[j]));
            wt += (cw[j] != Field::kZero);
            wt -= (before != Field::kZero);
        }
    };
    auto consider = [&](std::size_t wt) {
        if (wt >= best) return;
        if (b && b->k() > 0 && b->contains_raw(cw)) return;
        best = wt;
    };

    // Normalised messages in lexicographic order: the leading nonzero digit is
    // one, and a later leading position sorts first.
    for (std::size_t lead = k; lead-- > 0;) {
        std::fill(cw.begin(), cw.end(), Field::kZero);
        std::fill(digits.begin(), digits.end(), 0);
        std::size_t wt = 0;
        add_row(lead, 0, wt);
        digits[lead] = 1;
        consider(wt);
        if (best == 1) return best;
        for (;;) {
            std::size_t j = k;
            bool advanced = false;
            while (j-- > lead + 1) {
                const Log label = digits[j];
                if (label < top) {
                    const Log old_val = label == 0 ? Field::kZero : label - 1;
                    const Log diff = f.sub_raw(label, old_val);  // value(label+1) - value(label)
                    digits[j] = label + 1;
                    add_row(j, diff, wt);
                    advanced = true;
                    break;
                }
                digits[j] = 0;
                add_row(j, f.neg_raw(top - 1), wt);
            }
            if (!advanced) break;
            consider(wt);
            if (best == 1) return best;
        }
    }
    return best;
}

std::size_t by_supports(const LinearCode& a, const LinearCode* b, std::size_t w_max, std::uint64_t budget) {
    const FMatrix h = dual(a, InnerProduct::Euclidean).generator();
    const std::size_t n = a.n();
    const bool relative = b && b->k() > 0;
    std::uint64_t spent = 0;
    std::vector<std::size_t> t;
    std::vector<Log> lifted(n);

    for (std::size_t w = 1; w <= w_max; ++w) {
        t.resize(w);
        for (std::size_t i = 0; i < w; ++i) t[i] = i;
        for (;;) {
            if (++spent > budget) {
                throw BudgetExceeded(w, std::nullopt, "support search stopped at weight " + std::to_string(w));
            }
            const FMatrix v = nullspace(select_columns(h, t));
            for (std::size_t r = 0; r < v.rows(); ++r) {
                if (!relative) return w;
                std::fill(lifted.begin(), lifted.end(), Field::kZero);
                for (std::size_t i = 0; i < w; ++i) lifted[t[i]] = v.raw(r, i);
                if (!b->contains_raw(lifted)) return w;
            }
            std::size_t i = w;
            while (i-- > 0) {
                if (t[i] < n - w + i) break;
            }
            if (i == static_cast<std::size_t>(-1)) break;
            ++t[i];
            for (std::size_t j = i + 1; j < w; ++j) t[j] = t[j - 1] + 1;
        }
    }
    return kInfiniteWeight;
}

std::size_t search(const LinearCode& a, const LinearCode* b, std::uint64_t budget) {
    const std::size_t kb = b ? b->k() : 0;
    // A weight above n - k_A + k_B + 1 is impossible: some nonzero word of
    // A vanishing on any k_A - k_B - 1 chosen coordinates escapes B.
    const std::size_t w_max = std::min(a.n(), a.n() - a.k() + kb + 1);
    const long double msg = projective_messages(a.field()->order(), a.k());
    const long double sup = support_cost(a.n(), w_max);
    const long double row_cost = static_cast<long double>(a.n() - a.k() + 1) * static_cast<long double>(w_max);
    const long double cap = static_cast<long double>(budget);

    const bool msg_fits = msg <= cap;
    const bool prefer_msg = msg * static_cast<long double>(a.n()) <= sup * row_cost;
    if (msg_fits && (prefer_msg || sup > cap)) return by_messages(a, b);
    return by_supports(a, b, w_max, budget);
}

}  // namespace

std::size_t min_distance(const LinearCode& c, std::uint64_t budget) {
    if (c.k() == 0) raise(ErrorCode::NoNonzeroCodewords, "the zero code has no minimum distance");
    return search(c, nullptr, budget);
}

std::size_t relative_min_weight(const LinearCode& a, const LinearCode& b, std::uint64_t budget) {
    if (a.field() != b.field()) raise(ErrorCode::FieldMismatch, "codes live over different fields");
    if (a.n() != b.n()) raise(ErrorCode::LengthMismatch, "codes have different lengths");
    if (!a.contains(b)) raise(ErrorCode::NotASubcode, "second code is not a subcode of the first");
    if (a.k() == b.k()) return kInfiniteWeight;
    return search(a, &b, budget);
}

}  // namespace hullprop
