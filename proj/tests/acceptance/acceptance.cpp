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

// Acceptance run: one PASS/FAIL line per criterion, with wall time against
// the stated limit. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hullprop/codekit.hpp"
#include "hullprop/fixtures.hpp"
#include "hullprop/grslab.hpp"
#include "hullprop/qparams.hpp"
#include "hullprop/tables.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace hullprop;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

bool report(const char* id, const char* title, std::optional<double> limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s && secs > *limit_s) o.fail("took " + std::to_string(secs) + " s");
    char timing[96];
    if (limit_s) {
        std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, *limit_s);
    } else {
        std::snprintf(timing, sizeof timing, "%.2f s", secs);
    }
    std::cout << id << " " << (o.ok ? "PASS" : "FAIL") << " [" << timing << "] " << title;
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << std::endl;
    return o.ok;
}

std::string shape(const LinearCode& c, std::size_t d) {
    return "[" + std::to_string(c.n()) + "," + std::to_string(c.k()) + "," + std::to_string(d) + "]";
}

Outcome fixture_criterion() {
    Outcome o;
    const LinearCode c = fixture_28_10();
    const HullReport h = hull(c, InnerProduct::Hermitian);
    const LinearCode hd = dual(h.hull, InnerProduct::Hermitian);
    if (shape(c, min_distance(c)) != "[28,10,9]") o.fail("code is " + shape(c, min_distance(c)));
    if (shape(h.hull, min_distance(h.hull)) != "[28,1,20]") o.fail("hull is " + shape(h.hull, min_distance(h.hull)));
    if (shape(hd, min_distance(hd)) != "[28,27,1]") o.fail("hull dual is " + shape(hd, min_distance(hd)));
    const std::vector<std::size_t> S = {0, 1, 2, 3, 4, 5};
    const std::size_t a = shorten(h.hull, S).k();
    const std::size_t b = hull(shorten(c, S), InnerProduct::Hermitian).ell;
    const std::size_t p = hull(puncture(c, S), InnerProduct::Hermitian).ell;
    // Independent check of the same three dimensions.
    const oracle::PolyField F(4);
    const std::size_t ob = oracle::hull_dim(F, oracle::to_mat(shorten(c, S).generator()), 22, 2);
    const std::size_t op = oracle::hull_dim(F, oracle::to_mat(puncture(c, S).generator()), 22, 2);
    const std::string got = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(p) + ")";
    if (got != "(0,1,2)" || ob != 1 || op != 2) o.fail("dimensions " + got);
    o.detail = o.ok ? "hull [28,1,20], hull dual [28,27,1], dims (0,1,2)" : o.detail;
    return o;
}

Outcome table_criterion(int table) {
    Outcome o;
    std::size_t count = 0;
    for (std::uint32_t q : {2u, 3u}) {
        TableOptions opts;
        opts.q = q;
        const auto rows = table == 1 ? generate_table1(opts) : generate_table2(opts);
        for (const TableRow& r : rows) {
            ++count;
            const std::string where = "q=" + std::to_string(q) + " family " + std::to_string(r.family) +
                                      " k=" + std::to_string(r.k) + " s=" + std::to_string(r.s);
            if (!r.constructed || !r.verified) {
                o.fail(where + " not verified: " + r.note);
                continue;
            }
            if (!r.matches_formula) o.fail(where + " differs from its closed form");
            const auto verdicts = table == 1 ? check_bounds(*r.eaqecc) : check_bounds(*r.subsystem);
            const BoundId id = table == 1 ? BoundId::EAQMDS : BoundId::SubSingleton;
            for (const auto& v : verdicts)
                if (v.id == id && v.slack != 0) o.fail(where + " has slack " + std::to_string(v.slack));
        }
    }
    if (o.ok) o.detail = std::to_string(count) + " rows exact, on the closed forms, slack 0";
    return o;
}

Outcome grs_hull_criterion() {
    Outcome o;
    std::size_t count = 0;
    auto check = [&](const GrsSpec& spec) {
        ++count;
        const LinearCode h = hull(grs_code(spec), InnerProduct::Hermitian).hull;
        if (!(h == grs_code(spec.with_k(spec.k - 1)))) {
            o.fail(spec.label + ": hull is not GRS_{k-1}");
            return;
        }
        if (h.k() != spec.k - 1) o.fail(spec.label + ": hull dimension");
        if (h.k() > 0 && min_distance(h) != spec.n() - spec.k + 2) o.fail(spec.label + ": hull is not MDS");
    };
    for (std::uint32_t q : {2u, 3u, 4u}) {
        check(grscon1(q));
        for (std::size_t k = 1; k < q; ++k) {
            if (k >= 2) check(grscon2(q, k));
            check(grscon3(q, k));
            for (std::size_t m = k; m + 2 <= q; ++m) check(grscon4(q, k, m));
        }
    }
    if (o.ok) o.detail = std::to_string(count) + " constructions";
    return o;
}

Outcome property_criterion() {
    struct Named {
        const char* name;
        std::string (*fn)(oracle::Gen&, std::uint32_t);
    };
    const Named suites[] = {
        {"duality", props::duality_pair},
        {"containment", props::hull_containment},
        {"equality on a hull information set", props::hull_equality},
        {"permutation equivariance", props::permutation_equivariance},
        {"derived code parameters", props::derived_parameters},
        {"hull dimension formula", props::hull_dimension_formula},
    };
    Outcome o;
    for (std::uint32_t q : {2u, 3u}) {
        for (const Named& s : suites) {
            oracle::Gen gen(0x5eed0000u + q);
            for (int t = 0; t < 1000; ++t) {
                const std::string f = s.fn(gen, q);
                if (!f.empty()) {
                    o.fail(std::string(s.name) + " q=" + std::to_string(q) + " trial " + std::to_string(t) + ": " + f);
                    break;
                }
            }
        }
    }
    if (o.ok) o.detail = "6 suites x 1000 trials at q = 2 and q = 3";
    return o;
}

Outcome rains_criterion() {
    Outcome o;
    std::size_t count = 0;
    for (std::uint32_t q : {2u, 3u}) {
        const GrsSpec base = grscon1(q);
        for (std::size_t k = 1; k <= q; ++k) {
            for (std::size_t ell = 1; ell <= k; ++ell) {
                ++count;
                const std::string where =
                    "q=" + std::to_string(q) + " k=" + std::to_string(k) + " ell=" + std::to_string(ell);
                const ExtCyclicSpec spec = make_ext_cyclic_spec(q, k, ell);
                const LinearCode e = build_ext_cyclic(spec);
                if (!(rains_p_pair(grs_code(base.with_k(ell)), grs_code(base.with_k(k))) == e))
                    o.fail(where + ": Rains code differs");
                if (e.k() != q * q - 2 * ell * k + ell * ell) o.fail(where + ": dimension");
                const std::size_t ht = ht_bound(spec.defining_set, q * q - 1);
                if (ht < k + ell - 1) o.fail(where + ": HT bound below k+ell-1");
                if (e.k() > 0) {
                    const oracle::PolyField F(q);
                    const std::size_t d = oracle::min_weight(F, oracle::to_mat(e.generator()), e.n());
                    if (d < ht) o.fail(where + ": distance " + std::to_string(d) + " below HT " + std::to_string(ht));
                }
            }
        }
    }
    if (o.ok) o.detail = std::to_string(count) + " (k, ell) pairs";
    return o;
}

Outcome propagation_criterion() {
    Outcome o;
    oracle::Gen gen(0xc0de7);
    std::size_t refused = 0;
    for (int t = 0; t < 200; ++t) {
        const props::PropagationOutcome r = props::propagation_contracts(gen, 2);
        if (!r.failure.empty()) {
            o.fail("trial " + std::to_string(t) + ": " + r.failure);
            break;
        }
        refused += r.shorten_refused ? 1 : 0;
    }
    if (o.ok) o.detail = "200 sources, " + std::to_string(refused) + " impure shorten attempts refused";
    return o;
}

Outcome lcd_criterion() {
    Outcome o;
    oracle::Gen gen(0x1cd);
    for (int t = 0; t < 100 && o.ok; ++t) {
        const std::uint32_t q = t % 2 ? 3 : 2;
        for (InnerProduct ip : {InnerProduct::Hermitian, InnerProduct::Euclidean}) {
            for (DeriveMode mode : {DeriveMode::Puncture, DeriveMode::Shorten}) {
                const std::string f = props::lcd_production(gen, q, ip, mode);
                if (!f.empty()) o.fail("trial " + std::to_string(t) + ": " + f);
            }
        }
    }
    if (o.ok) o.detail = "100 codes x 2 inner products x 2 modes";
    return o;
}

}  // namespace

int main() {
    bool all = true;
    all &= report("AC1", "counterexample fixture", 5.0, fixture_criterion);
    all &= report("AC2", "EAQECC table regeneration, q in {2,3}", 300.0, [] { return table_criterion(1); });
    all &= report("AC3", "subsystem table regeneration, q in {2,3}", 300.0, [] { return table_criterion(2); });
    all &= report("AC4", "GRS hull identity and MDS hulls, q in {2,3,4}", 120.0, grs_hull_criterion);
    all &= report("AC5", "randomized property suites", std::nullopt, property_criterion);
    all &= report("AC6", "Rains code cross-check", 120.0, rains_criterion);
    all &= report("AC7", "propagation contracts", std::nullopt, propagation_criterion);
    all &= report("AC8", "LCD production", std::nullopt, lcd_criterion);
    return all ? 0 : 1;
}
