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

#include "hullprop/known_families.hpp"

#include <functional>
#include <numeric>

namespace hullprop {
namespace {

using ll = long long;

struct Rec {
    ll q, n, kappa, r, delta;
};

struct Row {
    int table;
    int row;
    const char* pattern;
    const char* constraints;
    std::function<bool(const Rec&)> test;
};

bool even(ll x) { return x % 2 == 0; }

// q = 10m + residue with m even; returns m or -1.
ll even_m(ll q, ll residue) {
    if (q % 10 != residue) return -1;
    const ll m = (q - residue) / 10;
    return even(m) ? m : -1;
}

const std::vector<Row>& eaqecc_rows() {
    static const std::vector<Row> rows = {
        {3, 1, "n=(q^2+1)/5, kappa=(q^2+1)/5-2k+3, delta=k",
         "q=10m+3 with even m, 2<=k<=8m+61, even d",
         [](const Rec& x) {
             const ll m = even_m(x.q, 3);
             const ll k = x.delta;
             return m >= 0 && 5 * x.n == x.q * x.q + 1 && x.kappa == x.n - 2 * k + 3 && k >= 2 && k <= 8 * m + 61 &&
                    even(x.delta);
         }},
        {3, 2, "n=(q^2+1)/5, kappa=(q^2+1)/5-2k+3, delta=k", "q=10m+7 with even m",
         [](const Rec& x) {
             return even_m(x.q, 7) >= 0 && 5 * x.n == x.q * x.q + 1 && x.kappa == x.n - 2 * x.delta + 3;
         }},
        {3, 3, "n=z(q-1), kappa=z(q-1)-2k+1, delta=k+1", "1<=z<=q+1, gcd(n,q)=1, 1<=k<=q-1",
         [](const Rec& x) {
             if (x.n % (x.q - 1) != 0) return false;
             const ll z = x.n / (x.q - 1);
             const ll k = x.delta - 1;
             return z >= 1 && z <= x.q + 1 && std::gcd(x.n, x.q) == 1 && k >= 1 && k <= x.q - 1 &&
                    x.kappa == x.n - 2 * k + 1;
         }},
        {3, 4, "n=q^2+1, kappa=q^2-2k+4, delta=k", "2<=k<=2q with even k",
         [](const Rec& x) {
             const ll k = x.delta;
             return x.n == x.q * x.q + 1 && x.kappa == x.q * x.q - 2 * k + 4 && k >= 2 && k <= 2 * x.q && even(k);
         }},
        {3, 5, "n=q^2, kappa=q^2-2k+3, delta=k", "q+1<=k<=2q-1",
         [](const Rec& x) {
             const ll k = x.delta;
             return x.n == x.q * x.q && x.kappa == x.q * x.q - 2 * k + 3 && k >= x.q + 1 && k <= 2 * x.q - 1;
         }},
        {3, 6, "n=q^2-1, kappa=q^2-2k+2, delta=k", "2<=k<=2q-2",
         [](const Rec& x) {
             const ll k = x.delta;
             return x.n == x.q * x.q - 1 && x.kappa == x.q * x.q - 2 * k + 2 && k >= 2 && k <= 2 * x.q - 2;
         }},
        {3, 7, "n=(q^2+1)/10, kappa=(q^2+1)/5-2k+3, delta=k", "q=10m+3, 2<=k<=6m+2, even d",
         [](const Rec& x) {
             if (x.q % 10 != 3) return false;
             const ll m = (x.q - 3) / 10;
             const ll k = x.delta;
             return 10 * x.n == x.q * x.q + 1 && x.kappa == (x.q * x.q + 1) / 5 - 2 * k + 3 && k >= 2 &&
                    k <= 6 * m + 2 && even(x.delta);
         }},
        {3, 8, "n=(q^2+1)/10, kappa=(q^2+1)/5-2k+3, delta=k", "q=10m+7, 2<=k<=6m+4, even d",
         [](const Rec& x) {
             if (x.q % 10 != 7) return false;
             const ll m = (x.q - 7) / 10;
             const ll k = x.delta;
             return 10 * x.n == x.q * x.q + 1 && x.kappa == (x.q * x.q + 1) / 5 - 2 * k + 3 && k >= 2 &&
                    k <= 6 * m + 4 && even(x.delta);
         }},
        {3, 9, "n=(q^2+1)/h, kappa=(q^2+1)/h-2k+3, delta=k",
         "h in {3,5,7}, h | q+1, (q+1)/h+1 <= k <= (q+1)(h+3)/(2h)-1",
         [](const Rec& x) {
             for (ll h : {3LL, 5LL, 7LL}) {
                 const ll k = x.delta;
                 if ((x.q + 1) % h != 0 || h * x.n != x.q * x.q + 1) continue;
                 if (x.kappa != x.n - 2 * k + 3) continue;
                 if (k >= (x.q + 1) / h + 1 && 2 * h * (k + 1) <= (x.q + 1) * (h + 3)) return true;
             }
             return false;
         }},
        {3, 10, "n=t r^z+s, kappa=t r+s-2k-1, delta=k+1",
         "q=p^m, r=p^e, e | m, 1<=t<=r, 1<=z<=2m/e-1, 1<=k<=floor((n-1+q)/(q+1)), s in {0,1}",
         [](const Rec& x) {
             const auto pm = prime_power(static_cast<std::uint64_t>(x.q));
             if (!pm) return false;
             const ll p = pm->first;
             const ll mm = pm->second;
             const ll k = x.delta - 1;
             if (k < 1 || k > (x.n - 1 + x.q) / (x.q + 1)) return false;
             for (ll e = 1; e <= mm; ++e) {
                 if (mm % e != 0) continue;
                 ll r = 1;
                 for (ll i = 0; i < e; ++i) r *= p;
                 for (ll z = 1; z <= 2 * mm / e - 1; ++z) {
                     ll rz = 1;
                     for (ll i = 0; i < z && rz <= x.n; ++i) rz *= r;
                     for (ll t = 1; t <= r; ++t) {
                         for (ll s : {0LL, 1LL}) {
                             if (x.n == t * rz + s && x.kappa == t * r + s - 2 * k - 1) return true;
                         }
                     }
                 }
             }
             return false;
         }},
        {3, 11, "n=t r+s, kappa=t r+s-2k-1, delta=k+1",
         "1<=t<=(q-1)/a, a=r/gcd(r,q+1), r | q^2-1, 1<=k<=floor((n+q)/(q+1))",
         [](const Rec& x) {
             const ll k = x.delta - 1;
             if (k < 1 || k > (x.n + x.q) / (x.q + 1) || x.kappa != x.n - 2 * k - 1) return false;
             const ll big = x.q * x.q - 1;
             for (ll r = 1; r <= big; ++r) {
                 if (big % r != 0) continue;
                 const ll a = r / std::gcd(r, x.q + 1);
                 for (ll t = 1; t <= (x.q - 1) / a; ++t) {
                     for (ll s : {0LL, 1LL}) {
                         if (x.n == t * r + s) return true;
                     }
                 }
             }
             return false;
         }},
    };
    return rows;
}

const std::vector<Row>& subsystem_rows() {
    static const std::vector<Row> rows = {
        {4, 1, "n=q^2-1-s, kappa=q^2-2k-1-l+s, r=l, delta=k+1-s", "0<=k<q-1, s in [0,k], 0<=l<q^2-2k-1",
         [](const Rec& x) {
             const ll s = x.q * x.q - 1 - x.n;
             const ll k = x.delta - 1 + s;
             const ll l = x.r;
             return s >= 0 && k >= 0 && k < x.q - 1 && s <= k && l < x.q * x.q - 2 * k - 1 &&
                    x.kappa == x.q * x.q - 2 * k - 1 - l + s;
         }},
        {4, 2, "n=q^2-s, kappa=q^2-2k-2-l+s, r=l, delta=k+2-s", "0<=k<q-1, s in [0,k+1], 0<=l<q^2-2k-2",
         [](const Rec& x) {
             const ll s = x.q * x.q - x.n;
             const ll k = x.delta - 2 + s;
             const ll l = x.r;
             return s >= 0 && k >= 0 && k < x.q - 1 && s <= k + 1 && l < x.q * x.q - 2 * k - 2 &&
                    x.kappa == x.q * x.q - 2 * k - 2 - l + s;
         }},
        // The kappa exponent follows the family's description as (2^m-1)^2.
        {4, 3, "n=2^(2m)+1, kappa=(2^m-1)^2, r=4, delta=2^m-1", "q=2^m, m>=1",
         [](const Rec& x) {
             const auto pm = prime_power(static_cast<std::uint64_t>(x.q));
             return pm && pm->first == 2 && x.n == x.q * x.q + 1 && x.kappa == (x.q - 1) * (x.q - 1) && x.r == 4 &&
                    x.delta == x.q - 1;
         }},
    };
    return rows;
}

std::vector<KnownMatch> run(const std::vector<Row>& rows, const Rec& rec) {
    std::vector<KnownMatch> out;
    for (const Row& row : rows) {
        if (row.test(rec)) out.push_back({row.table, row.row, row.pattern, row.constraints});
    }
    return out;
}

}  // namespace

std::vector<KnownMatch> compare_known(const EaqeccParams& p) {
    if (p.c != 1 || p.q < 2) return {};
    return run(eaqecc_rows(), {p.q, static_cast<ll>(p.n), static_cast<ll>(p.kappa), 0, static_cast<ll>(p.delta())});
}

std::vector<KnownMatch> compare_known(const SubsystemParams& p) {
    if (p.q < 2) return {};
    return run(subsystem_rows(), {p.q, static_cast<ll>(p.n), static_cast<ll>(p.kappa), static_cast<ll>(p.r),
                                  static_cast<ll>(p.delta())});
}

std::string describe_matches(const std::vector<KnownMatch>& matches) {
    if (matches.empty()) return "no known-family match\n";
    std::string out;
    for (const auto& m : matches) {
        out += "table " + std::to_string(m.table) + " row " + std::to_string(m.row) + ": " + m.pattern + " (" +
               m.constraints + ")\n";
    }
    return out;
}

}  // namespace hullprop
