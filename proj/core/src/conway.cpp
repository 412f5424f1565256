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

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hullprop/galois.hpp"

namespace hullprop {

namespace {

struct ConwayEntry {
    std::uint32_t p;
    std::uint32_t m;
    std::array<std::uint8_t, 11> coeffs;  // constant term first, monic
};

// Lübeck's Conway polynomial tables, every p^m <= 1024 with m >= 2.
constexpr ConwayEntry kConway[] = {
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},
    {2, 4, {1, 1, 0, 0, 1}},
    {2, 5, {1, 0, 1, 0, 0, 1}},
    {2, 6, {1, 1, 0, 1, 1, 0, 1}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
    {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
    {2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
    {2, 10, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}},
    {3, 2, {2, 2, 1}},
    {3, 3, {1, 2, 0, 1}},
    {3, 4, {2, 0, 0, 2, 1}},
    {3, 5, {1, 2, 0, 0, 0, 1}},
    {3, 6, {2, 2, 1, 0, 2, 0, 1}},
    {5, 2, {2, 4, 1}},
    {5, 3, {3, 3, 0, 1}},
    {5, 4, {2, 4, 4, 0, 1}},
    {7, 2, {3, 6, 1}},
    {7, 3, {4, 0, 6, 1}},
    {11, 2, {2, 7, 1}},
    {13, 2, {2, 12, 1}},
    {17, 2, {3, 16, 1}},
    {19, 2, {2, 18, 1}},
    {23, 2, {5, 21, 1}},
    {29, 2, {2, 24, 1}},
    {31, 2, {3, 29, 1}},
};

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t mod) {
    std::uint64_t r = 1 % mod;
    b %= mod;
    while (e > 0) {
        if (e & 1U) r = r * b % mod;
        b = b * b % mod;
        e >>= 1U;
    }
    return r;
}

// Least primitive root mod p. The degree-1 Conway polynomial is x - g.
std::uint32_t least_primitive_root(std::uint32_t p) {
    if (p == 2) return 1;
    std::vector<std::uint32_t> factors;
    std::uint32_t n = p - 1;
    for (std::uint32_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            factors.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) factors.push_back(n);
    for (std::uint32_t g = 2; g < p; ++g) {
        bool primitive = true;
        for (std::uint32_t f : factors) {
            if (pow_mod(g, (p - 1) / f, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    return 1;
}

}  // namespace

std::optional<std::vector<std::uint32_t>> conway_polynomial(std::uint32_t p, std::uint32_t m) {
    if (m == 1) {
        const std::uint32_t g = least_primitive_root(p);
        return std::vector<std::uint32_t>{(p - g) % p, 1};
    }
    for (const auto& entry : kConway) {
        if (entry.p == p && entry.m == m) {
            return std::vector<std::uint32_t>(entry.coeffs.begin(), entry.coeffs.begin() + m + 1);
        }
    }
    return std::nullopt;
}

}  // namespace hullprop
