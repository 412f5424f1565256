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

#include "hullprop/qparams.hpp"

#include <algorithm>

#include "json.hpp"

namespace hullprop {

std::string_view to_string(Tri t) {
    switch (t) {
        case Tri::No: return "no";
        case Tri::Yes: return "yes";
        case Tri::Unknown: return "unknown";
    }
    return "unknown";
}

std::string_view to_string(BoundId id) {
    switch (id) {
        case BoundId::EA1: return "EA-1";
        case BoundId::EA2: return "EA-2";
        case BoundId::EA3: return "EA-3";
        case BoundId::EAQMDS: return "EA-QMDS";
        case BoundId::SubSingleton: return "SUB-SINGLETON";
    }
    return "?";
}

namespace {

using ll = long long;

std::string code_summary(std::string_view label, const LinearCode& c, std::size_t ell) {
    return std::string(label) + " [" + std::to_string(c.n()) + "," + std::to_string(c.k()) + "] over " +
           c.field()->name() + ", hull dim " + std::to_string(ell);
}

// Exact relative weight when affordable, otherwise the certified lower bound.
void fill_delta(std::size_t& lower, std::optional<std::size_t>& exact, const LinearCode& a, const LinearCode& b,
                std::uint64_t budget) {
    try {
        exact = relative_min_weight(a, b, budget);
        lower = *exact;
    } catch (const BudgetExceeded& e) {
        exact.reset();
        lower = e.lower_bound();
    }
}

Tri purity(const std::optional<std::size_t>& delta, const LinearCode& ambient, bool trivially_pure,
           std::uint64_t budget) {
    if (!delta) return Tri::Unknown;
    if (trivially_pure) return Tri::Yes;
    try {
        return min_distance(ambient, budget) == *delta ? Tri::Yes : Tri::No;
    } catch (const BudgetExceeded&) {
        return Tri::Unknown;
    }
}

Tri tight_if(bool exact, ll slack) {
    if (!exact) return Tri::Unknown;
    return slack == 0 ? Tri::Yes : Tri::No;
}

BoundVerdict verdict(BoundId id, bool exact, ll slack) { return {id, slack >= 0, tight_if(exact, slack), slack}; }

const BoundVerdict* find(const std::vector<BoundVerdict>& v, BoundId id) {
    for (const auto& b : v) {
        if (b.id == id) return &b;
    }
    return nullptr;
}

std::string describe_set(std::span<const std::size_t> s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

void require(bool ok, const std::string& what) {
    if (!ok) raise(ErrorCode::ContractViolation, what);
}

struct PreparedSet {
    std::vector<std::size_t> coords;
    HullReport hull;
};

PreparedSet prepare_set(const LinearCode& code, std::size_t s, const PropagationOptions& opts) {
    HullReport h = hull(code, InnerProduct::Hermitian);
    std::vector<std::size_t> coords;
    if (opts.coordinates) {
        coords = normalize_index_set(*opts.coordinates, code.n());
        if (coords.size() != s) raise(ErrorCode::ParameterOutOfRange, "explicit coordinate set does not have size s");
    }
    if (s > h.ell) {
        raise(ErrorCode::SOutOfRange, "s = " + std::to_string(s) + " exceeds the hull dimension " + std::to_string(h.ell));
    }
    if (opts.coordinates) {
        if (!extends_to_information_set(h.hull, coords)) {
            raise(ErrorCode::ParameterOutOfRange, "coordinates are not inside an information set of the hull");
        }
    } else {
        coords.assign(h.hull.pivots().begin(), h.hull.pivots().begin() + static_cast<std::ptrdiff_t>(s));
    }
    return {std::move(coords), std::move(h)};
}

std::string rule_note(DeriveMode mode, std::span<const std::size_t> coords, bool unsafe) {
    std::string note = std::string(to_string(mode)) + " s=" + std::to_string(coords.size()) + " S=" + describe_set(coords);
    if (unsafe) note += " (unsafe: source purity not established)";
    return note;
}

}  // namespace

EaqeccParams eaqecc_from_code(const LinearCode& code, std::uint64_t budget, std::string_view label) {
    EaqeccParams p;
    p.q = hermitian_base(*code.field());
    if (code.k() == code.n()) raise(ErrorCode::NoDual, "the full space has a zero Hermitian dual");
    const HullReport h = hull(code, InnerProduct::Hermitian);
    const LinearCode d = dual(code, InnerProduct::Hermitian);
    if (d == h.hull) raise(ErrorCode::NoLogicalQudits, "the Hermitian dual equals the hull, so kappa = 0");

    p.n = code.n();
    p.c = code.k() - h.ell;
    p.kappa = code.n() - code.k() - h.ell;  // n - 2k + c
    fill_delta(p.delta_lower, p.delta_exact, d, h.hull, budget);
    p.pure = purity(p.delta_exact, d, h.ell == 0, budget);
    p.provenance.push_back(code_summary(label, code, h.ell));
    return p;
}

std::pair<EaqeccParams, EaqeccParams> eaqecc_pair(const LinearCode& code, std::uint64_t budget) {
    return {eaqecc_from_code(code, budget, "code"),
            eaqecc_from_code(dual(code, InnerProduct::Hermitian), budget, "Hermitian dual")};
}

SubsystemParams subsystem_from_code(const LinearCode& code, std::uint64_t budget, std::string_view label) {
    SubsystemParams p;
    p.q = hermitian_base(*code.field());
    const HullReport h = hull(code, InnerProduct::Hermitian);
    if (code.k() + h.ell >= code.n()) {
        raise(ErrorCode::DimensionConstraintViolated, "k + ell = " + std::to_string(code.k() + h.ell) +
                                                          " is not below n = " + std::to_string(code.n()));
    }
    const LinearCode ambient = dual(h.hull, InnerProduct::Hermitian);
    p.n = code.n();
    p.kappa = code.n() - code.k() - h.ell;
    p.r = code.k() - h.ell;
    fill_delta(p.delta_lower, p.delta_exact, ambient, code, budget);
    p.pure = purity(p.delta_exact, ambient, code.k() == 0, budget);
    p.provenance.push_back(code_summary(label, code, h.ell));
    return p;
}

std::vector<BoundVerdict> check_bounds(const EaqeccParams& p) {
    const bool exact = p.delta_exact.has_value();
    const ll n = static_cast<ll>(p.n);
    const ll k = static_cast<ll>(p.kappa);
    const ll c = static_cast<ll>(p.c);
    const ll d = static_cast<ll>(p.delta());
    std::vector<BoundVerdict> out;
    out.push_back(verdict(BoundId::EA1, exact, c + std::max<ll>(0, n - 2 * d + 2) - k));
    out.push_back(verdict(BoundId::EA2, exact, n - d + 1 - k));
    if (2 * (d - 1) >= n) {
        const ll den = 3 * d - 3 - n;  // positive whenever the bound applies
        out.push_back(verdict(BoundId::EA3, exact, (n - d + 1) * (c + 2 * d - 2 - n) - k * den));
    }
    out.push_back(verdict(BoundId::EAQMDS, exact, n + c - k + 2 - 2 * d));
    return out;
}

std::vector<BoundVerdict> check_bounds(const SubsystemParams& p) {
    const ll n = static_cast<ll>(p.n);
    const ll d = static_cast<ll>(p.delta());
    const ll lhs = static_cast<ll>(p.kappa + p.r);
    return {verdict(BoundId::SubSingleton, p.delta_exact.has_value(), n - 2 * d + 2 - lhs)};
}

Tri is_optimal(const EaqeccParams& p) { return find(check_bounds(p), BoundId::EAQMDS)->tight; }

Tri is_optimal(const SubsystemParams& p) { return find(check_bounds(p), BoundId::SubSingleton)->tight; }

Tri is_qmds(const EaqeccParams& p) {
    const auto v = check_bounds(p);
    if (2 * p.delta() <= p.n) return find(v, BoundId::EA1)->tight;
    if (const auto* ea3 = find(v, BoundId::EA3)) return ea3->tight;
    return p.delta_exact ? Tri::No : Tri::Unknown;
}

std::vector<std::size_t> default_propagation_set(const LinearCode& code, std::size_t s) {
    return prepare_set(code, s, {}).coords;
}

EaqeccParams propagate_eaqecc(const LinearCode& code, std::size_t s, DeriveMode mode, const PropagationOptions& opts) {
    const EaqeccParams src = eaqecc_from_code(code, opts.budget, "source");
    const PreparedSet set = prepare_set(code, s, opts);
    const bool shorten_mode = mode == DeriveMode::Shorten;
    const bool unsafe = shorten_mode && src.pure != Tri::Yes;
    if (unsafe && !opts.unsafe) {
        raise(ErrorCode::PurityRequired, "the shorten rule needs a pure source (purity: " +
                                             std::string(to_string(src.pure)) + ")");
    }

    EaqeccParams out = eaqecc_from_code(derive(code, set.coords, mode), opts.budget, "derived");
    const std::string ctx = " after " + rule_note(mode, set.coords, unsafe);
    require(out.n == src.n - s, "length is not n - s" + ctx);
    require(out.kappa == src.kappa + (shorten_mode ? s : 0), "kappa contract broken" + ctx);
    require(out.c == src.c + (shorten_mode ? 0 : s), "entanglement contract broken" + ctx);

    const std::size_t floor = shorten_mode ? (src.delta() > s ? src.delta() - s : 0) : src.delta();
    if (unsafe) {
        if (!out.delta_exact) out.delta_lower = 0;
    } else if (src.delta_exact) {
        require(out.delta_exact ? *out.delta_exact >= floor : true, "distance dropped below the guarantee" + ctx);
        out.delta_lower = std::max(out.delta_lower, floor);
    }
    if (!unsafe && is_optimal(src) == Tri::Yes && out.delta_exact) {
        require(is_optimal(out) == Tri::Yes, "optimal source produced a non-optimal code" + ctx);
    }

    out.provenance = src.provenance;
    out.provenance.push_back(rule_note(mode, set.coords, unsafe));
    return out;
}

SubsystemParams propagate_subsystem(const LinearCode& code, std::size_t s, DeriveMode mode,
                                    const PropagationOptions& opts) {
    const SubsystemParams src = subsystem_from_code(code, opts.budget, "source");
    const PreparedSet set = prepare_set(code, s, opts);
    const bool shorten_mode = mode == DeriveMode::Shorten;
    const bool unsafe = shorten_mode && src.pure != Tri::Yes;
    if (unsafe && !opts.unsafe) {
        raise(ErrorCode::PurityRequired, "the shorten rule needs a pure source (purity: " +
                                             std::string(to_string(src.pure)) + ")");
    }

    SubsystemParams out = subsystem_from_code(derive(code, set.coords, mode), opts.budget, "derived");
    const std::string ctx = " after " + rule_note(mode, set.coords, unsafe);
    require(out.n == src.n - s, "length is not n - s" + ctx);
    require(out.kappa == src.kappa + (shorten_mode ? s : 0), "kappa contract broken" + ctx);
    require(out.r == src.r + (shorten_mode ? 0 : s), "gauge contract broken" + ctx);

    const std::size_t floor = src.delta() > s ? src.delta() - s : 0;
    if (unsafe) {
        if (!out.delta_exact) out.delta_lower = 0;
    } else if (src.delta_exact) {
        require(out.delta_exact ? *out.delta_exact >= floor : true, "distance dropped below the guarantee" + ctx);
        out.delta_lower = std::max(out.delta_lower, floor);
    }
    if (!unsafe && is_optimal(src) == Tri::Yes && out.delta_exact) {
        require(is_optimal(out) == Tri::Yes, "optimal source produced a non-optimal code" + ctx);
    }

    out.provenance = src.provenance;
    out.provenance.push_back(rule_note(mode, set.coords, unsafe));
    return out;
}

std::string format_params(const EaqeccParams& p) {
    const std::string d = (p.delta_exact ? "" : ">=") + std::to_string(p.delta());
    return "[[" + std::to_string(p.n) + "," + std::to_string(p.kappa) + "," + d + ";" + std::to_string(p.c) + "]]_" +
           std::to_string(p.q);
}

std::string format_params(const SubsystemParams& p) {
    const std::string d = (p.delta_exact ? "" : ">=") + std::to_string(p.delta());
    return "[[" + std::to_string(p.n) + "," + std::to_string(p.kappa) + "," + std::to_string(p.r) + "," + d + "]]_" +
           std::to_string(p.q);
}

namespace {

nlohmann::ordered_json tri_json(Tri t) {
    if (t == Tri::Unknown) return nullptr;
    return t == Tri::Yes;
}

}  // namespace

std::string to_json(const EaqeccParams& p) {
    nlohmann::ordered_json j;
    j["type"] = "eaqecc";
    j["q"] = p.q;
    j["n"] = p.n;
    j["kappa"] = p.kappa;
    j["delta"] = p.delta();
    j["delta_exact"] = p.delta_exact.has_value();
    j["c"] = p.c;
    j["pure"] = tri_json(p.pure);
    j["optimal"] = tri_json(is_optimal(p));
    j["provenance"] = p.provenance;
    return j.dump();
}

std::string to_json(const SubsystemParams& p) {
    nlohmann::ordered_json j;
    j["type"] = "subsystem";
    j["q"] = p.q;
    j["n"] = p.n;
    j["kappa"] = p.kappa;
    j["r"] = p.r;
    j["delta"] = p.delta();
    j["delta_exact"] = p.delta_exact.has_value();
    j["pure"] = tri_json(p.pure);
    j["optimal"] = tri_json(is_optimal(p));
    j["provenance"] = p.provenance;
    return j.dump();
}

}  // namespace hullprop
