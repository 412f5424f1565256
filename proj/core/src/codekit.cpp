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

#include "hullprop/codekit.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace hullprop {

std::string_view to_string(InnerProduct ip) {
    return ip == InnerProduct::Euclidean ? "euclid" : "hermitian";
}

std::string_view to_string(DeriveMode mode) {
    return mode == DeriveMode::Puncture ? "puncture" : "shorten";
}

LinearCode::LinearCode(const FMatrix& generator) {
    if (!generator.field()) raise(ErrorCode::ContractViolation, "generator matrix has no field");
    auto r = rref(generator);
    gen_ = std::move(r.reduced);
    pivots_ = std::move(r.pivots);
}

LinearCode LinearCode::zero(FieldPtr field, std::size_t n) { return LinearCode(FMatrix(std::move(field), 0, n)); }

LinearCode LinearCode::full(FieldPtr field, std::size_t n) {
    return LinearCode(FMatrix::identity(std::move(field), n));
}

bool LinearCode::contains(std::span<const Felt> v) const {
    if (v.size() != n()) raise(ErrorCode::LengthMismatch, "vector length differs from code length");
    std::vector<Field::Log> raw(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        field()->check(v[i]);
        raw[i] = v[i].log;
    }
    return contains_raw(raw);
}

bool LinearCode::contains_raw(std::span<const Field::Log> v) const {
    const Field& f = *field();
    std::vector<Field::Log> residual(v.begin(), v.end());
    // Each RREF row is the only one touching its pivot column, so clearing the
    // pivots in order leaves a residual that is zero iff v is in the span.
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const Field::Log coef = residual[pivots_[i]];
        if (coef == Field::kZero) continue;
        const Field::Log neg = f.neg_raw(coef);
        const auto row = gen_.row_raw(i);
        for (std::size_t j = pivots_[i]; j < residual.size(); ++j) {
            if (row[j] != Field::kZero) residual[j] = f.add_raw(residual[j], f.mul_raw(neg, row[j]));
        }
    }
    return std::all_of(residual.begin(), residual.end(), [](Field::Log x) { return x == Field::kZero; });
}

bool LinearCode::contains(const LinearCode& sub) const {
    if (sub.field() != field()) raise(ErrorCode::FieldMismatch, "codes live over different fields");
    if (sub.n() != n()) raise(ErrorCode::LengthMismatch, "codes have different lengths");
    for (std::size_t i = 0; i < sub.k(); ++i) {
        if (!contains_raw(sub.generator().row_raw(i))) return false;
    }
    return true;
}

std::uint32_t hermitian_base(const Field& field) {
    auto q = field.base_order();
    if (!q) raise(ErrorCode::NotQuadraticExtension, field.name() + " is not a quadratic extension");
    return *q;
}

namespace {

FMatrix gram_conjugate(const LinearCode& c, InnerProduct ip) {
    const FMatrix& g = c.generator();
    if (ip == InnerProduct::Euclidean) return g;
    return conjugate(g, hermitian_base(*c.field()));
}

void require_compatible(const LinearCode& a, const LinearCode& b) {
    if (a.field() != b.field()) raise(ErrorCode::FieldMismatch, "codes live over different fields");
    if (a.n() != b.n()) raise(ErrorCode::LengthMismatch, "codes have different lengths");
}

}  // namespace

LinearCode dual(const LinearCode& c, InnerProduct ip) {
    // x is orthogonal to every row g exactly when conj(g) . x = 0.
    return LinearCode(nullspace(gram_conjugate(c, ip)));
}

HullReport hull(const LinearCode& c, InnerProduct ip) {
    const FMatrix& g = c.generator();
    const FMatrix gram = mul(g, transpose(gram_conjugate(c, ip)));
    // u G lies in the dual iff u (G G^dagger) = 0.
    const FMatrix coeffs = left_nullspace(gram);
    LinearCode h(mul(coeffs, g));
    const std::size_t ell = c.k() - rank(gram);
    if (h.k() != ell) raise(ErrorCode::ContractViolation, "hull dimension disagrees with the Gram rank");
    return HullReport{std::move(h), ell, std::nullopt, ip};
}

LinearCode intersect(const LinearCode& a, const LinearCode& b) {
    require_compatible(a, b);
    const FMatrix stacked = vstack(a.generator(), b.generator());
    const FMatrix rel = left_nullspace(stacked);  // (u, v) with uA + vB = 0
    auto [ua, ub] = hsplit(rel, a.k());
    (void)ub;
    if (ua.rows() == 0) return LinearCode::zero(a.field(), a.n());
    return LinearCode(mul(ua, a.generator()));
}

std::vector<std::size_t> normalize_index_set(std::span<const std::size_t> s, std::size_t n) {
    std::vector<std::size_t> out(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (!out.empty() && out.back() >= n) {
        raise(ErrorCode::IndexOutOfRange,
              "coordinate " + std::to_string(out.back()) + " outside [0, " + std::to_string(n) + ")");
    }
    return out;
}

LinearCode puncture(const LinearCode& c, std::span<const std::size_t> s) {
    const auto idx = normalize_index_set(s, c.n());
    return LinearCode(drop_columns(c.generator(), idx));
}

LinearCode shorten(const LinearCode& c, std::span<const std::size_t> s) {
    const auto idx = normalize_index_set(s, c.n());
    const FMatrix& g = c.generator();
    // Messages whose codewords vanish on S, then drop S.
    const FMatrix coeffs = left_nullspace(select_columns(g, idx));
    if (coeffs.rows() == 0) return LinearCode::zero(c.field(), c.n() - idx.size());
    return LinearCode(drop_columns(mul(coeffs, g), idx));
}

LinearCode derive(const LinearCode& c, std::span<const std::size_t> s, DeriveMode mode) {
    return mode == DeriveMode::Puncture ? puncture(c, s) : shorten(c, s);
}

std::vector<std::size_t> information_set(const LinearCode& c) { return c.pivots(); }

bool extends_to_information_set(const LinearCode& c, std::span<const std::size_t> s) {
    const auto idx = normalize_index_set(s, c.n());
    if (idx.size() > c.k()) return false;
    return rank(select_columns(c.generator(), idx)) == idx.size();
}

LinearCode apply_monomial(const LinearCode& c, const MonomialMap& m) {
    const std::size_t n = c.n();
    if (m.perm.size() != n || m.scalars.size() != n) {
        raise(ErrorCode::LengthMismatch, "monomial map length differs from code length");
    }
    std::vector<bool> seen(n, false);
    for (std::size_t p : m.perm) {
        if (p >= n || seen[p]) raise(ErrorCode::ParameterOutOfRange, "monomial map permutation is not a bijection");
        seen[p] = true;
    }
    const Field& f = *c.field();
    for (const Felt& a : m.scalars) {
        f.check(a);
        if (a.is_zero()) raise(ErrorCode::ZeroMultiplier, "monomial map has a zero scalar");
    }
    const FMatrix& g = c.generator();
    FMatrix out(c.field(), c.k(), n);
    for (std::size_t r = 0; r < c.k(); ++r) {
        for (std::size_t i = 0; i < n; ++i) out.raw(r, i) = f.mul_raw(m.scalars[i].log, g.raw(r, m.perm[i]));
    }
    return LinearCode(out);
}

DerivedHullReport hull_of_derived(const LinearCode& c, std::span<const std::size_t> s, DeriveMode mode,
                                  InnerProduct ip) {
    const auto idx = normalize_index_set(s, c.n());
    HullReport base = hull(c, ip);
    LinearCode sh = shorten(base.hull, idx);
    const bool in_info = extends_to_information_set(base.hull, idx);
    HullReport derived = hull(derive(c, idx, mode), ip);
    if (in_info) {
        if (derived.ell != base.ell - idx.size() || !(derived.hull == sh)) {
            raise(ErrorCode::ContractViolation, "hull of the derived code differs from the shortened hull");
        }
    } else if (!derived.hull.contains(sh)) {
        raise(ErrorCode::ContractViolation, "shortened hull is not contained in the derived hull");
    }
    return DerivedHullReport{std::move(derived), std::move(sh), in_info, !in_info};
}

LinearCode make_lcd(const LinearCode& c, DeriveMode mode, InnerProduct ip) {
    HullReport h = hull(c, ip);
    if (h.ell == 0) return c;
    LinearCode out = derive(c, h.hull.pivots(), mode);
    if (hull(out, ip).ell != 0) raise(ErrorCode::ContractViolation, "derived code is not LCD");
    return out;
}

void compute_d2(HullReport& report, std::uint64_t budget) {
    report.d2 = min_distance(dual(report.hull, report.inner_product), budget);
}

std::size_t weight(std::span<const Felt> v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const Felt& x) { return !x.is_zero(); }));
}

std::string format_code(const LinearCode& c) {
    std::ostringstream os;
    write_code(os, c);
    return os.str();
}

void write_code(std::ostream& out, const LinearCode& c) {
    out << "code " << c.field()->name() << ' ' << c.n() << ' ' << c.k() << '\n';
    write_matrix(out, c.generator());
}

LinearCode read_code(std::istream& in) {
    std::string header;
    while (header.empty()) {
        if (!std::getline(in, header)) raise(ErrorCode::ParseError, "missing code header");
        if (!header.empty() && header.back() == '\r') header.pop_back();
    }
    std::istringstream hs(header);
    std::string tag;
    std::string field_name;
    long long n = -1;
    long long k = -1;
    std::string extra;
    if (!(hs >> tag >> field_name >> n >> k) || tag != "code" || (hs >> extra) || n < 0 || k < 0) {
        raise(ErrorCode::ParseError, "bad code header '" + header + "', expected 'code GF(p^m) n k'");
    }
    if (k == 0) raise(ErrorCode::ParseError, "zero-dimensional code has no generator to read");
    FieldPtr field = parse_field_name(field_name);
    FMatrix g = read_matrix(in);
    if (g.field() != field) raise(ErrorCode::ParseError, "matrix field differs from code header");
    if (g.rows() != static_cast<std::size_t>(k) || g.cols() != static_cast<std::size_t>(n)) {
        raise(ErrorCode::ParseError, "matrix shape differs from code header");
    }
    LinearCode c(g);
    if (c.k() != g.rows()) raise(ErrorCode::ParseError, "generator rows are linearly dependent");
    return c;
}

}  // namespace hullprop
