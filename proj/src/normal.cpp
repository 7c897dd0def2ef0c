/*
   Copyright 2026 the somoscf authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "somoscf/normal.hpp"

#include <random>

namespace somoscf {

CurveParams CurveParams::full(FieldScalar f, FieldScalar g, FieldScalar u, FieldScalar v, FieldScalar w) {
    require_same_field(f, g);
    require_same_field(f, u);
    require_same_field(f, v);
    require_same_field(f, w);
    if (u.is_zero()) throw unsupported_error("full mode needs u != 0");
    return CurveParams{CurveMode::Full, std::move(f), std::move(g), std::move(u), std::move(v), std::move(w)};
}

CurveParams CurveParams::reduced(FieldScalar f, FieldScalar g, FieldScalar v, FieldScalar w) {
    require_same_field(f, g);
    require_same_field(f, v);
    require_same_field(f, w);
    if (v.is_zero()) throw unsupported_error("reduced mode needs v != 0");
    FieldScalar zero = FieldScalar::of(f.field(), 0);
    return CurveParams{CurveMode::Reduced, std::move(f), std::move(g), zero, std::move(v), std::move(w)};
}

Poly CurveParams::A() const {
    Field fd = field();
    return Poly::from_coeffs(fd, {g, f, FieldScalar::of(fd, 0), FieldScalar::of(fd, 1)});
}

Poly CurveParams::R() const {
    Field fd = field();
    if (mode == CurveMode::Full) return Poly::from_coeffs(fd, {u * w, -(u * v), u});
    return Poly::from_coeffs(fd, {v * w, -v});  // -v(X - w)
}

Poly CurveParams::D() const {
    Poly a = A();
    return a * a + Poly(FieldScalar::of(field(), 4)) * R();
}

bool CurveParams::operator==(const CurveParams& o) const {
    if (mode != o.mode || !(f == o.f) || !(g == o.g) || !(v == o.v) || !(w == o.w)) return false;
    return mode == CurveMode::Reduced || u == o.u;
}

Poly NormalLine::P() const {
    Field fd = d.field();
    return Poly::from_coeffs(fd, {d * e, d});
}

Poly NormalLine::Q() const {
    Field fd = d.field();
    return Poly::from_coeffs(fd, {u * w, -(u * v), u});
}

bool NormalLine::operator==(const NormalLine& o) const { return h == o.h && same_values(o); }

bool NormalLine::same_values(const NormalLine& o) const {
    return d == o.d && e == o.e && u == o.u && v == o.v && w == o.w;
}

Poly partial_quotient(const NormalLine& line) {
    if (line.u.is_zero()) throw zero_division_error("line with u = 0");
    Field fd = line.d.field();
    FieldScalar ui = line.u.inverse();
    return Poly::from_coeffs(fd, {line.v * ui, ui});
}

bool seed_validate(const CurveParams& curve, const NormalLine& line) {
    if (line.d.is_zero() || line.u.is_zero()) return false;
    Field fd = curve.field();
    Poly P = line.P();
    Poly norm = P * P + curve.A() * P - curve.R();
    Poly Qmonic = Poly::from_coeffs(fd, {line.w, -line.v, FieldScalar::of(fd, 1)});
    return poly_divides(Qmonic, norm);
}

namespace {

struct RemainderWeights {
    FieldScalar U, UV, UW;  // u, uv, uw with the reduced-mode substitution applied
};

RemainderWeights weights(const CurveParams& c) {
    FieldScalar zero = FieldScalar::of(c.field(), 0);
    if (c.mode == CurveMode::Full) return {c.u, c.u * c.v, c.u * c.w};
    return {zero, c.v, c.v * c.w};
}

void consistency_checks(const CurveParams& c, const NormalLine& l0, const NormalLine& l1) {
    RemainderWeights W = weights(c);
    FieldScalar d1i = l1.d.inverse();
    FieldScalar lhs1 = (c.f + l1.d) * l1.e + (c.g + l1.d * l1.e);
    FieldScalar rhs1 = -(l0.v * l1.w) - l1.v * l0.w - W.UV * d1i;
    if (!(lhs1 == rhs1)) throw inconsistency_error("X^1 coefficient equation failed after stepping");
    FieldScalar lhs0 = (c.g + l1.d * l1.e) * l1.e;
    FieldScalar rhs0 = l0.w * l1.w + W.UW * d1i;
    if (!(lhs0 == rhs0)) throw inconsistency_error("X^0 coefficient equation failed after stepping");
}

}  // namespace

NormalLine step_forward(const CurveParams& curve, const NormalLine& line) {
    if (line.d.is_zero() || line.u.is_zero()) throw std::invalid_argument("line with d = 0 or u = 0");
    RemainderWeights W = weights(curve);
    FieldScalar d1 = -(line.v * line.v) + line.w - curve.f - line.d;
    if (d1.is_zero()) {
        throw degeneracy_error(line.h + 1, "d vanished at h = " + std::to_string(line.h + 1) +
                                               ": partial quotient of degree > 1");
    }
    FieldScalar e1 = (line.v * line.w - curve.g - line.d * line.e) / d1;
    FieldScalar u1 = -d1 / line.u;
    FieldScalar v1 = -line.v - e1;
    FieldScalar w1 = (curve.f + d1) - line.v * v1 - line.w - W.U / d1;
    NormalLine next{line.h + 1, d1, e1, u1, v1, w1};
    consistency_checks(curve, line, next);
    return next;
}

NormalLine step_backward(const CurveParams& curve, const NormalLine& line) {
    if (line.d.is_zero() || line.u.is_zero()) throw std::invalid_argument("line with d = 0 or u = 0");
    RemainderWeights W = weights(curve);
    FieldScalar u0 = -line.d / line.u;
    FieldScalar v0 = -line.e - line.v;
    FieldScalar w0 = (curve.f + line.d) - v0 * line.v - line.w - W.U / line.d;
    FieldScalar d0 = -(v0 * v0) + w0 - curve.f - line.d;
    if (d0.is_zero()) {
        throw degeneracy_error(line.h - 1, "d vanished at h = " + std::to_string(line.h - 1) +
                                               ": partial quotient of degree > 1");
    }
    FieldScalar e0 = (v0 * w0 - curve.g - line.d * line.e) / d0;
    NormalLine prev{line.h - 1, d0, e0, u0, v0, w0};
    consistency_checks(curve, prev, line);
    return prev;
}

namespace {

void require_contiguous(const std::vector<NormalLine>& lines) {
    for (size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].d.is_zero() || lines[i].u.is_zero())
            throw std::invalid_argument("stored line with d = 0 or u = 0");
        if (i > 0 && lines[i].h != lines[i - 1].h + 1)
            throw invalid_window_error("identity_suite needs consecutive lines");
    }
}

}  // namespace

bool IdentityReport::all_pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

std::vector<IdentityCheck> IdentityReport::failures() const {
    std::vector<IdentityCheck> out;
    for (const auto& c : checks) {
        if (!c.pass) out.push_back(c);
    }
    return out;
}

IdentityReport identity_suite(const CurveParams& curve, const std::vector<NormalLine>& lines) {
    require_contiguous(lines);
    IdentityReport rep;
    if (lines.size() < 2) return rep;
    const bool red = curve.mode == CurveMode::Reduced;
    const RemainderWeights W = weights(curve);
    const std::string pr = red ? "'" : "";
    auto push = [&rep](std::string id, long long h, bool ok) {
        rep.checks.push_back(IdentityCheck{std::move(id), h, ok});
    };

    for (size_t i = 0; i + 1 < lines.size(); ++i) {
        const NormalLine& a = lines[i];
        const NormalLine& b = lines[i + 1];
        const long long h = a.h;
        const FieldScalar dd = a.d * b.d;
        const FieldScalar dbi = b.d.inverse();
        push("eq4", h, curve.f + a.d + b.d == -(a.v * a.v) + a.w);
        push("eq5", h, curve.g + a.d * a.e + b.d * b.e == a.v * a.w);
        push("eq6:X4", h, b.d == -(a.u * b.u));
        push("eq6:X3", h, b.e == -a.v - b.v);
        push("eq6:X2", h, curve.f + b.d == a.v * b.v + a.w + b.w + W.U * dbi);
        push("eq6:X1", h, (curve.f + b.d) * b.e + (curve.g + b.d * b.e) == -(a.v * b.w) - b.v * a.w - W.UV * dbi);
        push("eq6:X0", h, (curve.g + b.d * b.e) * b.e == a.w * b.w + W.UW * dbi);
        const FieldScalar core = b.d * (a.v * b.e - b.w);  // d_{h+1}(v_h e_{h+1} - w_{h+1})
        push("eq7a" + pr, h, core == dd + W.U);
        push("eq7b" + pr, h, -a.v * core == dd * (a.e + b.e) - W.UV);
        push("eq7c" + pr, h, a.w * core == dd * a.e * b.e + W.UW);
        push("eq8a" + pr, h, dd * (a.e + b.e + a.v) == W.UV - W.U * a.v);
        push("eq8b" + pr, h, dd * (a.e * b.e - a.w) == W.U * a.w - W.UW);
    }
    for (size_t i = 1; i + 1 < lines.size(); ++i) {
        const NormalLine& p = lines[i - 1];
        const NormalLine& a = lines[i];
        const NormalLine& b = lines[i + 1];
        const long long h = a.h;
        const FieldScalar lhs9 = a.d * b.d + W.U;
        push("eq9" + pr, h,
             lhs9 == b.d * (a.v * b.e - b.w) && lhs9 == a.d * (a.v * a.e - p.w));
        if (red) {
            push("eq10'", h, p.d * a.d * b.d == -curve.v * (a.e + curve.w));
        } else {
            push("eq10", h,
                 (p.d * a.d + curve.u) * (a.d * b.d + curve.u) ==
                     -a.d * (W.U * a.e * a.e + W.UV * a.e + W.UW));
        }
    }
    if (red) {
        for (size_t i = 2; i + 2 < lines.size(); ++i) {
            const FieldScalar& d2m = lines[i - 2].d;
            const FieldScalar& d1m = lines[i - 1].d;
            const FieldScalar& d0 = lines[i].d;
            const FieldScalar& d1p = lines[i + 1].d;
            const FieldScalar& d2p = lines[i + 2].d;
            FieldScalar lhs = d2m * d1m * d1m * d0 * d0 * d0 * d1p * d1p * d2p;
            FieldScalar v3 = curve.v.pow(3);
            FieldScalar rhs = curve.v * curve.v * (d1m * d0 * d0 * d1p) -
                              v3 * (curve.g + curve.w * curve.f + curve.w.pow(3));
            push("eq11", lines[i].h, lhs == rhs);
        }
    }
    return rep;
}

std::pair<CurveParams, NormalLine> random_instance(std::uint64_t rng_seed, CurveMode mode,
                                                   long coefficient_bound, Field field) {
    if (coefficient_bound < 1) throw std::invalid_argument("coefficient_bound must be >= 1");
    std::mt19937_64 rng(rng_seed);
    std::uniform_int_distribution<long> dist(-coefficient_bound, coefficient_bound);
    auto draw = [&] { return FieldScalar::of(field, dist(rng)); };
    auto draw_nonzero = [&] {
        for (int i = 0; i < 1000; ++i) {
            FieldScalar s = draw();
            if (!s.is_zero()) return s;
        }
        throw generation_error("could not draw a nonzero scalar");
    };

    for (int attempt = 0; attempt < 10000; ++attempt) {
        FieldScalar d0 = draw_nonzero(), e0 = draw(), u0 = draw_nonzero(), v0 = draw(), w0 = draw();
        FieldScalar d1 = draw_nonzero(), e1 = draw();
        FieldScalar f = -(v0 * v0) + w0 - d0 - d1;
        FieldScalar g = v0 * w0 - d0 * e0 - d1 * e1;
        FieldScalar dd = d0 * d1;
        CurveParams curve;
        if (mode == CurveMode::Reduced) {
            FieldScalar v = dd * (e0 + e1 + v0);
            if (v.is_zero()) continue;
            FieldScalar w = -(dd * (e0 * e1 - w0)) / v;
            curve = CurveParams::reduced(f, g, v, w);
        } else {
            FieldScalar u = draw_nonzero();
            FieldScalar v = v0 + dd * (e0 + e1 + v0) / u;
            FieldScalar w = w0 - dd * (e0 * e1 - w0) / u;
            curve = CurveParams::full(f, g, u, v, w);
        }
        NormalLine seed{0, d0, e0, u0, v0, w0};
        if (!seed_validate(curve, seed)) continue;
        try {
            NormalLine next = step_forward(curve, seed);
            if (!(next.d == d1) || !(next.e == e1)) continue;
        } catch (const error&) {
            continue;
        }
        return {curve, seed};
    }
    throw generation_error("random_instance exhausted its retries");
}

}  // namespace somoscf
