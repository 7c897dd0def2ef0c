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

#include "somoscf/recover.hpp"

#include <algorithm>

namespace somoscf {

namespace {

const Field kQ{};

// first-order data of one anchor index k, as polynomials in the unknown w
struct AnchorPolys {
    Poly e_k, e_k1;  // numerator shifts at k and k+1
    Poly v_k, w_k;   // denominator data at k
    Poly f, g;       // curve coefficients
};

Poly wconst(const FieldScalar& c) { return Poly(c); }

// e_h = -d_{h-1} d_h d_{h+1}/v - w, then the v_h/w_h eliminations and the
// defining recursions solved for f and g
AnchorPolys anchor_polys(const FieldScalar& dm, const FieldScalar& d0, const FieldScalar& d1,
                         const FieldScalar& d2, const FieldScalar& v) {
    Poly w = Poly::x(kQ);
    AnchorPolys A;
    A.e_k = wconst(-(dm * d0 * d1) / v) - w;
    A.e_k1 = wconst(-(d0 * d1 * d2) / v) - w;
    FieldScalar dd = d0 * d1;
    A.v_k = wconst(v / dd) - A.e_k - A.e_k1;
    A.w_k = A.e_k * A.e_k1 + (v / dd) * w;
    A.f = -(A.v_k * A.v_k) + A.w_k - wconst(d0 + d1);
    A.g = A.v_k * A.w_k - wconst(d0) * A.e_k - wconst(d1) * A.e_k1;
    return A;
}

Poly raw_constraint(const AnchorPolys& A, const FieldScalar& v, const FieldScalar& b) {
    Poly w = Poly::x(kQ);
    Poly inner = A.g + w * A.f + w * w * w;
    return v.pow(3) * inner + wconst(b);
}

Poly normalize_constraint(const Poly& raw) {
    if (raw.is_zero()) return raw;
    mpz_class den_lcm = 1;
    for (const auto& c : raw.coeffs()) {
        if (c.is_zero()) continue;
        mpz_class d = c.rat().get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    Poly out = FieldScalar(mpq_class(den_lcm)) * raw;
    if (out.leading().rat() < 0) out = -out;
    return out;
}

}  // namespace

Poly constraint_poly(const std::array<FieldScalar, 4>& d_quad, const FieldScalar& v, const FieldScalar& b) {
    if (v.is_zero()) throw unsupported_error("constraint_poly needs v != 0");
    for (const auto& d : d_quad) {
        if (d.is_zero()) throw singular_error(0, "zero d value");
    }
    AnchorPolys A = anchor_polys(d_quad[0], d_quad[1], d_quad[2], d_quad[3], v);
    Poly c = normalize_constraint(raw_constraint(A, v, b));
    if (c.degree() > 4) throw error("constraint polynomial exceeded the expected degree bound");
    return c;
}

bool candidate_verify(const RecoveryCandidate& candidate, const std::vector<FieldScalar>& terms,
                      long long offset, const FieldScalar& a, const FieldScalar& b) {
    (void)a;
    (void)b;
    const long long n = static_cast<long long>(terms.size());
    if (n < 2) return false;
    try {
        if (!seed_validate(candidate.curve, candidate.seed)) return false;
        std::vector<NormalLine> lines{candidate.seed};
        for (long long h = offset + 1; h <= offset + n - 2; ++h) {
            lines.push_back(step_forward(candidate.curve, lines.back()));
        }
        if (!identity_suite(candidate.curve, lines).all_pass()) return false;
        // regenerate the window, gauge fixed by the first two input terms
        std::vector<FieldScalar> d;
        for (size_t i = 1; i < lines.size(); ++i) d.push_back(lines[i].d);
        SomosWindow regen = d.empty()
                                ? SomosWindow{offset, {terms[0], terms[1]}, std::nullopt}
                                : somos_from_d(d, offset + 1, terms[0], terms[1]);
        for (long long h = offset; h < offset + n; ++h) {
            if (!(regen.term(h) == terms[static_cast<size_t>(h - offset)])) return false;
        }
        return true;
    } catch (const error&) {
        return false;
    }
}

std::vector<RecoveryCandidate> recover_curve(const std::vector<FieldScalar>& terms, long long offset,
                                             const FieldScalar& a, const FieldScalar& b) {
    if (terms.size() < 6) throw std::invalid_argument("recovery needs at least 6 consecutive terms");
    for (size_t i = 0; i < terms.size(); ++i) {
        if (!terms[i].field().rational()) throw unsupported_error("recovery runs over Q");
        if (terms[i].is_zero()) {
            throw singular_error(offset + static_cast<long long>(i),
                                 "zero term at h = " + std::to_string(offset + static_cast<long long>(i)));
        }
    }
    if (a.is_zero()) throw unsupported_error("a = 0 has no reduced-mode realization (v = 0)");
    std::optional<FieldScalar> root = rational_sqrt(a);
    if (!root) throw unsupported_error("a = " + a.str() + " is not a rational square");

    // one backward step of the gap-6 relation supplies T_{offset-1}, which
    // d_offset and the seed line need
    SomosWindow win{offset, terms, std::make_pair(a, b)};
    win = gap6_extend(win, 1, ExtendDirection::Backward);
    if (win.term(offset - 1).is_zero())
        throw singular_error(offset - 1, "extension produced a zero term at h = " + std::to_string(offset - 1));

    const long long dmax = win.last_index() - 1;  // d available on [offset, dmax]
    std::vector<FieldScalar> d;
    for (long long h = offset; h <= dmax; ++h) d.push_back(d_from_terms(win, h));
    auto d_at = [&](long long h) -> const FieldScalar& { return d[static_cast<size_t>(h - offset)]; };

    const long long k = offset + 1;
    std::vector<RecoveryCandidate> out;
    for (const FieldScalar& v : {-*root, *root}) {
        AnchorPolys A = anchor_polys(d_at(k - 1), d_at(k), d_at(k + 1), d_at(k + 2), v);
        AnchorPolys A2 = anchor_polys(d_at(k), d_at(k + 1), d_at(k + 2), d_at(k + 3), v);
        Poly constraint = normalize_constraint(raw_constraint(A, v, b));
        if (constraint.degree() > 4) throw error("constraint polynomial exceeded the expected degree bound");
        if (constraint.is_zero()) continue;  // underdetermined branch; nothing enumerable
        for (const FieldScalar& wroot : rational_roots(constraint)) {
            FieldScalar f = A.f.eval(wroot), g = A.g.eval(wroot);
            // f and g must not depend on the anchor; drop roots that disagree
            if (!(f == A2.f.eval(wroot)) || !(g == A2.g.eval(wroot))) continue;
            CurveParams curve = CurveParams::reduced(f, g, v, wroot);
            // seed at h = offset: v0 from the X^3 equation, w0 from the d
            // recursion, e0 from the e recursion
            FieldScalar e1 = A.e_k.eval(wroot);
            FieldScalar v1 = A.v_k.eval(wroot);
            FieldScalar v0 = -v1 - e1;
            FieldScalar w0 = f + d_at(offset) + d_at(offset + 1) + v0 * v0;
            if (d_at(offset).is_zero()) continue;
            FieldScalar e0 = (v0 * w0 - g - d_at(offset + 1) * e1) / d_at(offset);
            NormalLine seed{offset, d_at(offset), e0, FieldScalar(1L), v0, w0};
            RecoveryCandidate cand{curve, seed, v, false, constraint};
            cand.verified = candidate_verify(cand, terms, offset, a, b);
            out.push_back(std::move(cand));
        }
    }
    return out;
}

}  // namespace somoscf
