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

#include "somoscf/somos.hpp"

#include <algorithm>

namespace somoscf {

std::pair<FieldScalar, FieldScalar> gap6_coeffs(const CurveParams& curve) {
    if (curve.mode != CurveMode::Reduced) throw unsupported_error("gap-6 coefficients exist in reduced mode only");
    FieldScalar a = curve.v * curve.v;
    FieldScalar b = -curve.v.pow(3) * (curve.g + curve.w * curve.f + curve.w.pow(3));
    return {a, b};
}

std::vector<FieldScalar> d_stream(const CurveParams& curve, const NormalLine& seed, long long h_from,
                                  long long h_to) {
    if (h_from > h_to) throw std::invalid_argument("empty d_stream range");
    if (seed.h < h_from || seed.h > h_to) throw std::invalid_argument("seed index outside the window");
    std::vector<FieldScalar> out(static_cast<size_t>(h_to - h_from) + 1, FieldScalar::of(curve.field(), 0));
    auto slot = [&](long long h) -> FieldScalar& { return out[static_cast<size_t>(h - h_from)]; };
    slot(seed.h) = seed.d;
    NormalLine cur = seed;
    for (long long h = seed.h + 1; h <= h_to; ++h) {
        cur = step_forward(curve, cur);
        slot(h) = cur.d;
    }
    cur = seed;
    for (long long h = seed.h - 1; h >= h_from; --h) {
        cur = step_backward(curve, cur);
        slot(h) = cur.d;
    }
    return out;
}

SomosWindow somos_from_d(const std::vector<FieldScalar>& d, long long h0, const FieldScalar& T_first,
                         const FieldScalar& T_second) {
    if (T_first.is_zero()) throw singular_error(h0 - 1, "zero seed term");
    if (T_second.is_zero()) throw singular_error(h0, "zero seed term");
    SomosWindow win;
    win.offset = h0 - 1;
    win.terms = {T_first, T_second};
    for (size_t i = 0; i < d.size(); ++i) {
        const FieldScalar& Tm = win.terms[win.terms.size() - 2];
        const FieldScalar& T = win.terms.back();
        FieldScalar next = d[i] * T * T / Tm;
        if (next.is_zero()) {
            throw singular_error(h0 + static_cast<long long>(i) + 1,
                                 "sequence term vanished at h = " + std::to_string(h0 + static_cast<long long>(i) + 1));
        }
        win.terms.push_back(next);
    }
    return win;
}

FieldScalar d_from_terms(const SomosWindow& window, long long h) {
    if (!window.has(h - 1) || !window.has(h) || !window.has(h + 1))
        throw std::invalid_argument("d_from_terms needs T_{h-1}, T_h, T_{h+1}");
    const FieldScalar& T = window.term(h);
    if (T.is_zero()) throw singular_error(h, "zero term at h = " + std::to_string(h));
    return window.term(h - 1) * window.term(h + 1) / (T * T);
}

std::vector<long long> gap6_check(const SomosWindow& window) {
    if (!window.coeffs) throw std::invalid_argument("window carries no gap-6 coefficients");
    const auto& [a, b] = *window.coeffs;
    std::vector<long long> bad;
    for (long long h = window.first_index() + 3; h + 3 <= window.last_index(); ++h) {
        FieldScalar lhs = window.term(h - 3) * window.term(h + 3);
        FieldScalar rhs = a * window.term(h - 2) * window.term(h + 2) + b * window.term(h) * window.term(h);
        if (!(lhs == rhs)) bad.push_back(h);
    }
    return bad;
}

SomosWindow gap6_extend(const SomosWindow& window, long long count, ExtendDirection direction) {
    if (!window.coeffs) throw std::invalid_argument("window carries no gap-6 coefficients");
    if (window.terms.size() < 6) throw std::invalid_argument("gap6_extend needs at least 6 consecutive terms");
    if (count < 0) throw std::invalid_argument("negative extension count");
    const auto& [a, b] = *window.coeffs;
    SomosWindow out = window;
    for (long long i = 0; i < count; ++i) {
        if (direction == ExtendDirection::Forward) {
            long long h = out.last_index() - 2;  // new term sits at h + 3
            const FieldScalar& div = out.term(h - 3);
            if (div.is_zero()) throw singular_error(h - 3, "zero divisor at h = " + std::to_string(h - 3));
            FieldScalar next = (a * out.term(h - 2) * out.term(h + 2) + b * out.term(h) * out.term(h)) / div;
            out.terms.push_back(next);
        } else {
            long long h = out.first_index() + 2;  // new term sits at h - 3
            const FieldScalar& div = out.term(h + 3);
            if (div.is_zero()) throw singular_error(h + 3, "zero divisor at h = " + std::to_string(h + 3));
            FieldScalar prev = (a * out.term(h - 2) * out.term(h + 2) + b * out.term(h) * out.term(h)) / div;
            out.terms.insert(out.terms.begin(), prev);
            --out.offset;
        }
    }
    return out;
}

}  // namespace somoscf
