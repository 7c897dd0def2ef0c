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

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "somoscf/normal.hpp"

namespace somoscf {

/// A contiguous block of sequence terms T_h together with the gap-6
/// recurrence coefficients (a, b) when they are known. Terms are field
/// scalars: the recurrence produces rationals in general; integrality is
/// something callers may report, never assume.
struct SomosWindow {
    long long offset = 0;  // index of terms.front()
    std::vector<FieldScalar> terms;
    std::optional<std::pair<FieldScalar, FieldScalar>> coeffs;

    long long first_index() const noexcept { return offset; }
    long long last_index() const noexcept { return offset + static_cast<long long>(terms.size()) - 1; }
    bool has(long long h) const noexcept { return h >= first_index() && h <= last_index(); }
    const FieldScalar& term(long long h) const { return terms.at(static_cast<size_t>(h - offset)); }
};

/// (a, b) = (v^2, -v^3(g + w f + w^3)) of the gap-6 recurrence
/// T_{h-3}T_{h+3} = a T_{h-2}T_{h+2} + b T_h^2. Reduced mode only.
std::pair<FieldScalar, FieldScalar> gap6_coeffs(const CurveParams& curve);

/// d_h for h in [h_from, h_to], by stepping the quintuple forward and
/// backward from the seed line. Degeneracy propagates.
std::vector<FieldScalar> d_stream(const CurveParams& curve, const NormalLine& seed, long long h_from,
                                  long long h_to);

/// Runs T_{h+1} = d_h T_h^2 / T_{h-1} across d (indexed h0..h0+len-1) from
/// T_{h0-1} = T_first, T_{h0} = T_second; returns terms at h0-1 .. h0+len.
/// A vanishing term aborts with singular_error.
SomosWindow somos_from_d(const std::vector<FieldScalar>& d, long long h0, const FieldScalar& T_first,
                         const FieldScalar& T_second);

/// d_h = T_{h-1}T_{h+1}/T_h^2 recomputed from a window.
FieldScalar d_from_terms(const SomosWindow& window, long long h);

/// Indices h where T_{h-3}T_{h+3} != a T_{h-2}T_{h+2} + b T_h^2; windows
/// too short to host a full gap-6 instance report nothing.
std::vector<long long> gap6_check(const SomosWindow& window);

enum class ExtendDirection { Forward, Backward };

/// Appends or prepends count terms by solving the gap-6 relation for the
/// outermost term. Needs >= 6 consecutive terms and nonzero divisors.
SomosWindow gap6_extend(const SomosWindow& window, long long count, ExtendDirection direction);

}  // namespace somoscf
