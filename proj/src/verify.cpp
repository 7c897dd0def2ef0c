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

#include "somoscf/verify.hpp"

namespace somoscf {

std::vector<NormalLine> stepped_window(const CurveParams& curve, const NormalLine& seed, int steps) {
    std::vector<NormalLine> lines{seed};
    for (int i = 0; i < steps; ++i) {
        try {
            lines.push_back(step_forward(curve, lines.back()));
        } catch (const degeneracy_error&) {
            break;  // keep the nondegenerate prefix
        }
    }
    return lines;
}

namespace {

bool agree_at_floor(const CurveParams& curve, const std::vector<NormalLine>& lines, long long floor,
                    std::string* detail) {
    SurdContext ctx(curve.A(), curve.R(), floor);
    SurdLine cur = lines.front().surd();
    for (size_t i = 0; i < lines.size(); ++i) {
        if (!(cur.P == lines[i].P()) || !(cur.Q == lines[i].Q())) {
            if (detail) *detail = "engine disagreement on (P,Q) at h = " + std::to_string(lines[i].h);
            return false;
        }
        if (i + 1 == lines.size()) break;
        SurdStep s = surd_step(ctx, cur);
        if (!(s.a == partial_quotient(lines[i]))) {
            if (detail) *detail = "engine disagreement on the partial quotient at h = " + std::to_string(lines[i].h);
            return false;
        }
        cur = s.line;
    }
    return true;
}

}  // namespace

bool engines_agree(const CurveParams& curve, const std::vector<NormalLine>& lines, std::string* detail) {
    if (lines.empty()) return true;
    long long floor = -(static_cast<long long>(lines.size()) + 8);
    return agree_at_floor(curve, lines, floor, detail) && agree_at_floor(curve, lines, 2 * floor, detail);
}

bool theorem_reproduction(const CurveParams& curve, const std::vector<NormalLine>& lines, std::string* detail) {
    if (lines.size() < 2) return true;
    std::vector<FieldScalar> d;
    for (size_t i = 1; i < lines.size(); ++i) d.push_back(lines[i].d);
    FieldScalar one = FieldScalar::of(curve.field(), 1);
    try {
        SomosWindow win = somos_from_d(d, lines.front().h + 1, one, one);
        win.coeffs = gap6_coeffs(curve);
        std::vector<long long> bad = gap6_check(win);
        if (!bad.empty()) {
            if (detail) *detail = "gap-6 violation at h = " + std::to_string(bad.front());
            return false;
        }
        return true;
    } catch (const singular_error& e) {
        if (detail) *detail = std::string("singular sequence: ") + e.what();
        return false;
    }
}

TrialResult run_trial(std::uint64_t rng_seed, const TrialOptions& options) {
    auto [curve, seed] = random_instance(rng_seed, options.mode, options.coefficient_bound, options.field);
    TrialResult res;
    res.curve = curve;
    res.seed = seed;
    std::vector<NormalLine> lines = stepped_window(curve, seed, options.window);
    if (options.corrupt && lines.size() >= 2) {
        lines[1].d += FieldScalar::of(curve.field(), 1);
        if (lines[1].d.is_zero()) lines[1].d += FieldScalar::of(curve.field(), 1);
    }
    IdentityReport rep = identity_suite(curve, lines);
    if (!rep.all_pass()) {
        const IdentityCheck c = rep.failures().front();
        res.detail = "identity " + c.id + " failed at h = " + std::to_string(c.h);
        return res;
    }
    std::string detail;
    if (!engines_agree(curve, lines, &detail)) {
        res.detail = detail;
        return res;
    }
    if (options.mode == CurveMode::Reduced && !theorem_reproduction(curve, lines, &detail)) {
        res.detail = detail;
        return res;
    }
    res.pass = true;
    return res;
}

}  // namespace somoscf
