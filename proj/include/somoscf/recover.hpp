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

#include <array>
#include <vector>

#include "somoscf/somos.hpp"

namespace somoscf {

/// A reduced curve reconstructed from a gap-6 window, together with the
/// expansion seed it implies. verified means the candidate regenerated the
/// whole input window exactly and passed the identity battery.
struct RecoveryCandidate {
    CurveParams curve;   // reduced mode
    NormalLine seed;
    FieldScalar v_branch;  // the square root of a that was taken
    bool verified = false;
    Poly constraint;     // the polynomial in w whose root produced this candidate
};

/// The polynomial in w obtained by eliminating everything else from four
/// consecutive d values on one sqrt branch:  v^3(g(w) + w f(w) + w^3) + b,
/// scaled to integer coefficients with positive leading coefficient. Its
/// rational roots are the candidate w values.
Poly constraint_poly(const std::array<FieldScalar, 4>& d_quad, const FieldScalar& v, const FieldScalar& b);

/// From >= 6 consecutive nonzero terms at the given offset and gap-6
/// coefficients (a, b), reconstructs every candidate reduced curve
/// (f, g, v, w) with a compatible seed line at h = offset, trying both
/// square-root branches of a. Candidates are ordered branch-then-root;
/// each carries the outcome of its verification.
std::vector<RecoveryCandidate> recover_curve(const std::vector<FieldScalar>& terms, long long offset,
                                             const FieldScalar& a, const FieldScalar& b);

/// Regenerates the d-stream and the sequence from the candidate (gauge
/// fixed by the first two input terms), compares with the window exactly,
/// and runs the identity battery on the regenerated lines. Degeneracy or
/// any mismatch reports false rather than throwing.
bool candidate_verify(const RecoveryCandidate& candidate, const std::vector<FieldScalar>& terms,
                      long long offset, const FieldScalar& a, const FieldScalar& b);

}  // namespace somoscf
