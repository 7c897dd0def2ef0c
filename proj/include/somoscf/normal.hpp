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

#include <cstdint>
#include <string>
#include <vector>

#include "somoscf/surd.hpp"

namespace somoscf {

enum class CurveMode { Full, Reduced };

/// The sextic data Y^2 = (X^3 + f X + g)^2 + 4R. Full mode keeps
/// R = u(X^2 - v X + w) with u != 0; reduced mode keeps R = -v(X - w) with
/// v != 0 (the u <- 0 specialization that leaves uv = v and uw = vw).
struct CurveParams {
    CurveMode mode = CurveMode::Reduced;
    FieldScalar f, g, u, v, w;  // u is ignored in reduced mode

    static CurveParams full(FieldScalar f, FieldScalar g, FieldScalar u, FieldScalar v, FieldScalar w);
    static CurveParams reduced(FieldScalar f, FieldScalar g, FieldScalar v, FieldScalar w);

    Field field() const { return f.field(); }
    Poly A() const;  // X^3 + f X + g
    Poly R() const;
    Poly D() const;  // A^2 + 4R

    bool operator==(const CurveParams& o) const;
};

/// One expansion line in normal form: numerator Z + d(X + e), denominator
/// u(X^2 - v X + w). d and u stay nonzero on every stored line; hitting
/// d = 0 is reported as degeneracy_error, never materialized.
struct NormalLine {
    long long h = 0;
    FieldScalar d, e, u, v, w;

    Poly P() const;  // d(X + e)
    Poly Q() const;  // u(X^2 - v X + w)
    SurdLine surd() const { return SurdLine{h, P(), Q()}; }

    bool operator==(const NormalLine& o) const;
    bool same_values(const NormalLine& o) const;  // ignores h
};

/// True iff X^2 - v X + w divides d^2(X+e)^2 + d(X+e)A - R, with d and u
/// nonzero. This is the seed condition for the whole expansion.
bool seed_validate(const CurveParams& curve, const NormalLine& line);

/// One step right by coefficient matching:
///   d' = -v^2 + w - f - d
///   e' = (v w - g - d e)/d'
///   u' = -d'/u,  v' = -v - e',  w' = (f + d') - v v' - w - u/d'
/// with the X^1 and X^0 coefficient equations re-asserted afterwards.
/// d' = 0 raises degeneracy_error; a failed assert raises
/// inconsistency_error (the input line was not valid for the curve).
NormalLine step_forward(const CurveParams& curve, const NormalLine& line);

/// The same equations read in the other direction (they are symmetric in
/// h <-> h+1); step_forward(step_backward(L)) == L.
NormalLine step_backward(const CurveParams& curve, const NormalLine& line);

/// The degree-1 partial quotient (X + v)/u of a line.
Poly partial_quotient(const NormalLine& line);

struct IdentityCheck {
    std::string id;
    long long h;
    bool pass;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;

    bool all_pass() const;
    std::vector<IdentityCheck> failures() const;
};

/// Evaluates the identity battery on a contiguous run of lines: the
/// defining recursions and all five coefficient equations on every
/// adjacent pair, then the derived product identities (their primed forms
/// plus the quintuple identity in reduced mode). Everything is an exact
/// equality; the report lists each instance by tag and h.
IdentityReport identity_suite(const CurveParams& curve, const std::vector<NormalLine>& lines);

/// Draws free line data (d0,e0,u0,v0,w0) and (d1,e1) from small nonzero
/// scalars, solves the defining recursions for f and g and the product
/// identities for the remaining curve parameters, and rejection-samples
/// until the seed condition holds. Deterministic in rng_seed.
std::pair<CurveParams, NormalLine> random_instance(std::uint64_t rng_seed, CurveMode mode,
                                                   long coefficient_bound, Field field = Field{});

}  // namespace somoscf
