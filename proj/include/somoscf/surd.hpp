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

#include <vector>

#include "somoscf/laurent.hpp"

namespace somoscf {

/// One line of the expansion of Z = (Y + A)/2: the complete quotient
/// (Z + P)/Q. Regular lines keep deg P <= 1 and deg Q = 2, but the engine
/// carries arbitrary P and Q so singular expansions stay representable.
struct SurdLine {
    long long h = 0;
    Poly P;
    Poly Q;
};

/// Expansion context for Y^2 = D(X) = A^2 + 4R with A monic cubic and
/// deg R <= 2. Z = (Y + A)/2 satisfies Z^2 - A Z - R = 0; the conjugate is
/// A - Z. The Z series is computed once, down to the requested exponent.
class SurdContext {
   public:
    /// floor: lowest tracked exponent of the Z series (clamped to <= -1).
    SurdContext(Poly A, Poly R, long long floor);

    Field field() const noexcept { return A_.field(); }
    const Poly& A() const noexcept { return A_; }
    const Poly& R() const noexcept { return R_; }
    const Poly& D() const noexcept { return D_; }
    const LaurentSeries& Z() const noexcept { return Z_; }
    long long floor() const noexcept { return floor_; }

    /// P^2 + A*P - R, the norm (Z + P)(A - Z + P) of a numerator shift.
    Poly norm(const Poly& P) const;

   private:
    Poly A_, R_, D_;
    LaurentSeries Z_;
    long long floor_;
};

struct SurdStep {
    Poly a;         // partial quotient emitted by the step
    SurdLine line;  // the adjacent line produced
};

/// True iff Q divides P^2 + A*P - R exactly. Q must be nonzero.
bool norm_check(const SurdContext& ctx, const Poly& P, const Poly& Q);

/// a = polynomial part of (Z + P)/Q, then P' = a*Q - P - A and
/// Q' = -(P'^2 + A*P' - R)/Q. Inexact division raises corrupted_line_error;
/// a too-short Z series raises precision_error.
SurdStep surd_step(const SurdContext& ctx, const SurdLine& line);

/// The mirror step: Q_prev = -(P^2 + A*P - R)/Q, a_prev = polynomial part
/// of (Z + P)/Q_prev, P_prev = a_prev*Q_prev - P - A. Conjugating the
/// expansion walks it leftward, so this recovers line h-1 from line h.
SurdStep surd_step_back(const SurdContext& ctx, const SurdLine& line);

/// deg (Z+P)/Q > 0 and deg (A-Z+P)/Q < 0, decided from series degrees.
bool reduced_check(const SurdContext& ctx, const SurdLine& line);

struct ExpandedLine {
    SurdLine line;
    Poly a;  // partial quotient of this line
};

/// Expands seed both ways (steps_back lines to the left, steps_fwd to the
/// right) and returns lines ordered by h, each with its partial quotient.
/// The context starts at floor -(steps + 8) and is rebuilt with doubled
/// precision whenever a step runs out of series.
std::vector<ExpandedLine> surd_expand(const Poly& A, const Poly& R, const SurdLine& seed, int steps_fwd,
                                      int steps_back);

}  // namespace somoscf
