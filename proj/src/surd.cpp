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

#include "somoscf/surd.hpp"

#include <algorithm>

namespace somoscf {

SurdContext::SurdContext(Poly A, Poly R, long long floor)
    : A_(std::move(A)), R_(std::move(R)), Z_(A_.field()), floor_(std::min(floor, -1LL)) {
    if (!(A_.field() == R_.field())) throw field_mismatch_error("A and R of different fields");
    if (A_.degree() != 3 || !A_.is_monic()) throw unsupported_error("A must be a monic cubic");
    if (R_.degree() > 2) throw unsupported_error("deg R must be at most 2");
    Field f = field();
    Poly four = Poly(FieldScalar::of(f, 4));
    D_ = A_ * A_ + four * R_;
    LaurentSeries Y = laurent_sqrt(D_, floor_);
    Z_ = Y.add_poly(A_).mul_scalar(FieldScalar::of(f, 2).inverse());
    // sanity: Z^2 - A Z - R vanishes on the whole trusted strip
    LaurentSeries res = Z_.mul(Z_).add(Z_.mul_poly(A_).negated()).add_poly(-R_);
    long long lo = res.exact() ? res.top() : res.prec();
    for (long long k = res.top(); k >= lo; --k) {
        if (!res.coeff(k).is_zero()) throw inconsistency_error("Z series fails its defining equation");
    }
}

Poly SurdContext::norm(const Poly& P) const { return P * P + A_ * P - R_; }

bool norm_check(const SurdContext& ctx, const Poly& P, const Poly& Q) {
    if (Q.is_zero()) throw zero_division_error("norm_check with Q = 0");
    return poly_divides(Q, ctx.norm(P));
}

namespace {

Poly partial_quotient_of(const SurdContext& ctx, const Poly& P, const Poly& Q) {
    if (Q.is_zero()) throw corrupted_line_error("terminal line: Q = 0 has no complete quotient");
    return ctx.Z().add_poly(P).div_poly(Q, 0).poly_part();
}

}  // namespace

SurdStep surd_step(const SurdContext& ctx, const SurdLine& line) {
    Poly a = partial_quotient_of(ctx, line.P, line.Q);
    Poly Pn = a * line.Q - line.P - ctx.A();
    auto [q, r] = poly_divmod(ctx.norm(Pn), line.Q);
    if (!r.is_zero()) throw corrupted_line_error("norm of the stepped line is not divisible by Q");
    return SurdStep{std::move(a), SurdLine{line.h + 1, std::move(Pn), -q}};
}

SurdStep surd_step_back(const SurdContext& ctx, const SurdLine& line) {
    if (line.Q.is_zero()) throw corrupted_line_error("terminal line: Q = 0 has no complete quotient");
    auto [q, r] = poly_divmod(ctx.norm(line.P), line.Q);
    if (!r.is_zero()) throw corrupted_line_error("norm of the line is not divisible by Q");
    Poly Qp = -q;
    Poly a = partial_quotient_of(ctx, line.P, Qp);
    Poly Pp = a * Qp - line.P - ctx.A();
    return SurdStep{std::move(a), SurdLine{line.h - 1, std::move(Pp), std::move(Qp)}};
}

bool reduced_check(const SurdContext& ctx, const SurdLine& line) {
    if (line.Q.is_zero()) throw zero_division_error("reduced_check with Q = 0");
    long long dq = line.Q.degree();
    LaurentSeries num = ctx.Z().add_poly(line.P);
    long long dn = num.degree();
    if (dn == LaurentSeries::kMinusInfinity || dn - dq <= 0) return false;
    LaurentSeries conj = ctx.Z().negated().add_poly(ctx.A() + line.P);
    long long dc = conj.degree();
    return dc == LaurentSeries::kMinusInfinity || dc - dq < 0;
}

std::vector<ExpandedLine> surd_expand(const Poly& A, const Poly& R, const SurdLine& seed, int steps_fwd,
                                      int steps_back) {
    long long floor = -(static_cast<long long>(std::max(steps_fwd, steps_back)) + 8);
    for (int attempt = 0; attempt < 8; ++attempt) {
        try {
            SurdContext ctx(A, R, floor);
            std::vector<ExpandedLine> left, right;
            SurdLine cur = seed;
            for (int i = 0; i < steps_back; ++i) {
                SurdStep s = surd_step_back(ctx, cur);
                left.push_back(ExpandedLine{s.line, s.a});
                cur = s.line;
            }
            std::reverse(left.begin(), left.end());
            cur = seed;
            for (int i = 0; i < steps_fwd; ++i) {
                SurdStep s = surd_step(ctx, cur);
                if (i == 0) left.push_back(ExpandedLine{seed, s.a});
                right.push_back(ExpandedLine{s.line, partial_quotient_of(ctx, s.line.P, s.line.Q)});
                cur = s.line;
            }
            if (steps_fwd == 0) left.push_back(ExpandedLine{seed, partial_quotient_of(ctx, seed.P, seed.Q)});
            left.insert(left.end(), right.begin(), right.end());
            return left;
        } catch (const precision_error&) {
            floor *= 2;
        }
    }
    throw precision_error("expansion did not stabilize under repeated precision doubling");
}

}  // namespace somoscf
