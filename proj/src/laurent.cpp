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

#include "somoscf/laurent.hpp"

#include <algorithm>

namespace somoscf {

LaurentSeries LaurentSeries::make(Field f, long long top, long long prec, std::vector<FieldScalar> c, bool exact) {
    // strip leading zeros so top_ hugs the data; an all-zero strip keeps one slot
    size_t lead = 0;
    while (lead + 1 < c.size() && c[lead].is_zero()) ++lead;
    if (lead > 0) {
        c.erase(c.begin(), c.begin() + static_cast<long>(lead));
        top -= static_cast<long long>(lead);
    }
    if (c.empty()) {
        c.push_back(FieldScalar::of(f, 0));
        prec = top;
    }
    return LaurentSeries(f, top, prec, std::move(c), exact);
}

LaurentSeries LaurentSeries::from_poly(const Poly& p) {
    Field f = p.field();
    if (p.is_zero()) return LaurentSeries(f);
    long long top = p.degree();
    std::vector<FieldScalar> c;
    c.reserve(static_cast<size_t>(top) + 1);
    for (long long k = top; k >= 0; --k) c.push_back(p.coeff(static_cast<int>(k)));
    return make(f, top, 0, std::move(c), true);
}

FieldScalar LaurentSeries::stored(long long k) const {
    if (c_.empty() || k > top_ || k < top_ - static_cast<long long>(c_.size()) + 1) return FieldScalar::of(field_, 0);
    return c_[static_cast<size_t>(top_ - k)];
}

FieldScalar LaurentSeries::coeff(long long k) const {
    if (k > top_) return FieldScalar::of(field_, 0);
    if (!known(k)) throw precision_error("coefficient below the tracked precision");
    return stored(k);
}

long long LaurentSeries::degree() const {
    for (long long k = top_; k >= top_ - static_cast<long long>(c_.size()) + 1; --k) {
        if (!stored(k).is_zero()) return k;
    }
    if (exact_) return kMinusInfinity;
    throw precision_error("degree undecidable at the tracked precision");
}

LaurentSeries LaurentSeries::negated() const {
    std::vector<FieldScalar> c(c_);
    for (auto& x : c) x = -x;
    return LaurentSeries(field_, top_, prec_, std::move(c), exact_);
}

LaurentSeries LaurentSeries::add(const LaurentSeries& o) const {
    if (!(field_ == o.field_)) throw field_mismatch_error("series of different fields");
    bool exact = exact_ && o.exact_;
    long long top = std::max(top_, o.top_);
    long long lo;
    if (exact) {
        lo = std::min(top_ - static_cast<long long>(c_.size()) + 1,
                      o.top_ - static_cast<long long>(o.c_.size()) + 1);
    } else {
        lo = std::max(exact_ ? std::numeric_limits<long long>::min() : prec_,
                      o.exact_ ? std::numeric_limits<long long>::min() : o.prec_);
    }
    std::vector<FieldScalar> c;
    c.reserve(static_cast<size_t>(top - lo) + 1);
    for (long long k = top; k >= lo; --k) c.push_back(stored(k) + o.stored(k));
    return make(field_, top, lo, std::move(c), exact);
}

LaurentSeries LaurentSeries::mul_scalar(const FieldScalar& s) const {
    std::vector<FieldScalar> c(c_);
    for (auto& x : c) x = x * s;
    return make(field_, top_, prec_, std::move(c), exact_);
}

LaurentSeries LaurentSeries::mul_poly(const Poly& p) const { return mul(from_poly(p)); }

LaurentSeries LaurentSeries::mul(const LaurentSeries& o) const {
    if (!(field_ == o.field_)) throw field_mismatch_error("series of different fields");
    bool exact = exact_ && o.exact_;
    long long alo = top_ - static_cast<long long>(c_.size()) + 1;
    long long blo = o.top_ - static_cast<long long>(o.c_.size()) + 1;
    long long top = top_ + o.top_;
    // a term a_i*b_j with i below a's floor can only matter when j <= b.top,
    // i.e. for result exponents below a.prec + b.top (and symmetrically)
    long long lo = exact ? alo + blo : std::max(exact_ ? alo + blo : prec_ + o.top_,
                                                o.exact_ ? alo + blo : o.prec_ + top_);
    std::vector<FieldScalar> c(static_cast<size_t>(top - lo) + 1, FieldScalar::of(field_, 0));
    for (long long i = top_; i >= alo; --i) {
        FieldScalar ai = stored(i);
        if (ai.is_zero()) continue;
        for (long long j = o.top_; j >= blo; --j) {
            long long k = i + j;
            if (k < lo) break;
            c[static_cast<size_t>(top - k)] += ai * o.stored(j);
        }
    }
    return make(field_, top, lo, std::move(c), exact);
}

LaurentSeries LaurentSeries::div_poly(const Poly& q, long long floor) const {
    if (!(field_ == q.field())) throw field_mismatch_error("series and divisor of different fields");
    if (q.is_zero()) throw zero_division_error("series division by the zero polynomial");
    const long long dq = q.degree();
    const FieldScalar lead_inv = q.leading().inverse();
    long long out_top = top_ - dq;
    long long out_lo = exact_ ? floor : std::max(floor, prec_ - dq);
    if (out_lo > out_top) out_lo = out_top;

    // running remainder over [out_lo, top_]; untrusted slots below prec_ are
    // never read because c_j only consumes exponent j + dq >= out_lo + dq
    long long rem_lo = out_lo;
    std::vector<FieldScalar> rem;
    rem.reserve(static_cast<size_t>(top_ - rem_lo) + 1);
    for (long long k = top_; k >= rem_lo; --k) rem.push_back(known(k) ? stored(k) : FieldScalar::of(field_, 0));
    auto rem_at = [&](long long k) -> FieldScalar& { return rem[static_cast<size_t>(top_ - k)]; };

    std::vector<FieldScalar> out;
    out.reserve(static_cast<size_t>(out_top - out_lo) + 1);
    bool terminated = false;
    for (long long j = out_top; j >= out_lo; --j) {
        FieldScalar cj = rem_at(j + dq) * lead_inv;
        out.push_back(cj);
        if (!cj.is_zero()) {
            for (int i = 0; i <= dq; ++i) {
                long long k = j + i;
                if (k >= rem_lo) rem_at(k) -= cj * q.coeff(i);
            }
        }
    }
    if (exact_) {
        terminated = true;
        for (long long k = top_; k >= rem_lo; --k) {
            if (!rem_at(k).is_zero()) {
                terminated = false;
                break;
            }
        }
    }
    return make(field_, out_top, out_lo, std::move(out), terminated);
}

Poly LaurentSeries::poly_part() const {
    if (!known(0) && top_ >= 0) throw precision_error("polynomial part below the tracked precision");
    std::vector<FieldScalar> c;
    for (int k = 0; k <= top_; ++k) c.push_back(stored(k));
    return Poly::from_coeffs(field_, std::move(c));
}

LaurentSeries laurent_sqrt(const Poly& D, long long prec) {
    if (D.is_zero() || D.degree() % 2 != 0 || !D.is_monic()) {
        throw unsupported_error("unsupported radicand: need a monic polynomial of even degree");
    }
    Field f = D.field();
    const long long m = D.degree() / 2;
    if (prec > m) prec = m;
    const FieldScalar half = FieldScalar::of(f, 2).inverse();

    // s_k from matching the X^(m+k) coefficient of S^2 = D
    std::vector<FieldScalar> s(static_cast<size_t>(m - prec) + 1, FieldScalar::of(f, 0));
    auto s_at = [&](long long k) -> FieldScalar& { return s[static_cast<size_t>(m - k)]; };
    s_at(m) = FieldScalar::of(f, 1);
    for (long long k = m - 1; k >= prec; --k) {
        FieldScalar acc = D.coeff(static_cast<int>(m + k));
        for (long long i = k + 1; i <= m - 1; ++i) {
            long long j = m + k - i;
            if (j <= k || j >= m) continue;
            acc -= s_at(i) * s_at(j);
        }
        s_at(k) = acc * half;
    }

    // a perfect square has an exact polynomial root; detect by squaring the
    // nonnegative-exponent part whenever the computed tail is all zero
    bool tail_zero = prec <= 0;
    for (long long k = std::min(m - 1, -1LL); k >= prec && tail_zero; --k) {
        if (!s_at(k).is_zero()) tail_zero = false;
    }
    if (tail_zero && prec <= 0) {
        std::vector<FieldScalar> pc;
        for (long long k = 0; k <= m; ++k) pc.push_back(s_at(k));
        Poly cand = Poly::from_coeffs(f, std::move(pc));
        if (cand * cand == D) return LaurentSeries::from_poly(cand);
    }

    std::vector<FieldScalar> c;
    c.reserve(s.size());
    for (long long k = m; k >= prec; --k) c.push_back(s_at(k));
    return LaurentSeries::make(f, m, prec, std::move(c), false);
}

}  // namespace somoscf
