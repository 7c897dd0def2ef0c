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

#include "somoscf/poly.hpp"

namespace somoscf {

/// Truncated Laurent series at infinity: a strip of exact coefficients for
/// the exponents [prec(), top()]. Every stored coefficient is exact;
/// truncation only limits how far down the strip reaches. When exact() is
/// set, all exponents below prec() are known to be zero (the series is a
/// Laurent polynomial). Queries below the trusted floor throw
/// precision_error instead of guessing.
class LaurentSeries {
   public:
    static constexpr long long kMinusInfinity = std::numeric_limits<long long>::min();

    /// The exact zero series.
    explicit LaurentSeries(Field f) : field_(f), exact_(true) {}
    static LaurentSeries from_poly(const Poly& p);

    Field field() const noexcept { return field_; }
    /// Highest tracked exponent; no nonzero coefficient lies above it.
    long long top() const noexcept { return top_; }
    /// Lowest trusted exponent (irrelevant when exact()).
    long long prec() const noexcept { return prec_; }
    bool exact() const noexcept { return exact_; }

    /// Coefficient of X^k; throws precision_error when k lies below the
    /// trusted floor of an inexact series.
    FieldScalar coeff(long long k) const;

    /// Exponent of the leading nonzero coefficient; kMinusInfinity for the
    /// exact zero series; precision_error when undecidable.
    long long degree() const;

    LaurentSeries negated() const;
    LaurentSeries add(const LaurentSeries& o) const;
    LaurentSeries add_poly(const Poly& p) const { return add(from_poly(p)); }
    LaurentSeries mul_scalar(const FieldScalar& s) const;
    LaurentSeries mul_poly(const Poly& p) const;
    LaurentSeries mul(const LaurentSeries& o) const;

    /// Series quotient by a nonzero polynomial, computed down to exponent
    /// floor when possible (an inexact numerator caps the reach at
    /// prec() - degree(q)).
    LaurentSeries div_poly(const Poly& q, long long floor) const;

    /// The coefficients at exponents >= 0 as a polynomial; throws
    /// precision_error when exponent 0 is below the trusted floor.
    Poly poly_part() const;

   private:
    friend LaurentSeries laurent_sqrt(const Poly& D, long long prec);

    LaurentSeries(Field f, long long top, long long prec, std::vector<FieldScalar> c, bool exact)
        : field_(f), top_(top), prec_(prec), c_(std::move(c)), exact_(exact) {}

    bool known(long long k) const noexcept { return exact_ || k >= prec_; }
    FieldScalar stored(long long k) const;  // zero outside the stored strip
    static LaurentSeries make(Field f, long long top, long long prec, std::vector<FieldScalar> c, bool exact);

    Field field_;
    long long top_ = 0;
    long long prec_ = 0;
    std::vector<FieldScalar> c_;  // c_[i] is the coefficient of X^(top_ - i)
    bool exact_ = false;
};

/// Series square root of a monic polynomial of even degree 2m: the unique
/// S with leading term X^m and S^2 = D on every exponent >= prec. Perfect
/// squares come back exact. Throws unsupported_error otherwise.
LaurentSeries laurent_sqrt(const Poly& D, long long prec);

}  // namespace somoscf
