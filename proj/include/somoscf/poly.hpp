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

#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "somoscf/scalar.hpp"

namespace somoscf {

/// Dense univariate polynomial over one field, coefficients stored from the
/// constant term upward and always trimmed (leading coefficient nonzero
/// unless the polynomial is zero). Degrees here never exceed ~8, so nothing
/// is tuned for size.
class Poly {
   public:
    /// degree() of the zero polynomial.
    static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

    Poly() = default;                                  // zero over Q
    explicit Poly(Field f) : field_(f) {}              // zero over f
    explicit Poly(const FieldScalar& constant);

    static Poly from_coeffs(Field f, std::vector<FieldScalar> coeffs);
    static Poly from_ints(Field f, std::initializer_list<long long> constant_first);
    static Poly monomial(Field f, int deg, const FieldScalar& c);
    static Poly x(Field f) { return monomial(f, 1, FieldScalar::of(f, 1)); }
    static Poly one(Field f) { return Poly(FieldScalar::of(f, 1)); }

    Field field() const noexcept { return field_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return c_.empty() ? kMinusInfinity : static_cast<int>(c_.size()) - 1; }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    /// Coefficient of X^i; zero beyond the degree.
    FieldScalar coeff(int i) const;
    const FieldScalar& leading() const;
    const std::vector<FieldScalar>& coeffs() const noexcept { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const FieldScalar& s, const Poly& p);
    Poly scaled(const FieldScalar& s) const { return s * *this; }

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Exact Horner evaluation.
    FieldScalar eval(const FieldScalar& x) const;

    Poly derivative() const;

    std::string str(const std::string& var = "X") const;

   private:
    Field field_;
    std::vector<FieldScalar> c_;

    void trim();
};

/// Quotient and remainder with a = q*b + r and degree(r) < degree(b).
/// Throws zero_division_error when b = 0.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

/// Quotient of an exact division; throws corrupted_line_error if b does not
/// divide a.
Poly poly_divexact(const Poly& a, const Poly& b);

bool poly_divides(const Poly& b, const Poly& a);

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Exactly the rational roots of p (ascending), found by rational-root-
/// theorem candidate enumeration after clearing denominators. Requires a
/// nonzero polynomial over Q.
std::vector<FieldScalar> rational_roots(const Poly& p);

/// Smallest positive rational c such that c*p has coprime integer
/// coefficients; returned together with the scaled polynomial. Q only.
std::pair<FieldScalar, Poly> integer_primitive(const Poly& p);

}  // namespace somoscf
