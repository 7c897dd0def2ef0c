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

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "somoscf/errors.hpp"

namespace somoscf {

/// Coefficient domain tag: the rationals (p == 0) or a prime field F_p.
struct Field {
    long long p = 0;

    bool rational() const noexcept { return p == 0; }
    friend bool operator==(const Field&, const Field&) = default;
};

/// Builds {p} after checking p is prime, greater than 3 and small enough
/// that products of residues fit a 128-bit intermediate.
Field prime_field(long long p);

/// An exact scalar: an element of Q (arbitrary precision, gcd-reduced,
/// positive denominator, zero is 0/1) or of F_p with residue in [0, p).
/// All arithmetic is exact; scalars of different fields never mix.
class FieldScalar {
   public:
    FieldScalar() : q_(0) {}
    FieldScalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor): literals
    explicit FieldScalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// num/den as an element of Q; throws invalid_scalar_error if den = 0.
    static FieldScalar rational(const mpz_class& num, const mpz_class& den);
    /// Residue class of r in F_p (r may be negative or >= p).
    static FieldScalar mod_p(long long r, long long p);
    static FieldScalar mod_p(long long r, const Field& f);
    /// The integer v mapped into the given field.
    static FieldScalar of(const Field& f, long long v);

    Field field() const noexcept { return Field{mod_}; }
    bool is_rational() const noexcept { return mod_ == 0; }

    const mpq_class& rat() const;
    long long residue() const;

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    /// True when the value lies in the image of Z (denominator 1; always
    /// true over F_p).
    bool is_integer() const noexcept;

    FieldScalar operator-() const;
    FieldScalar inverse() const;
    FieldScalar pow(unsigned e) const;

    FieldScalar& operator+=(const FieldScalar& o);
    FieldScalar& operator-=(const FieldScalar& o);
    FieldScalar& operator*=(const FieldScalar& o);
    FieldScalar& operator/=(const FieldScalar& o);

    friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
    friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
    friend FieldScalar operator*(FieldScalar a, const FieldScalar& b) { return a *= b; }
    friend FieldScalar operator/(FieldScalar a, const FieldScalar& b) { return a /= b; }

    bool operator==(const FieldScalar& o) const;
    bool operator!=(const FieldScalar& o) const { return !(*this == o); }

    /// Canonical text: "p/q" with reduced p,q, "p" when q = 1, or "r mod p".
    std::string str() const;
    /// Inverse of str(); accepts the same three shapes, nothing else.
    static FieldScalar parse(const std::string& text);

   private:
    FieldScalar(long long r, long long p) : mod_(p), r_(r) {}

    long long mod_ = 0;  // 0 = rational
    mpq_class q_;        // payload when rational
    long long r_ = 0;    // payload when prime
};

std::ostream& operator<<(std::ostream& os, const FieldScalar& s);

/// Throws field_mismatch_error unless a and b live in the same field.
void require_same_field(const FieldScalar& a, const FieldScalar& b);

/// Exact square root in Q: present iff s = (p/q)^2 for some rational p/q;
/// the nonnegative branch is returned. Rational field only.
std::optional<FieldScalar> rational_sqrt(const FieldScalar& s);

/// Total order on Q used for deterministic reporting. Rational field only.
int compare_rational(const FieldScalar& a, const FieldScalar& b);

}  // namespace somoscf
