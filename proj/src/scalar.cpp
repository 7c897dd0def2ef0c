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

#include "somoscf/scalar.hpp"

#include <ostream>
#include <sstream>

namespace somoscf {

namespace {

constexpr long long kMaxModulus = (1LL << 62);

long long mod_norm(long long r, long long p) {
    r %= p;
    if (r < 0) r += p;
    return r;
}

long long mod_mul(long long a, long long b, long long p) {
    return static_cast<long long>(static_cast<__int128>(a) * b % p);
}

long long mod_pow(long long b, long long e, long long p) {
    long long acc = 1 % p;
    b = mod_norm(b, p);
    while (e > 0) {
        if (e & 1) acc = mod_mul(acc, b, p);
        b = mod_mul(b, b, p);
        e >>= 1;
    }
    return acc;
}

long long mod_inv(long long a, long long p) {
    // extended Euclid; a != 0 (mod p)
    long long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        long long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (t < 0) t += p;
    return t;
}

bool is_prime_64(long long n) {
    if (n < 2) return false;
    for (long long q : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL}) {
        if (n % q == 0) return n == q;
    }
    long long d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic Miller-Rabin witness set for 64-bit inputs
    for (long long a : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL}) {
        long long x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = mod_mul(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::string trimmed(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

mpz_class parse_integer(const std::string& s) {
    mpz_class z;
    if (s.empty() || z.set_str(s, 10) != 0) {
        throw invalid_scalar_error("not an integer: \"" + s + "\"");
    }
    return z;
}

}  // namespace

Field prime_field(long long p) {
    if (p <= 3) throw invalid_scalar_error("modulus must be a prime greater than 3");
    if (p >= kMaxModulus) throw invalid_scalar_error("modulus too large");
    if (!is_prime_64(p)) throw invalid_scalar_error("modulus " + std::to_string(p) + " is not prime");
    return Field{p};
}

FieldScalar FieldScalar::rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw invalid_scalar_error("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return FieldScalar(std::move(q));
}

FieldScalar FieldScalar::mod_p(long long r, long long p) { return mod_p(r, prime_field(p)); }

FieldScalar FieldScalar::mod_p(long long r, const Field& f) {
    if (f.rational()) throw invalid_scalar_error("mod_p needs a prime field");
    return FieldScalar(mod_norm(r, f.p), f.p);
}

FieldScalar FieldScalar::of(const Field& f, long long v) {
    if (f.rational()) return FieldScalar(static_cast<long>(v));
    return FieldScalar(mod_norm(v, f.p), f.p);
}

const mpq_class& FieldScalar::rat() const {
    if (mod_ != 0) throw field_mismatch_error("scalar is not rational");
    return q_;
}

long long FieldScalar::residue() const {
    if (mod_ == 0) throw field_mismatch_error("scalar is not in a prime field");
    return r_;
}

bool FieldScalar::is_zero() const noexcept { return mod_ == 0 ? q_ == 0 : r_ == 0; }

bool FieldScalar::is_one() const noexcept { return mod_ == 0 ? q_ == 1 : r_ == 1; }

bool FieldScalar::is_integer() const noexcept { return mod_ != 0 || q_.get_den() == 1; }

FieldScalar FieldScalar::operator-() const {
    if (mod_ == 0) return FieldScalar(mpq_class(-q_));
    return FieldScalar(r_ == 0 ? 0 : mod_ - r_, mod_);
}

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) throw zero_division_error("inverse of zero");
    if (mod_ == 0) return FieldScalar(mpq_class(1 / q_));
    return FieldScalar(mod_inv(r_, mod_), mod_);
}

FieldScalar FieldScalar::pow(unsigned e) const {
    FieldScalar acc = of(field(), 1);
    for (unsigned i = 0; i < e; ++i) acc *= *this;
    return acc;
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& o) {
    require_same_field(*this, o);
    if (mod_ == 0)
        q_ += o.q_;
    else
        r_ = mod_norm(r_ + o.r_, mod_);
    return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& o) {
    require_same_field(*this, o);
    if (mod_ == 0)
        q_ -= o.q_;
    else
        r_ = mod_norm(r_ - o.r_, mod_);
    return *this;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& o) {
    require_same_field(*this, o);
    if (mod_ == 0)
        q_ *= o.q_;
    else
        r_ = mod_mul(r_, o.r_, mod_);
    return *this;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& o) {
    require_same_field(*this, o);
    if (o.is_zero()) throw zero_division_error("division by zero scalar");
    if (mod_ == 0)
        q_ /= o.q_;
    else
        r_ = mod_mul(r_, mod_inv(o.r_, mod_), mod_);
    return *this;
}

bool FieldScalar::operator==(const FieldScalar& o) const {
    require_same_field(*this, o);
    return mod_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string FieldScalar::str() const {
    if (mod_ == 0) return q_.get_str();
    return std::to_string(r_) + " mod " + std::to_string(mod_);
}

FieldScalar FieldScalar::parse(const std::string& text) {
    const std::string s = trimmed(text);
    if (s.empty()) throw invalid_scalar_error("empty scalar");
    if (size_t m = s.find(" mod "); m != std::string::npos) {
        mpz_class r = parse_integer(trimmed(s.substr(0, m)));
        mpz_class p = parse_integer(trimmed(s.substr(m + 5)));
        if (!p.fits_slong_p()) throw invalid_scalar_error("modulus too large");
        Field f = prime_field(p.get_si());
        mpz_class red = r % mpz_class(static_cast<long>(f.p));
        return mod_p(red.get_si(), f);
    }
    if (size_t d = s.find('/'); d != std::string::npos) {
        mpz_class num = parse_integer(trimmed(s.substr(0, d)));
        mpz_class den = parse_integer(trimmed(s.substr(d + 1)));
        return rational(num, den);
    }
    return FieldScalar(mpq_class(parse_integer(s)));
}

std::ostream& operator<<(std::ostream& os, const FieldScalar& s) { return os << s.str(); }

void require_same_field(const FieldScalar& a, const FieldScalar& b) {
    if (!(a.field() == b.field())) {
        throw field_mismatch_error("scalars of different fields: " + a.str() + " vs " + b.str());
    }
}

std::optional<FieldScalar> rational_sqrt(const FieldScalar& s) {
    const mpq_class& q = s.rat();
    if (q < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return FieldScalar::rational(rn, rd);
}

int compare_rational(const FieldScalar& a, const FieldScalar& b) {
    return cmp(a.rat(), b.rat());
}

}  // namespace somoscf
