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

#include "somoscf/poly.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace somoscf {

Poly::Poly(const FieldScalar& constant) : field_(constant.field()) {
    if (!constant.is_zero()) c_.push_back(constant);
}

Poly Poly::from_coeffs(Field f, std::vector<FieldScalar> coeffs) {
    Poly p(f);
    for (const auto& c : coeffs) {
        if (!(c.field() == f)) throw field_mismatch_error("coefficient outside the polynomial's field");
    }
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

Poly Poly::from_ints(Field f, std::initializer_list<long long> constant_first) {
    std::vector<FieldScalar> cs;
    cs.reserve(constant_first.size());
    for (long long v : constant_first) cs.push_back(FieldScalar::of(f, v));
    return from_coeffs(f, std::move(cs));
}

Poly Poly::monomial(Field f, int deg, const FieldScalar& c) {
    if (!(c.field() == f)) throw field_mismatch_error("coefficient outside the polynomial's field");
    Poly p(f);
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<size_t>(deg) + 1, FieldScalar::of(f, 0));
    p.c_.back() = c;
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldScalar Poly::coeff(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= c_.size()) return FieldScalar::of(field_, 0);
    return c_[static_cast<size_t>(i)];
}

const FieldScalar& Poly::leading() const {
    if (c_.empty()) throw error("leading coefficient of the zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

namespace {
void require_same_field_poly(const Poly& a, const Poly& b) {
    if (!(a.field() == b.field())) throw field_mismatch_error("polynomials of different fields");
}
}  // namespace

Poly& Poly::operator+=(const Poly& o) {
    require_same_field_poly(*this, o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), FieldScalar::of(field_, 0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_field_poly(*this, o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), FieldScalar::of(field_, 0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field_poly(a, b);
    Poly r(a.field());
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, FieldScalar::of(a.field(), 0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

Poly operator*(const FieldScalar& s, const Poly& p) {
    if (!(s.field() == p.field())) throw field_mismatch_error("scalar outside the polynomial's field");
    Poly r(p);
    for (auto& c : r.c_) c *= s;
    r.trim();
    return r;
}

bool Poly::operator==(const Poly& o) const {
    require_same_field_poly(*this, o);
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!(c_[i] == o.c_[i])) return false;
    }
    return true;
}

FieldScalar Poly::eval(const FieldScalar& x) const {
    if (!(x.field() == field_)) throw field_mismatch_error("evaluation point outside the field");
    FieldScalar acc = FieldScalar::of(field_, 0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    Poly r(field_);
    if (c_.size() <= 1) return r;
    r.c_.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_.push_back(FieldScalar::of(field_, static_cast<long long>(i)) * c_[i]);
    r.trim();
    return r;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        FieldScalar c = coeff(i);
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool negative = !cs.empty() && cs[0] == '-';
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (negative) cs = cs.substr(1);
        bool unit = (cs == "1");
        bool plain = cs.find('/') == std::string::npos && cs.find(' ') == std::string::npos;
        if (i == 0) {
            os << cs;
        } else {
            if (!unit) {
                if (plain)
                    os << cs;
                else
                    os << "(" << cs << ")";
            }
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    require_same_field_poly(a, b);
    if (b.is_zero()) throw zero_division_error("division by the zero polynomial");
    Field f = a.field();
    if (a.degree() < b.degree()) return {Poly(f), a};
    FieldScalar lead_inv = b.leading().inverse();
    std::vector<FieldScalar> rem(a.coeffs());
    int db = b.degree();
    int dq = a.degree() - db;
    std::vector<FieldScalar> quot(static_cast<size_t>(dq) + 1, FieldScalar::of(f, 0));
    for (int j = dq; j >= 0; --j) {
        FieldScalar cq = rem[static_cast<size_t>(j + db)] * lead_inv;
        quot[static_cast<size_t>(j)] = cq;
        if (cq.is_zero()) continue;
        for (int i = 0; i <= db; ++i) rem[static_cast<size_t>(j + i)] -= cq * b.coeff(i);
    }
    rem.resize(static_cast<size_t>(db));
    return {Poly::from_coeffs(f, std::move(quot)), Poly::from_coeffs(f, std::move(rem))};
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw corrupted_line_error("inexact polynomial division");
    return q;
}

bool poly_divides(const Poly& b, const Poly& a) { return poly_divmod(a, b).second.is_zero(); }

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

std::pair<FieldScalar, Poly> integer_primitive(const Poly& p) {
    if (!p.field().rational()) throw field_mismatch_error("integer_primitive needs a rational polynomial");
    if (p.is_zero()) return {FieldScalar(1L), p};
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& c : p.coeffs()) {
        if (c.is_zero()) continue;
        mpz_class d = c.rat().get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    for (const auto& c : p.coeffs()) {
        if (c.is_zero()) continue;
        mpz_class n = c.rat().get_num() * (den_lcm / c.rat().get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    FieldScalar scale = FieldScalar::rational(den_lcm, num_gcd);
    return {scale, scale * p};
}

namespace {

// Factoring support for root candidate enumeration. Trial division peels
// everything below 1e6; Pollard-Brent rho handles the leftovers.

mpz_class rho_f(const mpz_class& x, const mpz_class& c, const mpz_class& n) { return (x * x + c) % n; }

mpz_class pollard_brent(const mpz_class& n, gmp_randclass& rng) {
    if (n % 2 == 0) return 2;
    while (true) {
        mpz_class y = rng.get_z_range(n - 1) + 1;
        mpz_class c = rng.get_z_range(n - 1) + 1;
        mpz_class m = 128, g = 1, r = 1, q = 1, x, ys;
        while (g == 1) {
            x = y;
            for (mpz_class i = 0; i < r; ++i) y = rho_f(y, c, n);
            mpz_class k = 0;
            while (k < r && g == 1) {
                ys = y;
                mpz_class lim = std::min(m, mpz_class(r - k));
                for (mpz_class i = 0; i < lim; ++i) {
                    y = rho_f(y, c, n);
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = rho_f(ys, c, n);
                mpz_class d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n) return g;
    }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out, gmp_randclass& rng) {
    if (n <= 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 32) != 0) {
        ++out[n];
        return;
    }
    mpz_class d = pollard_brent(n, rng);
    factor_into(d, out, rng);
    factor_into(n / d, out, rng);
}

std::map<mpz_class, unsigned> factor(mpz_class n) {
    std::map<mpz_class, unsigned> out;
    for (long p = 2; p < 1000000 && n > 1; p == 2 ? p = 3 : p += 2) {
        if (mpz_class(p) * p > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
            ++out[mpz_class(p)];
            n /= p;
        }
    }
    if (n > 1) {
        gmp_randclass rng(gmp_randinit_mt);
        rng.seed(0x5eed);
        factor_into(n, out, rng);
    }
    return out;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : factor(abs(n))) {
        size_t base = out.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

}  // namespace

std::vector<FieldScalar> rational_roots(const Poly& p) {
    if (!p.field().rational()) throw field_mismatch_error("rational_roots needs a polynomial over Q");
    if (p.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");

    std::vector<FieldScalar> roots;
    Poly q = integer_primitive(p).second;
    if (q.coeff(0).is_zero()) {
        roots.push_back(FieldScalar(0L));
        std::vector<FieldScalar> shifted(q.coeffs().begin() + 1, q.coeffs().end());
        while (!shifted.empty() && shifted.front().is_zero()) shifted.erase(shifted.begin());
        q = Poly::from_coeffs(q.field(), std::move(shifted));
    }
    int n = q.degree();
    if (n >= 1) {
        if (n == 1) {
            roots.push_back(-q.coeff(0) / q.coeff(1));
        } else {
            mpz_class a0 = q.coeff(0).rat().get_num();
            mpz_class an = q.leading().rat().get_num();
            for (const mpz_class& s : divisors(a0)) {
                for (const mpz_class& t : divisors(an)) {
                    FieldScalar cand = FieldScalar::rational(s, t);
                    if (q.eval(cand).is_zero()) roots.push_back(cand);
                    FieldScalar neg = -cand;
                    if (q.eval(neg).is_zero()) roots.push_back(neg);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const FieldScalar& a, const FieldScalar& b) { return compare_rational(a, b) < 0; });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace somoscf
