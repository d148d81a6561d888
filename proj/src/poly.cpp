/*
   Copyright 2026 The gfjnf Authors

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

#include "poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "error.hpp"

namespace gfjnf {

Poly Poly::monomial(Felt c, std::size_t d) {
    std::vector<Felt> v(d + 1, 0);
    v[d] = c;
    return Poly(std::move(v));
}

Poly Poly::linear(const Field& F, Felt a) { return Poly(std::vector<Felt>{F.neg(a), 1}); }

bool canonical_less(const Poly& a, const Poly& b) noexcept {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) os << (i ? " " : "") << f.coeffs()[i];
    return os.str();
}

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
    std::vector<Felt> r(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(a[i], b[i]);
    return Poly(std::move(r));
}

Poly poly_neg(const Field& F, const Poly& a) {
    std::vector<Felt> r = a.coeffs();
    for (auto& c : r) c = F.neg(c);
    return Poly(std::move(r));
}

Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
    std::vector<Felt> r(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(a[i], b[i]);
    return Poly(std::move(r));
}

Poly poly_scale(const Field& F, const Poly& a, Felt c) {
    std::vector<Felt> r = a.coeffs();
    F.scale(r, c);
    return Poly(std::move(r));
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<Felt> r(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        F.axpy(std::span<Felt>(r.data() + i, y.size()), x[i], y);
    return Poly(std::move(r));
}

Poly poly_pow(const Field& F, const Poly& a, std::uint64_t e) {
    Poly r = Poly::one(), b = a;
    while (e) {
        if (e & 1) r = poly_mul(F, r, b);
        e >>= 1;
        if (e) b = poly_mul(F, b, b);
    }
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Felt> r = a.coeffs();
    const auto& d = b.coeffs();
    const std::size_t db = d.size() - 1;
    const Felt lead_inv = F.inv(b.lead());
    std::vector<Felt> quo(r.size() - db, 0);
    for (std::size_t i = r.size(); i-- > db;) {
        Felt c = F.mul(r[i], lead_inv);
        quo[i - db] = c;
        if (c == 0) continue;
        F.axpy(std::span<Felt>(r.data() + i - db, db + 1), F.neg(c), d);
    }
    r.resize(db);
    return {Poly(std::move(quo)), Poly(std::move(r))};
}

Poly poly_rem(const Field& F, const Poly& a, const Poly& b) { return poly_divmod(F, a, b).second; }

Poly poly_div_exact(const Field& F, const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(F, a, b);
    if (!r.is_zero()) fail(ErrorCode::InvalidArgument, "inexact polynomial division");
    return q;
}

bool poly_divides(const Field& F, const Poly& d, const Poly& a) {
    if (d.is_zero()) return a.is_zero();
    return poly_rem(F, a, d).is_zero();
}

Poly poly_monic(const Field& F, const Poly& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return poly_scale(F, a, F.inv(a.lead()));
}

Poly poly_derivative(const Field& F, const Poly& a) {
    if (a.degree() < 1) return {};
    std::vector<Felt> r(a.coeffs().size() - 1);
    for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
        // i * c_i with i reduced into the prime field
        Felt m = static_cast<Felt>(i % F.p());
        r[i - 1] = F.mul(m, a[i]);
    }
    return Poly(std::move(r));
}

Felt poly_eval(const Field& F, const Poly& a, Felt x) {
    Felt r = 0;
    for (std::size_t i = a.coeffs().size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
    return r;
}

Poly poly_mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& m) {
    return poly_rem(F, poly_mul(F, a, b), m);
}

Poly poly_powmod(const Field& F, const Poly& a, std::uint64_t e, const Poly& m) {
    Poly r = poly_rem(F, Poly::one(), m), b = poly_rem(F, a, m);
    while (e) {
        if (e & 1) r = poly_mulmod(F, r, b, m);
        e >>= 1;
        if (e) b = poly_mulmod(F, b, b, m);
    }
    return r;
}

Bezout poly_gcd_bezout(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) fail(ErrorCode::InvalidArgument, "gcd of two zero polynomials");
    Poly r0 = a, r1 = b, s0 = Poly::one(), s1, t0, t1 = Poly::one();
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(F, r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = poly_sub(F, s0, poly_mul(F, q, s1));
        Poly t2 = poly_sub(F, t0, poly_mul(F, q, t1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const Felt li = F.inv(r0.lead());
    Bezout out{poly_scale(F, r0, li), poly_scale(F, s0, li), poly_scale(F, t0, li)};
    if (!a.is_zero() && !b.is_zero()) {
        // Normalize so that deg t < deg(a/g), which forces deg s < deg(b/g).
        Poly ag = poly_div_exact(F, a, out.g), bg = poly_div_exact(F, b, out.g);
        auto [qt, rt] = poly_divmod(F, out.t, ag);
        out.t = rt;
        out.s = poly_add(F, out.s, poly_mul(F, qt, bg));
    }
    return out;
}

Poly poly_gcd(const Field& F, const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly r = poly_rem(F, r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    return poly_monic(F, r0);
}

Poly poly_lcm(const Field& F, const Poly& a, const Poly& b) {
    return poly_monic(F, poly_mul(F, a, poly_div_exact(F, b, poly_gcd(F, a, b))));
}

namespace {

// h -> h^q mod g as a linear map: rows[j] = X^(jq) mod g.
class Frobenius {
   public:
    Frobenius(const Field& F, const Poly& g) : F_(F), g_(g) {
        const int n = g.degree();
        Poly xq = poly_powmod(F, Poly::monomial(1, 1), F.q(), g);
        rows_.reserve(n);
        rows_.push_back(poly_rem(F, Poly::one(), g));
        for (int j = 1; j < n; ++j) rows_.push_back(poly_mulmod(F, rows_.back(), xq, g));
    }

    // h must be reduced modulo g (or modulo a divisor of g).
    Poly apply(const Poly& h) const {
        std::vector<Felt> acc(std::max(1, g_.degree()), 0);
        for (std::size_t j = 0; j < h.coeffs().size(); ++j) {
            const auto& r = rows_[j].coeffs();
            F_.axpy(std::span<Felt>(acc.data(), r.size()), h[j], r);
        }
        return Poly(std::move(acc));
    }

   private:
    const Field& F_;
    Poly g_;
    std::vector<Poly> rows_;
};

Poly pth_root(const Field& F, const Poly& f) {
    const std::uint32_t p = F.p();
    const std::uint64_t e = F.q() / p;  // inverse Frobenius on GF(q)
    std::vector<Felt> r(f.coeffs().size() / p + 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) r[i / p] = F.pow(f[i], e);
    return Poly(std::move(r));
}

void squarefree(const Field& F, const Poly& f, std::uint32_t mult, std::vector<std::pair<Poly, std::uint32_t>>& out) {
    if (f.degree() < 1) return;
    Poly fd = poly_derivative(F, f);
    if (fd.is_zero()) {
        squarefree(F, pth_root(F, f), mult * F.p(), out);
        return;
    }
    Poly c = poly_gcd(F, f, fd);
    Poly w = poly_div_exact(F, f, c);
    std::uint32_t i = 1;
    while (w.degree() > 0) {
        Poly y = poly_gcd(F, w, c);
        Poly z = poly_div_exact(F, w, y);
        if (z.degree() > 0) out.emplace_back(z, i * mult);
        ++i;
        w = y;
        c = poly_div_exact(F, c, y);
    }
    if (c.degree() > 0) squarefree(F, pth_root(F, c), mult * F.p(), out);
}

// Splits a monic square-free product of degree-d irreducibles.
void equal_degree(const Field& F, const Poly& g, int d, const Frobenius& frob, Rng& rng, std::vector<Poly>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const bool odd = F.q() % 2 == 1;
    for (;;) {
        Poly a = poly_random(F, g.degree(), rng);
        if (a.degree() < 1) continue;
        Poly b;
        if (odd) {
            // a^((q^d - 1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q-1)/2)
            Poly t = a, ai = a;
            for (int i = 1; i < d; ++i) {
                ai = poly_rem(F, frob.apply(ai), g);
                t = poly_mulmod(F, t, ai, g);
            }
            b = poly_sub(F, poly_powmod(F, t, (F.q() - 1) / 2, g), Poly::one());
        } else {
            // absolute trace: sum of a^(2^i), i < k*d
            Poly ai = a;
            b = a;
            const std::uint32_t steps = F.k() * static_cast<std::uint32_t>(d);
            for (std::uint32_t i = 1; i < steps; ++i) {
                ai = poly_mulmod(F, ai, ai, g);
                b = poly_add(F, b, ai);
            }
        }
        Poly h = poly_gcd(F, g, b);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(F, h, d, frob, rng, out);
            equal_degree(F, poly_div_exact(F, g, h), d, frob, rng, out);
            return;
        }
    }
}

// Splits a monic square-free polynomial into its irreducible factors.
void split_squarefree(const Field& F, const Poly& g, Rng& rng, std::vector<Poly>& out) {
    if (g.degree() < 1) return;
    if (g.degree() == 1) {
        out.push_back(g);
        return;
    }
    Frobenius frob(F, g);
    const Poly x = Poly::monomial(1, 1);
    Poly rest = g;
    Poly h = poly_rem(F, x, g);
    for (int d = 1; rest.degree() > 0; ++d) {
        if (2 * d > rest.degree()) {
            out.push_back(rest);
            break;
        }
        h = poly_rem(F, frob.apply(h), rest);
        Poly part = poly_gcd(F, rest, poly_sub(F, h, x));
        if (part.degree() > 0) {
            equal_degree(F, part, d, frob, rng, out);
            rest = poly_div_exact(F, rest, part);
            h = poly_rem(F, h, rest);
        }
    }
}

}  // namespace

FactoredPoly poly_factor(const Field& F, const Poly& f, Rng& rng) {
    if (f.is_zero()) fail(ErrorCode::InvalidArgument, "cannot factor the zero polynomial");
    FactoredPoly out;
    out.unit = f.lead();
    std::vector<std::pair<Poly, std::uint32_t>> parts;
    squarefree(F, poly_monic(F, f), 1, parts);
    std::map<std::vector<Felt>, std::pair<Poly, std::uint32_t>> merged;
    for (const auto& [g, m] : parts) {
        std::vector<Poly> irr;
        split_squarefree(F, g, rng, irr);
        for (auto& p : irr) {
            auto [it, fresh] = merged.try_emplace(p.coeffs(), p, 0);
            it->second.second += m;
        }
    }
    for (auto& [key, pm] : merged) out.factors.push_back(std::move(pm));
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    return out;
}

Poly poly_expand(const Field& F, const FactoredPoly& fp) {
    Poly r = Poly::constant(fp.unit);
    for (const auto& [p, m] : fp.factors) r = poly_mul(F, r, poly_pow(F, p, m));
    return r;
}

bool poly_is_irreducible(const Field& F, const Poly& f) {
    if (f.degree() < 1) fail(ErrorCode::InvalidArgument, "irreducibility of a constant polynomial");
    if (f.degree() == 1) return true;
    Poly g = poly_monic(F, f);
    Frobenius frob(F, g);
    const Poly x = Poly::monomial(1, 1);
    Poly h = poly_rem(F, x, g);
    for (int i = 1; 2 * i <= g.degree(); ++i) {
        h = frob.apply(h);
        if (poly_gcd(F, g, poly_sub(F, h, x)).degree() > 0) return false;
    }
    return true;
}

Poly poly_random(const Field& F, std::size_t d, Rng& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, F.q() - 1);
    std::vector<Felt> c(d);
    for (auto& x : c) x = dist(rng);
    return Poly(std::move(c));
}

Poly poly_random_irreducible(const Field& F, std::size_t d, Rng& rng) {
    if (d == 0) fail(ErrorCode::InvalidArgument, "irreducible polynomials have degree >= 1");
    for (;;) {
        std::vector<Felt> c = poly_random(F, d, rng).coeffs();
        c.resize(d + 1, 0);
        c[d] = 1;
        Poly f(std::move(c));
        if (poly_is_irreducible(F, f)) return f;
    }
}

Mat companion_matrix(const Field& F, const Poly& f) {
    if (f.degree() < 1) fail(ErrorCode::InvalidArgument, "companion matrix needs degree >= 1");
    if (!f.is_monic()) fail(ErrorCode::InvalidArgument, "companion matrix needs a monic polynomial");
    const std::size_t n = static_cast<std::size_t>(f.degree());
    Mat m(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = 1;
    for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = F.neg(f[j]);
    return m;
}

}  // namespace gfjnf
