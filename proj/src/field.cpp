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

#include "field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "error.hpp"

namespace gfjnf {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace {

// Odd extension fields up to this order get a full addition table.
constexpr std::uint32_t kAddTableMaxOrder = 256;

// Dense polynomials over the prime field, used only while building tables.
using PrimePoly = std::vector<std::uint32_t>;

void trim(PrimePoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

PrimePoly prime_rem(PrimePoly a, const PrimePoly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint64_t lead_inv = inv_mod(b.back(), p);
    while (a.size() > db) {
        std::uint64_t c = a.back() * lead_inv % p;
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            std::uint64_t t = c * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - t) % p);
        }
        trim(a);
    }
    return a;
}

// Enumerates monic polynomials of degree d in base-p order of their lower coefficients.
PrimePoly monic_from_index(std::uint64_t idx, std::uint32_t d, std::uint32_t p) {
    PrimePoly f(d + 1, 0);
    for (std::uint32_t i = 0; i < d; ++i) {
        f[i] = static_cast<std::uint32_t>(idx % p);
        idx /= p;
    }
    f[d] = 1;
    return f;
}

// Saturates once the result passes 2^32, which is already beyond any field order.
std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) {
        r *= b;
        if (r > (std::uint64_t{1} << 32)) return r;
    }
    return r;
}

// Trial division by all monic polynomials of degree 1..deg/2.
bool prime_irreducible(const PrimePoly& f, std::uint32_t p) {
    const std::uint32_t n = static_cast<std::uint32_t>(f.size() - 1);
    for (std::uint32_t d = 1; d <= n / 2; ++d) {
        const std::uint64_t count = ipow(p, d);
        for (std::uint64_t idx = 0; idx < count; ++idx)
            if (prime_rem(f, monic_from_index(idx, d, p), p).empty()) return false;
    }
    return true;
}

// Reference arithmetic on base-p digits, used only while building tables.
// k <= 16 because q <= 2^16; the modulus is monic.
struct SlowArith {
    std::uint32_t p, k, q;
    PrimePoly modulus;

    Felt mul(Felt a, Felt b) const {
        if (k == 1) return static_cast<Felt>(std::uint64_t(a) * b % p);
        if (p == 2) {
            // carry-less product, then fold bits >= k with the modulus
            std::uint32_t m = 0, r = 0;
            for (std::uint32_t i = 0; i < k; ++i) m |= modulus[i] << i;
            for (std::uint32_t i = 0; i < k; ++i)
                if (b >> i & 1) r ^= a << i;
            for (std::uint32_t d = 2 * k - 2; d >= k; --d)
                if (r >> d & 1) r ^= (1u << d) ^ (m << (d - k));
            return r;
        }
        std::uint32_t x[16], y[16];
        std::uint64_t r[31] = {};
        for (std::uint32_t i = 0; i < k; ++i) {
            x[i] = a % p, a /= p;
            y[i] = b % p, b /= p;
        }
        // Terms are below 2^32 and at most 2k of them meet in one slot, so
        // reductions can wait until a coefficient is consumed.
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = 0; j < k; ++j) r[i + j] += std::uint64_t(x[i]) * y[j];
        for (std::uint32_t d = 2 * k - 2; d >= k; --d) {
            const std::uint64_t c = r[d] % p;
            if (c == 0) continue;
            for (std::uint32_t i = 0; i < k; ++i) r[d - k + i] += (p - modulus[i]) * c;
        }
        Felt out = 0;
        for (std::uint32_t i = k; i-- > 0;) out = out * p + static_cast<Felt>(r[i] % p);
        return out;
    }
    Felt add(Felt a, Felt b) const {
        Felt out = 0, scale = 1;
        for (std::uint32_t i = 0; i < k; ++i, scale *= p, a /= p, b /= p) out += (a % p + b % p) % p * scale;
        return out;
    }
    Felt neg(Felt a) const {
        Felt out = 0, scale = 1;
        for (std::uint32_t i = 0; i < k; ++i, scale *= p, a /= p) out += (p - a % p) % p * scale;
        return out;
    }
    // 1 + a only touches the constant digit.
    Felt add_one(Felt a) const { return a - a % p + (a % p + 1) % p; }
    Felt pow(Felt a, std::uint64_t e) const {
        Felt r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
};

}  // namespace

std::vector<std::uint32_t> Field::default_modulus(std::uint32_t p, std::uint32_t k) {
    if (!is_prime(p)) fail(ErrorCode::NotPrime, "characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) fail(ErrorCode::InvalidArgument, "extension degree must be at least 1");
    if (ipow(p, k) > kMaxFieldOrder)
        fail(ErrorCode::UnsupportedField, "no built-in modulus for GF(" + std::to_string(p) + "^" + std::to_string(k) + ")");
    if (k == 1) return {};
    const std::uint64_t count = ipow(p, k);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        PrimePoly f = monic_from_index(idx, k, p);
        if (f[0] != 0 && prime_irreducible(f, p)) return f;
    }
    fail(ErrorCode::UnsupportedField, "no irreducible polynomial found");  // unreachable
}

Field Field::make(std::uint32_t p, std::uint32_t k, std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) fail(ErrorCode::NotPrime, "characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) fail(ErrorCode::InvalidArgument, "extension degree must be at least 1");
    if (ipow(p, k) > kMaxFieldOrder)
        fail(ErrorCode::UnsupportedField,
             "GF(" + std::to_string(p) + "^" + std::to_string(k) + ") exceeds the supported order 2^16");

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->k = k;
    t->q = static_cast<std::uint32_t>(ipow(p, k));
    if (k > 1) {
        if (modulus) {
            PrimePoly m = *modulus;
            if (m.size() != k + 1) fail(ErrorCode::ReducibleModulus, "modulus must have degree " + std::to_string(k));
            for (auto c : m)
                if (c >= p) fail(ErrorCode::InvalidArgument, "modulus coefficient out of range");
            if (m.back() != 1) fail(ErrorCode::ReducibleModulus, "modulus must be monic");
            if (!prime_irreducible(m, p)) fail(ErrorCode::ReducibleModulus, "modulus is reducible");
            t->modulus = std::move(m);
        } else {
            t->modulus = default_modulus(p, k);
        }
    }
    t->kind = k == 1 ? Kind::Prime : (p == 2 ? Kind::Binary : Kind::OddExtension);

    // Tables are immutable, so every live Field over the same (p, k, modulus)
    // shares one copy. Entries expire with their last Field.
    using Key = std::tuple<std::uint32_t, std::uint32_t, std::vector<std::uint32_t>>;
    static std::mutex cache_mutex;
    static std::map<Key, std::weak_ptr<const Tables>> cache;
    Key key{p, k, t->modulus};
    {
        std::lock_guard lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) {
            if (auto hit = it->second.lock()) return Field(std::move(hit));
        }
    }

    SlowArith slow{p, k, t->q, t->modulus};
    const std::uint32_t q = t->q, n = q - 1;

    // Smallest generator of the multiplicative group.
    const auto primes = prime_divisors(n);
    Felt g = 1;
    for (Felt cand = 1; cand < q; ++cand) {
        bool ok = true;
        for (auto r : primes)
            if (slow.pow(cand, n / r) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            g = cand;
            break;
        }
    }
    t->primitive = g;

    t->exp.assign(2 * std::size_t(n) + 1, 0);
    t->log.assign(q, 0);
    Felt x = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        t->exp[i] = x;
        t->log[x] = i;
        x = slow.mul(x, g);
    }
    for (std::uint32_t i = n; i < t->exp.size(); ++i) t->exp[i] = t->exp[i - n];

    t->neg.resize(q);
    for (Felt a = 0; a < q; ++a) t->neg[a] = k == 1 ? (p - a) % p : slow.neg(a);
    t->inv.assign(q, 0);
    for (Felt a = 1; a < q; ++a) t->inv[a] = t->exp[(n - t->log[a]) % n];
    if (t->kind == Kind::OddExtension) {
        t->zech.resize(n);
        for (std::uint32_t i = 0; i < n; ++i) {
            Felt s = slow.add_one(t->exp[i]);
            t->zech[i] = s == 0 ? -1 : static_cast<std::int32_t>(t->log[s]);
        }
        if (q <= kAddTableMaxOrder) {
            t->addtab.resize(static_cast<std::size_t>(q) * q);
            for (Felt a = 0; a < q; ++a)
                for (Felt b = 0; b < q; ++b) t->addtab[a * q + b] = static_cast<std::uint16_t>(slow.add(a, b));
        }
    }
    std::shared_ptr<const Tables> built = std::move(t);
    {
        std::lock_guard lock(cache_mutex);
        auto& slot = cache[std::move(key)];
        if (auto other = slot.lock()) return Field(std::move(other));  // lost a race; keep the first copy
        slot = built;
        std::erase_if(cache, [](const auto& e) { return e.second.expired(); });
    }
    return Field(std::move(built));
}

Felt Field::inv(Felt a) const {
    if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
    return t_->inv[a];
}

Felt Field::pow(Felt a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t n = t_->q - 1;
    return t_->exp[(std::uint64_t(t_->log[a]) * (e % n)) % n];
}

std::uint32_t Field::order(Felt a) const {
    if (a == 0) fail(ErrorCode::DivisionByZero, "zero has no multiplicative order");
    const std::uint32_t n = q() - 1;
    std::uint32_t l = t_->log[a];
    // order = n / gcd(l, n)
    std::uint32_t x = l, y = n;
    while (y) {
        std::uint32_t r = x % y;
        x = y;
        y = r;
    }
    return n / x;
}

std::vector<std::uint32_t> Field::decode(Felt a) const {
    std::vector<std::uint32_t> d(k());
    for (auto& c : d) {
        c = a % p();
        a /= p();
    }
    return d;
}

Felt Field::encode(std::span<const std::uint32_t> digits) const {
    if (digits.size() > k()) fail(ErrorCode::InvalidArgument, "too many digits for field element");
    Felt a = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] >= p()) fail(ErrorCode::InvalidArgument, "digit out of range");
        a = a * p() + digits[i];
    }
    return a;
}

void Field::axpy(std::span<Felt> y, Felt c, std::span<const Felt> x) const noexcept {
    if (c == 0) return;
    const std::size_t n = y.size();
    const Tables& t = *t_;
    switch (t.kind) {
        case Kind::Prime: {
            // Shoup's precomputed quotient: c*x - floor(c*x/p)*p lands in [0, 2p).
            const std::uint32_t p = t.p;
            const std::uint64_t cs = (static_cast<std::uint64_t>(c) << 32) / p;
            for (std::size_t i = 0; i < n; ++i) {
                const std::uint32_t xi = x[i];
                const auto qq = static_cast<std::uint32_t>((xi * cs) >> 32);
                std::uint32_t r = c * xi - qq * p;
                r = r >= p ? r - p : r;
                const std::uint32_t s = y[i] + r;
                y[i] = s >= p ? s - p : s;
            }
            break;
        }
        case Kind::Binary: {
            const std::uint32_t lc = t.log[c];
            for (std::size_t i = 0; i < n; ++i)
                if (x[i] != 0) y[i] ^= t.exp[lc + t.log[x[i]]];
            break;
        }
        default: {
            const std::uint32_t lc = t.log[c];
            if (!t.addtab.empty()) {
                const std::uint32_t q = t.q;
                for (std::size_t i = 0; i < n; ++i)
                    if (x[i] != 0) y[i] = t.addtab[y[i] * q + t.exp[lc + t.log[x[i]]]];
            } else {
                for (std::size_t i = 0; i < n; ++i)
                    if (x[i] != 0) y[i] = zech_add(y[i], t.exp[lc + t.log[x[i]]]);
            }
        }
    }
}

void Field::scale(std::span<Felt> y, Felt c) const noexcept {
    for (auto& v : y) v = mul(v, c);
}

}  // namespace gfjnf
