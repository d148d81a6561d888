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

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace gfjnf {

/// Canonical element of GF(p^k): the base-p packing a_0 + a_1 p + ... + a_{k-1} p^{k-1}
/// of the polynomial-basis coordinates. Always < q.
using Felt = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

/// The finite field GF(p^k) in a polynomial basis over a monic irreducible modulus.
///
/// Immutable after construction; copies share the lookup tables. All element
/// arithmetic is table driven (log/antilog, Zech logarithms for odd extension
/// fields), so every operation is O(1).
class Field {
   public:
    /// Builds GF(p^k). When `modulus` is omitted and k > 1 the default modulus
    /// for (p, k) is used. `modulus` lists c_0..c_k (ascending, c_k = 1).
    static Field make(std::uint32_t p, std::uint32_t k,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    /// Default modulus for (p, k): the monic irreducible of degree k whose
    /// lower coefficients have the smallest base-p packed value.
    static std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t k);

    std::uint32_t p() const noexcept { return t_->p; }
    std::uint32_t k() const noexcept { return t_->k; }
    std::uint32_t q() const noexcept { return t_->q; }
    /// c_0..c_k; empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept { return t_->modulus; }

    bool is_prime_field() const noexcept { return t_->kind == Kind::Prime; }
    /// x mod p; meaningful for prime fields, where it maps integer sums of
    /// products of reps back to a rep.
    Felt reduce(std::uint64_t x) const noexcept { return static_cast<Felt>(x % t_->p); }

    bool operator==(const Field& o) const noexcept {
        return t_ == o.t_ || (p() == o.p() && k() == o.k() && modulus() == o.modulus());
    }

    Felt add(Felt a, Felt b) const noexcept {
        switch (t_->kind) {
            case Kind::Prime: {
                Felt s = a + b;
                return s >= t_->p ? s - t_->p : s;
            }
            case Kind::Binary:
                return a ^ b;
            default:
                return t_->addtab.empty() ? zech_add(a, b) : t_->addtab[a * t_->q + b];
        }
    }
    Felt neg(Felt a) const noexcept { return t_->neg[a]; }
    Felt sub(Felt a, Felt b) const noexcept { return add(a, t_->neg[b]); }
    Felt mul(Felt a, Felt b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return t_->exp[t_->log[a] + t_->log[b]];
    }
    /// Throws DivisionByZero for a = 0.
    Felt inv(Felt a) const;
    Felt div(Felt a, Felt b) const { return mul(a, inv(b)); }
    Felt pow(Felt a, std::uint64_t e) const noexcept;

    /// Smallest canonical rep generating GF(q)^x.
    Felt primitive() const noexcept { return t_->primitive; }
    /// Discrete log base primitive(); a must be nonzero.
    std::uint32_t log(Felt a) const noexcept { return t_->log[a]; }
    /// primitive()^e.
    Felt exp(std::uint64_t e) const noexcept { return t_->exp[e % (t_->q - 1)]; }
    std::uint32_t order(Felt a) const;

    /// Coordinates a_0..a_{k-1} of an element.
    std::vector<std::uint32_t> decode(Felt a) const;
    Felt encode(std::span<const std::uint32_t> digits) const;

    /// y += c * x, elementwise.
    void axpy(std::span<Felt> y, Felt c, std::span<const Felt> x) const noexcept;
    void scale(std::span<Felt> y, Felt c) const noexcept;

   private:
    enum class Kind { Prime, Binary, OddExtension };
    struct Tables {
        std::uint32_t p = 0, k = 0, q = 0;
        Kind kind = Kind::Prime;
        std::vector<std::uint32_t> modulus;
        Felt primitive = 1;
        std::vector<Felt> exp;             // size 2(q-1)
        std::vector<std::uint32_t> log;    // size q, log[0] unused
        std::vector<Felt> neg;             // size q
        std::vector<std::int32_t> zech;    // log(1 + w^t), -1 when 1 + w^t = 0
        std::vector<Felt> inv;             // size q
        std::vector<std::uint16_t> addtab; // q*q sums, small odd extensions only
    };

    explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

    Felt zech_add(Felt a, Felt b) const noexcept {
        if (a == 0) return b;
        if (b == 0) return a;
        const std::uint32_t n = t_->q - 1;
        std::uint32_t la = t_->log[a], lb = t_->log[b];
        std::uint32_t diff = lb >= la ? lb - la : lb + n - la;
        std::int32_t z = t_->zech[diff];
        if (z < 0) return 0;
        return t_->exp[la + static_cast<std::uint32_t>(z)];
    }

    std::shared_ptr<const Tables> t_;
};

bool is_prime(std::uint64_t n) noexcept;
/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace gfjnf
