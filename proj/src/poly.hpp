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
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"
#include "mat.hpp"

namespace gfjnf {

/// Caller-owned random source for every randomized routine.
using Rng = std::mt19937_64;

/// Dense univariate polynomial over GF(q); coefficient i belongs to X^i.
/// No trailing zeros are stored, so the zero polynomial has no coefficients.
class Poly {
   public:
    Poly() = default;
    explicit Poly(std::vector<Felt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(Felt c) { return Poly(std::vector<Felt>{c}); }
    static Poly one() { return constant(1); }
    /// c * X^d
    static Poly monomial(Felt c, std::size_t d);
    /// X - a
    static Poly linear(const Field& F, Felt a);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    Felt lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const noexcept { return lead() == 1; }
    Felt operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    const std::vector<Felt>& coeffs() const noexcept { return c_; }

    bool operator==(const Poly&) const = default;

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Felt> c_;
};

/// Canonical order: ascending degree, then lexicographic on coefficient reps
/// starting from the constant term.
bool canonical_less(const Poly& a, const Poly& b) noexcept;

/// "c0 c1 ... cd" using canonical integer reps; "0" for the zero polynomial.
std::string to_string(const Poly& f);

Poly poly_add(const Field& F, const Poly& a, const Poly& b);
Poly poly_sub(const Field& F, const Poly& a, const Poly& b);
Poly poly_neg(const Field& F, const Poly& a);
Poly poly_scale(const Field& F, const Poly& a, Felt c);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);
Poly poly_pow(const Field& F, const Poly& a, std::uint64_t e);
/// (quotient, remainder); throws DivisionByZero when b = 0.
std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b);
Poly poly_rem(const Field& F, const Poly& a, const Poly& b);
/// a / b where b is known to divide a; throws InvalidArgument otherwise.
Poly poly_div_exact(const Field& F, const Poly& a, const Poly& b);
bool poly_divides(const Field& F, const Poly& d, const Poly& a);
Poly poly_monic(const Field& F, const Poly& a);
Poly poly_derivative(const Field& F, const Poly& a);
Felt poly_eval(const Field& F, const Poly& a, Felt x);
Poly poly_mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& m);
Poly poly_powmod(const Field& F, const Poly& a, std::uint64_t e, const Poly& m);

struct Bezout {
    Poly g;  // monic gcd
    Poly s;  // s*a + t*b = g
    Poly t;
};

/// Extended Euclid. Throws InvalidArgument when both inputs are zero.
Bezout poly_gcd_bezout(const Field& F, const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const Field& F, const Poly& a, const Poly& b);
/// Monic lcm of nonzero polynomials.
Poly poly_lcm(const Field& F, const Poly& a, const Poly& b);

struct FactoredPoly {
    Felt unit = 0;
    std::vector<std::pair<Poly, std::uint32_t>> factors;  // monic irreducible, multiplicity

    bool operator==(const FactoredPoly&) const = default;
};

/// Complete factorization into monic irreducibles. The randomness only drives
/// equal-degree splitting; the factor list is canonically sorted.
FactoredPoly poly_factor(const Field& F, const Poly& f, Rng& rng);
/// unit * prod factor^mult.
Poly poly_expand(const Field& F, const FactoredPoly& fp);
/// Throws InvalidArgument for constant polynomials.
bool poly_is_irreducible(const Field& F, const Poly& f);

/// Uniformly random polynomial of degree < d.
Poly poly_random(const Field& F, std::size_t d, Rng& rng);
/// Uniformly random monic irreducible polynomial of degree d >= 1.
Poly poly_random_irreducible(const Field& F, std::size_t d, Rng& rng);

/// Companion matrix: ones at (i, i+1), bottom row -c_0 .. -c_{n-1}.
/// Throws InvalidArgument for non-monic input or degree < 1.
Mat companion_matrix(const Field& F, const Poly& f);

}  // namespace gfjnf
