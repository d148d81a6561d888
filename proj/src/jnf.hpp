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
#include <optional>
#include <string>
#include <vector>

#include "decomp.hpp"
#include "field.hpp"
#include "mat.hpp"
#include "poly.hpp"

namespace gfjnf {

struct ElementaryDivisor {
    Poly factor;  // monic irreducible
    std::uint32_t power = 0;
    bool operator==(const ElementaryDivisor&) const = default;
};

/// Canonical divisor order: factor order, then descending power.
bool divisor_less(const ElementaryDivisor& a, const ElementaryDivisor& b) noexcept;

struct JnfResult {
    std::vector<ElementaryDivisor> divisors;
    Mat jnf;
    Mat basis;  // basis * A * basis^{-1} == jnf
};

enum class JnfPath { Auto, General, Cyclic, Irreducible };

/// Parses "auto", "general", "cyclic", "irreducible".
std::optional<JnfPath> parse_path(const std::string& s);
const char* path_name(JnfPath p);

/// M_p on the diagonal m times, a single 1 at (1, d) of each block above it.
Mat jordan_block(const Field& F, const Poly& p, std::uint32_t m);
/// Direct sum of jordan_block over the divisors in the given order.
Mat jordan_form_of(const Field& F, const std::vector<ElementaryDivisor>& divisors);

/// Rows v p(A)^i A^r (i < m, r < d) read off the spin rows v A^j, j < dm.
Mat jordan_power_basis(const Field& F, const Poly& p, std::uint32_t m, const Mat& spun);
/// Basis taking a cyclic primary block with generator spin `spun` to
/// jordan_block(p, m). Rows live in the same coordinates as `spun`.
Mat jordan_basis_from_spun(const Field& F, const Poly& p, std::uint32_t m, const Mat& spun);
/// Requires mu_A = chi_A = p^m.
Mat jordan_block_basis(const Field& F, const Mat& a, const Poly& p, std::uint32_t m, Rng& rng, double epsilon = 0.99);

/// Full pipeline with exact verification; throws Verification if the
/// computed basis does not conjugate A to the form.
/// `epsilon` is the success probability target handed to find_cyclic_vector.
JnfResult jordan_normal_form(const Field& F, const Mat& a, Rng& rng, JnfPath path = JnfPath::Auto,
                             double epsilon = 0.99);
JnfResult jnf_general_path(const Field& F, const Mat& a, Rng& rng, double epsilon = 0.99);
/// Requires deg mu_A = n; `mu` is its factorization.
JnfResult jnf_cyclic_fast_path(const Field& F, const Mat& a, const FactoredPoly& mu, Rng& rng, double epsilon = 0.99);
/// Requires mu_A irreducible; p is read off the first sampled vector.
JnfResult jnf_irreducible_fast_path(const Field& F, const Mat& a, Rng& rng);

struct Similarity {
    bool similar = false;
    std::optional<Mat> witness;  // X with X A X^{-1} = B
};

Similarity similar(const Field& F, const Mat& a, const Mat& b, Rng& rng, JnfPath path = JnfPath::Auto,
                   double epsilon = 0.99);

}  // namespace gfjnf
