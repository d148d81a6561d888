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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "field.hpp"
#include "jnf.hpp"
#include "mat.hpp"
#include "poly.hpp"

namespace gfjnf {

/// X A X^{-1} for a uniformly random invertible X.
Mat random_conjugate(const Field& F, const Mat& a, Rng& rng);

/// Conjugated companion matrix of a random monic polynomial of degree n.
Mat random_cyclic_matrix(const Field& F, std::size_t n, Rng& rng);

/// Number of companion blocks used for irreducible-mu test matrices: the
/// smallest divisor of n that is at least min(4, n).
std::size_t irreducible_mu_blocks(std::size_t n);

/// Conjugated I_c (x) M_p with p random irreducible of degree n / c.
Mat random_irreducible_mu_matrix(const Field& F, std::size_t n, Rng& rng);

struct PlantedForm {
    Mat matrix;
    std::vector<ElementaryDivisor> divisors;  // canonical order
};

/// Conjugated sum of Jordan blocks for one random irreducible p with a random
/// partition of n / deg p.
PlantedForm random_primary_matrix(const Field& F, std::size_t n, Rng& rng);

/// Conjugated sum of Jordan blocks for a random divisor list: factors of
/// degree 1 or 2, small powers, repeated eigenvalues likely.
PlantedForm random_structured_matrix(const Field& F, std::size_t n, Rng& rng);

}  // namespace gfjnf
