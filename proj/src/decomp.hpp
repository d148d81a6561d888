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
#include <span>
#include <vector>

#include "field.hpp"
#include "mat.hpp"
#include "matlin.hpp"
#include "poly.hpp"

namespace gfjnf {

/// ker p^m(A) for one irreducible factor p of the minimal polynomial.
struct PrimaryComponent {
    Poly factor;
    std::uint32_t multiplicity = 0;
    Mat basis;  // RREF rows, dim x n
};

struct PrimaryDecomposition {
    Mat basis;  // component bases stacked in canonical factor order
    std::vector<PrimaryComponent> components;
};

/// Matrix of A acting on the A-invariant row space of `basis` (RREF rows),
/// in the coordinates of those rows.
Mat restrict_to(const Field& F, const Mat& a, const Mat& basis);

PrimaryDecomposition primary_decomposition(const Field& F, const Mat& a, Rng& rng);

/// v -> v p(A), either through a precomputed matrix or by Horner's rule.
class PolyAction {
   public:
    PolyAction(const Field& F, const Mat& a, const Poly& p);
    Row apply(std::span<const Felt> v) const;
    const Poly& poly() const noexcept { return p_; }

   private:
    const Field* F_;
    const Mat* a_;
    Poly p_;
    Mat pa_;
    bool has_matrix_ = false;
};

struct VectorLength {
    std::uint32_t lambda = 0;
    Row last;  // v p(A)^{lambda-1}, or v itself when v = 0
};

/// Least i with v p(A)^i = 0 given pA = p(A) and mu_A | p^m.
VectorLength vector_length(const Field& F, const Mat& pA, std::uint32_t m, std::span<const Felt> v);
VectorLength vector_length(const PolyAction& pa, std::uint32_t m, std::span<const Felt> v);

/// Polynomials q_i of degree < d, not all zero, with sum u_i q_i(A) = 0.
/// Throws NoDependence when the u_i are F[X]/p-independent.
std::vector<Poly> fx_linear_dependence(const Field& F, const Mat& a, std::size_t d, const std::vector<Row>& vecs);

struct CyclicComponent {
    Row generator;
    std::uint32_t length = 0;
    Mat basis;  // spin_until(A, generator, length * deg p)
};

struct CyclicDecomposition {
    Mat basis;
    std::vector<CyclicComponent> components;  // descending length
};

/// A must be primary with minimal polynomial p^m, p irreducible.
CyclicDecomposition cyclic_decomposition(const Field& F, const Mat& a, const Poly& p, std::uint32_t m, Rng& rng,
                                         double epsilon = 0.99);

/// lambda'_i = #{j : lambda_j >= i}; input must be non-increasing and positive.
std::vector<std::uint32_t> conjugate_partition(const std::vector<std::uint32_t>& lengths);

}  // namespace gfjnf
