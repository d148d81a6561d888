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
#include <span>
#include <vector>

#include "field.hpp"
#include "mat.hpp"
#include "poly.hpp"

namespace gfjnf {

struct Echelon;

/// A row space kept in reduced row-echelon form: pivots strictly increase,
/// pivot entries are 1 and pivot columns are zero in every other row.
class Subspace {
   public:
    explicit Subspace(std::size_t ambient = 0) : basis_(0, ambient) {}

    std::size_t ambient() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const Mat& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// v minus its projection onto the span along the pivot coordinates.
    Row reduce(const Field& F, std::span<const Felt> v) const;
    bool contains(const Field& F, std::span<const Felt> v) const;
    /// Adds v to the span; returns false when v was already inside.
    bool insert(const Field& F, std::span<const Felt> v);
    /// Coordinates of a vector known to lie in the span.
    Row coordinates(std::span<const Felt> v) const;

   private:
    friend Echelon echelonize(const Field& F, const Mat& m);
    Mat basis_;
    std::vector<std::size_t> pivots_;
};

struct Echelon {
    Subspace space;
    /// transform * M = [space.basis(); 0]
    Mat transform;
};

Mat mat_mul(const Field& F, const Mat& a, const Mat& b);
Mat mat_add(const Field& F, const Mat& a, const Mat& b);
Mat mat_sub(const Field& F, const Mat& a, const Mat& b);
Mat mat_scale(const Field& F, const Mat& a, Felt c);
Row vec_mat_mul(const Field& F, std::span<const Felt> v, const Mat& a);
Mat mat_pow(const Field& F, const Mat& a, std::uint64_t e);
Mat transpose(const Mat& a);
/// Block-diagonal sum.
Mat direct_sum(const std::vector<Mat>& blocks);
/// Rows [r0, r0+nr) and columns [c0, c0+nc).
Mat submatrix(const Mat& a, std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc);

Echelon echelonize(const Field& F, const Mat& m);
std::size_t rank(const Field& F, const Mat& m);
/// Left kernel {x : x M = 0}.
Subspace kernel_basis(const Field& F, const Mat& m);
/// Throws Singular for non-invertible input.
Mat mat_inverse(const Field& F, const Mat& m);
Felt determinant(const Field& F, const Mat& m);
/// x A x^{-1} == b, checked exactly. Returns false when x is singular.
bool conjugates_to(const Field& F, const Mat& x, const Mat& a, const Mat& b);
/// Coordinates of the rows of `rows` with respect to a basis given as rows
/// of `basis` (independent, spanning a space containing every row).
Mat coordinates_in(const Field& F, const Mat& basis, const Mat& rows);

/// Monic minimal polynomial of v under A; the constant 1 for v = 0.
Poly min_poly_vector(const Field& F, const Mat& a, std::span<const Felt> v);
/// lcm of the minimal polynomials of the standard basis vectors.
Poly min_poly_matrix(const Field& F, const Mat& a);
/// det(X I - A) via reduction to Hessenberg form.
Poly char_poly(const Field& F, const Mat& a);

/// Rows v, vA, ..., vA^{n-1}.
Mat spin(const Field& F, const Mat& a, std::span<const Felt> v);
/// Rows v, vA, ..., vA^{d-1}; requires 1 <= d <= n.
Mat spin_until(const Field& F, const Mat& a, std::span<const Felt> v, std::size_t d);

/// Random attempts made before the deterministic fallback:
/// ceil(log(1/(1-epsilon)) / log(q)).
std::size_t cyclic_attempt_budget(double epsilon, std::uint32_t q);

/// spin(A, v) of full rank for a cyclic v. Tries the random budget first,
/// then builds a maximal vector from the primary parts of the minimal
/// polynomial. Throws Precondition when A is not cyclic.
Mat find_cyclic_vector(const Field& F, const Mat& a, Rng& rng, double epsilon = 0.99);

/// v f(A) by Horner's rule with vector-matrix products only.
Row eval_poly_vec(const Field& F, const Mat& a, const Poly& f, std::span<const Felt> v);
/// v f(A) as a combination of precomputed rows spun[i] = v A^i.
Row eval_poly_spun(const Field& F, const Poly& f, const Mat& spun);

Row random_vector(const Field& F, std::size_t n, Rng& rng);
Row random_nonzero_vector(const Field& F, std::size_t n, Rng& rng);
/// Uniform over F^n \ S, built as s + c with c a nonzero combination of the
/// unit vectors at non-pivot columns. Throws Precondition when S is everything.
Row random_vector_outside(const Field& F, const Subspace& s, Rng& rng);
Mat random_matrix(const Field& F, std::size_t rows, std::size_t cols, Rng& rng);
Mat random_invertible(const Field& F, std::size_t n, Rng& rng);

}  // namespace gfjnf
