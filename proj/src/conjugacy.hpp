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
#include <vector>

#include "field.hpp"
#include "jnf.hpp"
#include "mat.hpp"
#include "poly.hpp"

namespace gfjnf {

struct SlSplitting {
    /// Number of SL_n classes the GL_n class of A splits into:
    /// gcd(q - 1, all elementary divisor exponents).
    std::uint32_t d = 1;
    Felt omega = 1;
    /// D^{-i} A D^i for i < d, with D = diag(omega, 1, ..., 1).
    std::vector<Mat> representatives;
};

/// Requires det A = 1.
SlSplitting sl_splitting(const Field& F, const Mat& a, Rng& rng, double epsilon = 0.99);

struct SlConjugacy {
    bool conjugate = false;
    std::optional<Mat> witness;  // X in SL_n with X A X^{-1} = B
};

/// Requires det A = det B = 1.
SlConjugacy sl_conjugate(const Field& F, const Mat& a, const Mat& b, Rng& rng, double epsilon = 0.99);

}  // namespace gfjnf
