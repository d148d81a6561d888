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

// Small named matrices shared by the unit tests and the acceptance binary.

#include "mat.hpp"

namespace fixture {

using gfjnf::Mat;

/// 4x4 over F_3 with a single 1 at (1,3): mu = X^2, chi = X^4, rank 1.
inline Mat nilpotent_rank1() {
    Mat a(4, 4);
    a(0, 2) = 1;
    return a;
}

/// 4x4 over F_3 with 1s at (1,2) and (3,4): mu = X^2, chi = X^4, rank 2.
inline Mat nilpotent_rank2() {
    Mat b(4, 4);
    b(0, 1) = 1;
    b(2, 3) = 1;
    return b;
}

inline Mat diag(std::initializer_list<gfjnf::Felt> d) {
    Mat a(d.size(), d.size());
    std::size_t i = 0;
    for (auto x : d) a(i, i) = x, ++i;
    return a;
}

}  // namespace fixture
