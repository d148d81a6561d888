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

#include <string>
#include <string_view>

#include "field.hpp"
#include "mat.hpp"

namespace gfjnf {

/// Text matrix format:
///
///   gfmat <p> <k>
///   modulus <c0> ... <ck>     (k > 1 only; the default modulus when absent)
///   <n>
///   n rows of n entries in [0, q-1], base-p packed
///
/// '#' starts a comment; blank lines are ignored.
struct MatrixFile {
    Field field;
    Mat matrix;
};

/// Throws Error with code Parse for malformed text, and the field errors
/// (NotPrime, ReducibleModulus, UnsupportedField) for bad headers.
MatrixFile parse_matrix_file(std::string_view text);
std::string serialize_matrix_file(const Field& F, const Mat& a);

}  // namespace gfjnf
