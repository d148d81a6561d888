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

// RAII wrappers over the C handles, for the command-line front end.

#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfjnf/gfjnf.h"

namespace cli {

/// Raised for any non-OK status; carries the status for exit-code mapping.
class ApiError : public std::runtime_error {
   public:
    ApiError(gfjnf_status s, const std::string& msg) : std::runtime_error(msg), status_(s) {}
    gfjnf_status status() const noexcept { return status_; }

   private:
    gfjnf_status status_;
};

inline void check(gfjnf_status s) {
    if (s != GFJNF_OK) {
        std::string msg = gfjnf_last_error();
        throw ApiError(s, msg.empty() ? gfjnf_status_string(s) : msg);
    }
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
    void operator()(T* p) const noexcept { Destroy(p); }
};

using Field = std::unique_ptr<gfjnf_field, Deleter<gfjnf_field, gfjnf_field_destroy>>;
using Matrix = std::unique_ptr<gfjnf_matrix, Deleter<gfjnf_matrix, gfjnf_matrix_destroy>>;
using Poly = std::unique_ptr<gfjnf_poly, Deleter<gfjnf_poly, gfjnf_poly_destroy>>;
using Factored = std::unique_ptr<gfjnf_factored, Deleter<gfjnf_factored, gfjnf_factored_destroy>>;
using Jnf = std::unique_ptr<gfjnf_jnf, Deleter<gfjnf_jnf, gfjnf_jnf_destroy>>;
using SlSplit = std::unique_ptr<gfjnf_sl_split, Deleter<gfjnf_sl_split, gfjnf_sl_split_destroy>>;

inline std::vector<std::uint32_t> coeffs(const gfjnf_poly* p) {
    std::vector<std::uint32_t> c;
    for (int i = 0; i <= gfjnf_poly_degree(p); ++i) c.push_back(gfjnf_poly_coeff(p, static_cast<std::size_t>(i)));
    return c;
}

inline std::vector<std::vector<std::uint32_t>> rows(const gfjnf_matrix* m) {
    const std::size_t n = gfjnf_matrix_dim(m);
    std::vector<std::uint32_t> flat(n * n);
    check(gfjnf_matrix_entries(m, flat.data(), flat.size()));
    std::vector<std::vector<std::uint32_t>> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i].assign(flat.begin() + static_cast<std::ptrdiff_t>(i * n),
                                                      flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
    return out;
}

}  // namespace cli
