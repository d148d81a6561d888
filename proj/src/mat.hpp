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

namespace gfjnf {

/// A row vector. Vectors act on matrices from the left: v * A.
using Row = std::vector<Felt>;

/// Dense row-major matrix over some GF(q). The field travels separately;
/// every operation takes the Field it computes in.
class Mat {
   public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    Mat(std::size_t rows, std::size_t cols, std::vector<Felt> data);

    static Mat identity(std::size_t n);
    /// Stacks the given rows; all must have length `cols`.
    static Mat from_rows(const std::vector<Row>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Felt& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    Felt operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    std::span<Felt> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
    std::span<const Felt> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }
    Row row_copy(std::size_t i) const { return Row(row(i).begin(), row(i).end()); }

    void append_row(std::span<const Felt> r);
    void append_rows(const Mat& m);

    const std::vector<Felt>& data() const noexcept { return data_; }

    bool is_zero() const noexcept;
    bool operator==(const Mat&) const = default;

   private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Felt> data_;
};

bool is_zero(std::span<const Felt> v) noexcept;

}  // namespace gfjnf
