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

#include "mat.hpp"

#include <algorithm>

#include "error.hpp"

namespace gfjnf {

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Felt> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) fail(ErrorCode::ShapeMismatch, "matrix data length does not match shape");
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Row>& rows, std::size_t cols) {
    Mat m(0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

void Mat::append_row(std::span<const Felt> r) {
    if (r.size() != cols_) fail(ErrorCode::ShapeMismatch, "row length does not match matrix");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

void Mat::append_rows(const Mat& m) {
    if (m.rows() == 0) return;
    if (m.cols() != cols_) fail(ErrorCode::ShapeMismatch, "row length does not match matrix");
    data_.insert(data_.end(), m.data_.begin(), m.data_.end());
    rows_ += m.rows();
}

bool Mat::is_zero() const noexcept { return gfjnf::is_zero(data_); }

bool is_zero(std::span<const Felt> v) noexcept {
    return std::all_of(v.begin(), v.end(), [](Felt x) { return x == 0; });
}

}  // namespace gfjnf
