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

#include "matlin.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace gfjnf {

// ---------------------------------------------------------------- Subspace

Row Subspace::reduce(const Field& F, std::span<const Felt> v) const {
    if (v.size() != ambient()) fail(ErrorCode::ShapeMismatch, "vector length does not match subspace");
    Row r(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        Felt c = r[pivots_[i]];
        if (c != 0) F.axpy(r, F.neg(c), basis_.row(i));
    }
    return r;
}

bool Subspace::contains(const Field& F, std::span<const Felt> v) const { return is_zero(reduce(F, v)); }

bool Subspace::insert(const Field& F, std::span<const Felt> v) {
    Row r = reduce(F, v);
    auto it = std::find_if(r.begin(), r.end(), [](Felt x) { return x != 0; });
    if (it == r.end()) return false;
    const std::size_t pc = static_cast<std::size_t>(it - r.begin());
    F.scale(r, F.inv(r[pc]));
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        Felt c = basis_(i, pc);
        if (c != 0) F.axpy(basis_.row(i), F.neg(c), r);
    }
    const std::size_t pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), pc) - pivots_.begin());
    Mat next(0, ambient());
    for (std::size_t i = 0; i < pos; ++i) next.append_row(basis_.row(i));
    next.append_row(r);
    for (std::size_t i = pos; i < basis_.rows(); ++i) next.append_row(basis_.row(i));
    basis_ = std::move(next);
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), pc);
    return true;
}

Row Subspace::coordinates(std::span<const Felt> v) const {
    Row c(pivots_.size());
    for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
}

// ---------------------------------------------------------------- products

namespace {

// Prime fields: accumulate exact integer products and reduce once per entry.
// Each product is below 2^32, so 2^32 terms fit a 64-bit accumulator.
void prime_vec_mat(const Field& F, std::span<const Felt> v, const Mat& a, std::span<Felt> out,
                   std::vector<std::uint64_t>& acc) {
    acc.assign(a.cols(), 0);
    for (std::size_t k = 0; k < v.size(); ++k) {
        const std::uint64_t c = v[k];
        if (c == 0) continue;
        auto r = a.row(k);
        for (std::size_t j = 0; j < r.size(); ++j) acc[j] += c * r[j];
    }
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = F.reduce(acc[j]);
}

}  // namespace

Mat mat_mul(const Field& F, const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) fail(ErrorCode::ShapeMismatch, "mat_mul: inner dimensions differ");
    Mat out(a.rows(), b.cols());
    if (F.is_prime_field()) {
        std::vector<std::uint64_t> acc;
        for (std::size_t i = 0; i < a.rows(); ++i) prime_vec_mat(F, a.row(i), b, out.row(i), acc);
        return out;
    }
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (Felt c = a(i, k)) F.axpy(out.row(i), c, b.row(k));
    return out;
}

Mat mat_add(const Field& F, const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorCode::ShapeMismatch, "mat_add: shapes differ");
    Mat out = a;
    for (std::size_t i = 0; i < a.rows(); ++i) F.axpy(out.row(i), 1, b.row(i));
    return out;
}

Mat mat_sub(const Field& F, const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorCode::ShapeMismatch, "mat_sub: shapes differ");
    Mat out = a;
    for (std::size_t i = 0; i < a.rows(); ++i) F.axpy(out.row(i), F.neg(1), b.row(i));
    return out;
}

Mat mat_scale(const Field& F, const Mat& a, Felt c) {
    Mat out = a;
    for (std::size_t i = 0; i < a.rows(); ++i) F.scale(out.row(i), c);
    return out;
}

Row vec_mat_mul(const Field& F, std::span<const Felt> v, const Mat& a) {
    if (v.size() != a.rows()) fail(ErrorCode::ShapeMismatch, "vec_mat_mul: length does not match rows");
    Row out(a.cols(), 0);
    if (F.is_prime_field()) {
        std::vector<std::uint64_t> acc;
        prime_vec_mat(F, v, a, out, acc);
        return out;
    }
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) F.axpy(out, v[k], a.row(k));
    return out;
}

Mat mat_pow(const Field& F, const Mat& a, std::uint64_t e) {
    if (!a.square()) fail(ErrorCode::ShapeMismatch, "mat_pow needs a square matrix");
    Mat r = Mat::identity(a.rows()), b = a;
    while (e) {
        if (e & 1) r = mat_mul(F, r, b);
        e >>= 1;
        if (e) b = mat_mul(F, b, b);
    }
    return r;
}

Mat transpose(const Mat& a) {
    Mat t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

Mat direct_sum(const std::vector<Mat>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Mat out(r, c);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

Mat submatrix(const Mat& a, std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) {
    if (r0 + nr > a.rows() || c0 + nc > a.cols()) fail(ErrorCode::ShapeMismatch, "submatrix out of range");
    Mat out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) out(i, j) = a(r0 + i, c0 + j);
    return out;
}

// ---------------------------------------------------------------- elimination

Echelon echelonize(const Field& F, const Mat& m) {
    Mat w = m;
    Mat t = Mat::identity(m.rows());
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t col = 0; col < m.cols() && pr < m.rows(); ++col) {
        std::size_t i = pr;
        while (i < m.rows() && w(i, col) == 0) ++i;
        if (i == m.rows()) continue;
        if (i != pr) {
            std::swap_ranges(w.row(i).begin(), w.row(i).end(), w.row(pr).begin());
            std::swap_ranges(t.row(i).begin(), t.row(i).end(), t.row(pr).begin());
        }
        Felt s = F.inv(w(pr, col));
        F.scale(w.row(pr), s);
        F.scale(t.row(pr), s);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pr) continue;
            Felt c = w(r, col);
            if (c == 0) continue;
            Felt nc = F.neg(c);
            F.axpy(w.row(r), nc, w.row(pr));
            F.axpy(t.row(r), nc, t.row(pr));
        }
        pivots.push_back(col);
        ++pr;
    }
    Echelon e{Subspace(m.cols()), std::move(t)};
    e.space.basis_ = submatrix(w, 0, pr, 0, m.cols());
    e.space.pivots_ = std::move(pivots);
    return e;
}

std::size_t rank(const Field& F, const Mat& m) {
    Mat w = m;
    std::size_t pr = 0;
    for (std::size_t col = 0; col < m.cols() && pr < m.rows(); ++col) {
        std::size_t i = pr;
        while (i < m.rows() && w(i, col) == 0) ++i;
        if (i == m.rows()) continue;
        if (i != pr) std::swap_ranges(w.row(i).begin(), w.row(i).end(), w.row(pr).begin());
        Felt s = F.inv(w(pr, col));
        for (std::size_t r = pr + 1; r < m.rows(); ++r) {
            Felt c = w(r, col);
            if (c != 0) F.axpy(w.row(r), F.neg(F.mul(c, s)), w.row(pr));
        }
        ++pr;
    }
    return pr;
}

Subspace kernel_basis(const Field& F, const Mat& m) {
    Echelon e = echelonize(F, m);
    Subspace k(m.rows());
    for (std::size_t i = e.space.dim(); i < m.rows(); ++i) k.insert(F, e.transform.row(i));
    return k;
}

Mat mat_inverse(const Field& F, const Mat& m) {
    if (!m.square()) fail(ErrorCode::ShapeMismatch, "inverse of a non-square matrix");
    Echelon e = echelonize(F, m);
    if (e.space.dim() != m.rows()) fail(ErrorCode::Singular, "matrix is singular");
    return std::move(e.transform);
}

Felt determinant(const Field& F, const Mat& m) {
    if (!m.square()) fail(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
    Mat w = m;
    const std::size_t n = m.rows();
    Felt det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t i = col;
        while (i < n && w(i, col) == 0) ++i;
        if (i == n) return 0;
        if (i != col) {
            std::swap_ranges(w.row(i).begin(), w.row(i).end(), w.row(col).begin());
            det = F.neg(det);
        }
        det = F.mul(det, w(col, col));
        Felt s = F.inv(w(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            Felt c = w(r, col);
            if (c != 0) F.axpy(w.row(r), F.neg(F.mul(c, s)), w.row(col));
        }
    }
    return det;
}

bool conjugates_to(const Field& F, const Mat& x, const Mat& a, const Mat& b) {
    if (!x.square() || !a.square() || !b.square() || x.rows() != a.rows() || a.rows() != b.rows()) return false;
    if (rank(F, x) != x.rows()) return false;
    return mat_mul(F, x, a) == mat_mul(F, b, x);
}

Mat coordinates_in(const Field& F, const Mat& basis, const Mat& rows) {
    Echelon e = echelonize(F, basis);
    const std::size_t r = e.space.dim();
    if (r != basis.rows()) fail(ErrorCode::InvalidArgument, "coordinates_in: basis rows are dependent");
    Mat top = submatrix(e.transform, 0, r, 0, basis.rows());
    Mat c(0, r);
    for (std::size_t i = 0; i < rows.rows(); ++i) c.append_row(e.space.coordinates(rows.row(i)));
    return mat_mul(F, c, top);
}

// ---------------------------------------------------------------- polynomials of A

Poly min_poly_vector(const Field& F, const Mat& a, std::span<const Felt> v) {
    const std::size_t n = a.rows();
    if (!a.square() || v.size() != n) fail(ErrorCode::ShapeMismatch, "min_poly_vector: shape mismatch");
    if (is_zero(v)) return Poly::one();

    // Semi-echelon rows of the Krylov space, each paired with the polynomial
    // expressing it in terms of v, vA, vA^2, ...
    std::vector<Row> rows, exprs;
    std::vector<std::size_t> pivots;
    Row cur(v.begin(), v.end());
    for (std::size_t i = 0; i <= n; ++i) {
        Row w = cur;
        Row e(i + 1, 0);
        e[i] = 1;
        for (std::size_t j = 0; j < rows.size(); ++j) {
            Felt c = w[pivots[j]];
            if (c == 0) continue;
            Felt nc = F.neg(c);
            F.axpy(w, nc, rows[j]);
            F.axpy(std::span<Felt>(e.data(), exprs[j].size()), nc, exprs[j]);
        }
        auto it = std::find_if(w.begin(), w.end(), [](Felt x) { return x != 0; });
        if (it == w.end()) return Poly(std::move(e));
        const std::size_t pc = static_cast<std::size_t>(it - w.begin());
        Felt s = F.inv(w[pc]);
        F.scale(w, s);
        F.scale(e, s);
        rows.push_back(std::move(w));
        exprs.push_back(std::move(e));
        pivots.push_back(pc);
        cur = vec_mat_mul(F, cur, a);
    }
    fail(ErrorCode::Verification, "min_poly_vector: Krylov sequence did not terminate");
}

Poly min_poly_matrix(const Field& F, const Mat& a) {
    if (!a.square()) fail(ErrorCode::ShapeMismatch, "min_poly_matrix needs a square matrix");
    const std::size_t n = a.rows();
    Poly mu = Poly::one();
    Subspace seen(n);
    Row e(n, 0);
    for (std::size_t i = 0; i < n && static_cast<std::size_t>(mu.degree()) < n; ++i) {
        std::fill(e.begin(), e.end(), 0);
        e[i] = 1;
        if (seen.contains(F, e)) continue;
        Poly m = min_poly_vector(F, a, e);
        mu = poly_lcm(F, mu, m);
        if (static_cast<std::size_t>(mu.degree()) == n) break;
        Row cur = e;
        for (int k = 0; k < m.degree(); ++k) {
            seen.insert(F, cur);
            cur = vec_mat_mul(F, cur, a);
        }
    }
    return mu;
}

Poly char_poly(const Field& F, const Mat& a) {
    if (!a.square()) fail(ErrorCode::ShapeMismatch, "char_poly needs a square matrix");
    const std::size_t n = a.rows();
    Mat h = a;
    // Similarity reduction to upper Hessenberg form.
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t i = m;
        while (i < n && h(i, m - 1) == 0) ++i;
        if (i == n) continue;
        if (i != m) {
            std::swap_ranges(h.row(i).begin(), h.row(i).end(), h.row(m).begin());
            for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, m));
        }
        Felt tinv = F.inv(h(m, m - 1));
        for (std::size_t r = m + 1; r < n; ++r) {
            Felt u = F.mul(h(r, m - 1), tinv);
            if (u == 0) continue;
            F.axpy(h.row(r), F.neg(u), h.row(m));
            for (std::size_t c = 0; c < n; ++c) h(c, m) = F.add(h(c, m), F.mul(u, h(c, r)));
        }
    }
    // p_m = (X - h_mm) p_{m-1} - sum_i h_{m-i,m} (prod_{j=m-i+1..m} h_{j,j-1}) p_{m-i-1}
    std::vector<Poly> p{Poly::one()};
    for (std::size_t m = 1; m <= n; ++m) {
        Poly next = poly_mul(F, Poly::linear(F, h(m - 1, m - 1)), p[m - 1]);
        Felt prod = 1;
        for (std::size_t i = 1; i < m; ++i) {
            prod = F.mul(prod, h(m - i, m - i - 1));
            if (prod == 0) break;
            Felt c = F.mul(h(m - i - 1, m - 1), prod);
            if (c != 0) next = poly_sub(F, next, poly_scale(F, p[m - i - 1], c));
        }
        p.push_back(std::move(next));
    }
    return p.back();
}

// ---------------------------------------------------------------- spinning

Mat spin(const Field& F, const Mat& a, std::span<const Felt> v) {
    if (!a.square() || v.size() != a.rows()) fail(ErrorCode::ShapeMismatch, "spin: shape mismatch");
    if (a.rows() == 0) return Mat(0, 0);
    return spin_until(F, a, v, a.rows());
}

Mat spin_until(const Field& F, const Mat& a, std::span<const Felt> v, std::size_t d) {
    if (!a.square() || v.size() != a.rows()) fail(ErrorCode::ShapeMismatch, "spin_until: shape mismatch");
    if (d < 1 || d > a.rows()) fail(ErrorCode::InvalidArgument, "spin_until: d out of range");
    Mat out(0, a.cols());
    Row cur(v.begin(), v.end());
    out.append_row(cur);
    for (std::size_t i = 1; i < d; ++i) {
        cur = vec_mat_mul(F, cur, a);
        out.append_row(cur);
    }
    return out;
}

std::size_t cyclic_attempt_budget(double epsilon, std::uint32_t q) {
    if (!(epsilon >= 0.0 && epsilon < 1.0)) fail(ErrorCode::InvalidArgument, "epsilon must lie in [0, 1)");
    if (epsilon == 0.0) return 0;
    const double x = std::log(1.0 / (1.0 - epsilon)) / std::log(static_cast<double>(q));
    return static_cast<std::size_t>(std::ceil(x - 1e-12));
}

Mat find_cyclic_vector(const Field& F, const Mat& a, Rng& rng, double epsilon) {
    if (!a.square()) fail(ErrorCode::ShapeMismatch, "find_cyclic_vector needs a square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return Mat(0, 0);
    const std::size_t budget = cyclic_attempt_budget(epsilon, F.q());
    for (std::size_t t = 0; t < budget; ++t) {
        Mat s = spin(F, a, random_nonzero_vector(F, n, rng));
        if (rank(F, s) == n) return s;
    }
    // Maximal vector: sum of one vector of full local order per primary part.
    Poly mu = min_poly_matrix(F, a);
    if (static_cast<std::size_t>(mu.degree()) != n) fail(ErrorCode::Precondition, "matrix is not cyclic");
    FactoredPoly fac = poly_factor(F, mu, rng);
    Row v(n, 0), e(n, 0);
    for (const auto& [p, m] : fac.factors) {
        Poly pm = poly_pow(F, p, m);
        Poly rest = poly_div_exact(F, mu, pm);
        Poly below = poly_pow(F, p, m - 1);
        bool found = false;
        for (std::size_t j = 0; j < n && !found; ++j) {
            std::fill(e.begin(), e.end(), 0);
            e[j] = 1;
            Row w = eval_poly_vec(F, a, rest, e);
            if (!is_zero(eval_poly_vec(F, a, below, w))) {
                F.axpy(v, 1, w);
                found = true;
            }
        }
        if (!found) fail(ErrorCode::Verification, "no vector of full order in a primary component");
    }
    Mat s = spin(F, a, v);
    if (rank(F, s) != n) fail(ErrorCode::Precondition, "matrix is not cyclic");
    return s;
}

Row eval_poly_vec(const Field& F, const Mat& a, const Poly& f, std::span<const Felt> v) {
    if (!a.square() || v.size() != a.rows()) fail(ErrorCode::ShapeMismatch, "eval_poly_vec: shape mismatch");
    Row r(v.size(), 0);
    if (f.is_zero()) return r;
    F.axpy(r, f.lead(), v);
    for (int i = f.degree() - 1; i >= 0; --i) {
        r = vec_mat_mul(F, r, a);
        if (Felt c = f[static_cast<std::size_t>(i)]) F.axpy(r, c, v);
    }
    return r;
}

Row eval_poly_spun(const Field& F, const Poly& f, const Mat& spun) {
    if (f.degree() >= static_cast<int>(spun.rows()))
        fail(ErrorCode::InvalidArgument, "eval_poly_spun: degree exceeds available spun rows");
    Row r(spun.cols(), 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        if (Felt c = f[i]) F.axpy(r, c, spun.row(i));
    return r;
}

// ---------------------------------------------------------------- randomness

Row random_vector(const Field& F, std::size_t n, Rng& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, F.q() - 1);
    Row v(n);
    for (auto& x : v) x = dist(rng);
    return v;
}

Row random_nonzero_vector(const Field& F, std::size_t n, Rng& rng) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "no nonzero vectors in a zero-dimensional space");
    for (;;) {
        Row v = random_vector(F, n, rng);
        if (!is_zero(v)) return v;
    }
}

Row random_vector_outside(const Field& F, const Subspace& s, Rng& rng) {
    const std::size_t n = s.ambient();
    if (s.dim() >= n) fail(ErrorCode::Precondition, "subspace is the whole space");
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0, k = 0; j < n; ++j) {
        if (k < s.pivots().size() && s.pivots()[k] == j)
            ++k;
        else
            free_cols.push_back(j);
    }
    Row c = random_nonzero_vector(F, free_cols.size(), rng);
    Row x(n, 0);
    for (std::size_t i = 0; i < free_cols.size(); ++i) x[free_cols[i]] = c[i];
    Row coeff = random_vector(F, s.dim(), rng);
    for (std::size_t i = 0; i < s.dim(); ++i)
        if (coeff[i]) F.axpy(x, coeff[i], s.basis().row(i));
    return x;
}

Mat random_matrix(const Field& F, std::size_t rows, std::size_t cols, Rng& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, F.q() - 1);
    std::vector<Felt> d(rows * cols);
    for (auto& x : d) x = dist(rng);
    return Mat(rows, cols, std::move(d));
}

Mat random_invertible(const Field& F, std::size_t n, Rng& rng) {
    for (;;) {
        Mat m = random_matrix(F, n, n, rng);
        if (rank(F, m) == n) return m;
    }
}

}  // namespace gfjnf
