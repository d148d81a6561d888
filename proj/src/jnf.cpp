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

#include "jnf.hpp"

#include <algorithm>

#include "error.hpp"
#include "matlin.hpp"

namespace gfjnf {

bool divisor_less(const ElementaryDivisor& a, const ElementaryDivisor& b) noexcept {
    if (a.factor != b.factor) return canonical_less(a.factor, b.factor);
    return a.power > b.power;
}

std::optional<JnfPath> parse_path(const std::string& s) {
    if (s == "auto") return JnfPath::Auto;
    if (s == "general") return JnfPath::General;
    if (s == "cyclic") return JnfPath::Cyclic;
    if (s == "irreducible") return JnfPath::Irreducible;
    return std::nullopt;
}

const char* path_name(JnfPath p) {
    switch (p) {
        case JnfPath::Auto: return "auto";
        case JnfPath::General: return "general";
        case JnfPath::Cyclic: return "cyclic";
        case JnfPath::Irreducible: return "irreducible";
    }
    return "?";
}

namespace {

// coupling_last_row: the superdiagonal 1 sits at (d, 1) of each coupling
// block instead of (1, d). That is the shape the power basis produces.
Mat block_matrix(const Field& F, const Poly& p, std::uint32_t m, bool coupling_last_row) {
    const std::size_t d = static_cast<std::size_t>(p.degree());
    Mat c = companion_matrix(F, p);
    Mat out(d * m, d * m);
    for (std::size_t b = 0; b < m; ++b) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) out(b * d + i, b * d + j) = c(i, j);
        if (b + 1 < m) {
            if (coupling_last_row)
                out(b * d + d - 1, (b + 1) * d) = 1;
            else
                out(b * d, (b + 1) * d + d - 1) = 1;
        }
    }
    return out;
}

Mat spin_from_unit_vector(const Field& F, const Mat& j) {
    const std::size_t n = j.rows();
    Row e(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(e.begin(), e.end(), 0);
        e[i] = 1;
        Mat s = spin(F, j, e);
        if (rank(F, s) == n) return s;
    }
    fail(ErrorCode::Verification, "no unit vector generates the block");
}

// T with T * (power-basis block) * T^{-1} = jordan_block(p, m). Both blocks
// are similar to the companion matrix of p^m via their spin matrices.
Mat power_to_block(const Field& F, const Poly& p, std::uint32_t m) {
    const std::size_t n = static_cast<std::size_t>(p.degree()) * m;
    if (p.degree() == 1 || m == 1) return Mat::identity(n);
    Mat ks = spin_from_unit_vector(F, block_matrix(F, p, m, false));
    Mat kl = spin_from_unit_vector(F, block_matrix(F, p, m, true));
    return mat_mul(F, mat_inverse(F, ks), kl);
}

struct Block {
    ElementaryDivisor div;
    Mat rows;  // ambient coordinates
};

JnfResult assemble(const Field& F, const Mat& a, std::vector<Block> blocks) {
    std::stable_sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) { return divisor_less(x.div, y.div); });
    const std::size_t n = a.rows();
    JnfResult r;
    r.basis = Mat(0, n);
    std::vector<Mat> forms;
    for (auto& b : blocks) {
        forms.push_back(block_matrix(F, b.div.factor, b.div.power, false));
        r.basis.append_rows(b.rows);
        r.divisors.push_back(std::move(b.div));
    }
    r.jnf = direct_sum(forms);
    if (r.basis.rows() != n || r.jnf.rows() != n) fail(ErrorCode::Verification, "block sizes do not add up to n");
    if (!conjugates_to(F, r.basis, a, r.jnf)) fail(ErrorCode::Verification, "basis does not conjugate A to its normal form");
    return r;
}

std::size_t as_size(int d) { return static_cast<std::size_t>(d); }

}  // namespace

Mat jordan_block(const Field& F, const Poly& p, std::uint32_t m) {
    if (m == 0) fail(ErrorCode::InvalidArgument, "jordan_block: power must be positive");
    if (p.degree() < 1 || !p.is_monic()) fail(ErrorCode::InvalidArgument, "jordan_block: factor must be monic of degree >= 1");
    if (!poly_is_irreducible(F, p)) fail(ErrorCode::InvalidArgument, "jordan_block: factor is reducible");
    return block_matrix(F, p, m, false);
}

Mat jordan_form_of(const Field& F, const std::vector<ElementaryDivisor>& divisors) {
    std::vector<Mat> forms;
    for (const auto& d : divisors) forms.push_back(jordan_block(F, d.factor, d.power));
    return direct_sum(forms);
}

Mat jordan_power_basis(const Field& F, const Poly& p, std::uint32_t m, const Mat& spun) {
    const std::size_t d = as_size(p.degree());
    const std::size_t n = d * m;
    if (spun.rows() < n) fail(ErrorCode::InvalidArgument, "jordan_power_basis: not enough spin rows");
    Mat out(0, spun.cols());
    Poly pi = Poly::one();
    Row row(spun.cols());
    for (std::uint32_t i = 0; i < m; ++i) {
        for (std::size_t r = 0; r < d; ++r) {
            std::fill(row.begin(), row.end(), 0);
            for (std::size_t j = 0; j < pi.coeffs().size(); ++j)
                if (Felt c = pi[j]) F.axpy(row, c, spun.row(j + r));
            out.append_row(row);
        }
        if (i + 1 < m) pi = poly_mul(F, pi, p);
    }
    return out;
}

Mat jordan_basis_from_spun(const Field& F, const Poly& p, std::uint32_t m, const Mat& spun) {
    Mat pb = jordan_power_basis(F, p, m, spun);
    if (p.degree() == 1 || m == 1) return pb;
    return mat_mul(F, power_to_block(F, p, m), pb);
}

Mat jordan_block_basis(const Field& F, const Mat& a, const Poly& p, std::uint32_t m, Rng& rng, double epsilon) {
    if (!a.square() || a.rows() != as_size(p.degree()) * m)
        fail(ErrorCode::Precondition, "jordan_block_basis: size must equal deg(p) * m");
    Mat s = find_cyclic_vector(F, a, rng, epsilon);
    Mat b = jordan_basis_from_spun(F, p, m, s);
    if (!conjugates_to(F, b, a, block_matrix(F, p, m, false)))
        fail(ErrorCode::Precondition, "jordan_block_basis: matrix is not cyclic primary for p^m");
    return b;
}

JnfResult jnf_general_path(const Field& F, const Mat& a, Rng& rng, double epsilon) {
    PrimaryDecomposition pd = primary_decomposition(F, a, rng);
    std::vector<Block> blocks;
    for (const auto& comp : pd.components) {
        Mat ai = restrict_to(F, a, comp.basis);
        CyclicDecomposition cd = cyclic_decomposition(F, ai, comp.factor, comp.multiplicity, rng, epsilon);
        for (const auto& cc : cd.components) {
            Mat local = jordan_basis_from_spun(F, comp.factor, cc.length, cc.basis);
            blocks.push_back(Block{{comp.factor, cc.length}, mat_mul(F, local, comp.basis)});
        }
    }
    return assemble(F, a, std::move(blocks));
}

JnfResult jnf_cyclic_fast_path(const Field& F, const Mat& a, const FactoredPoly& mu, Rng& rng, double epsilon) {
    const std::size_t n = a.rows();
    Poly m = poly_expand(F, mu);
    if (as_size(m.degree()) != n) fail(ErrorCode::Precondition, "cyclic path: deg mu_A differs from n");
    Mat spun = find_cyclic_vector(F, a, rng, epsilon);
    std::vector<Block> blocks;
    for (const auto& [p, e] : mu.factors) {
        Poly cof = poly_div_exact(F, m, poly_pow(F, p, e));
        Row w = eval_poly_spun(F, cof, spun);
        Mat s = spin_until(F, a, w, as_size(p.degree()) * e);
        blocks.push_back(Block{{p, e}, jordan_basis_from_spun(F, p, e, s)});
    }
    return assemble(F, a, std::move(blocks));
}

JnfResult jnf_irreducible_fast_path(const Field& F, const Mat& a, Rng& rng) {
    if (!a.square()) fail(ErrorCode::ShapeMismatch, "irreducible path needs a square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return JnfResult{{}, Mat(0, 0), Mat(0, 0)};
    Row v = random_nonzero_vector(F, n, rng);
    // Every nonzero vector has minimal polynomial mu_A when mu_A is irreducible.
    const Poly p = min_poly_vector(F, a, v);
    const std::size_t d = as_size(p.degree());
    if (n % d != 0 || !poly_is_irreducible(F, p)) fail(ErrorCode::Precondition, "irreducible path: mu_A is reducible");
    Subspace span(n);
    std::vector<Block> blocks;
    for (;;) {
        Mat s = spin_until(F, a, v, d);
        Row next = vec_mat_mul(F, s.row(d - 1), a);
        Row pv = eval_poly_spun(F, poly_sub(F, p, Poly::monomial(1, d)), s);
        F.axpy(pv, 1, next);
        if (!is_zero(pv)) fail(ErrorCode::Precondition, "irreducible path: mu_A is reducible");
        for (std::size_t i = 0; i < s.rows(); ++i)
            if (!span.insert(F, s.row(i))) fail(ErrorCode::Precondition, "irreducible path: mu_A is reducible");
        blocks.push_back(Block{{p, 1}, std::move(s)});
        if (span.dim() == n) break;
        v = random_vector_outside(F, span, rng);
    }
    return assemble(F, a, std::move(blocks));
}

JnfResult jordan_normal_form(const Field& F, const Mat& a, Rng& rng, JnfPath path, double epsilon) {
    if (!a.square()) fail(ErrorCode::ShapeMismatch, "jordan_normal_form needs a square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return JnfResult{{}, Mat(0, 0), Mat(0, 0)};
    if (path == JnfPath::General) return jnf_general_path(F, a, rng, epsilon);
    if (path == JnfPath::Irreducible) return jnf_irreducible_fast_path(F, a, rng);

    Poly mu = min_poly_matrix(F, a);
    FactoredPoly fac = poly_factor(F, mu, rng);
    const bool cyclic = as_size(mu.degree()) == n;
    const bool irreducible = fac.factors.size() == 1 && fac.factors[0].second == 1;
    switch (path) {
        case JnfPath::Cyclic:
            if (!cyclic) fail(ErrorCode::Precondition, "cyclic path requested for a non-cyclic matrix");
            return jnf_cyclic_fast_path(F, a, fac, rng, epsilon);
        default:
            if (cyclic) return jnf_cyclic_fast_path(F, a, fac, rng, epsilon);
            if (irreducible) return jnf_irreducible_fast_path(F, a, rng);
            return jnf_general_path(F, a, rng, epsilon);
    }
}

Similarity similar(const Field& F, const Mat& a, const Mat& b, Rng& rng, JnfPath path, double epsilon) {
    if (!a.square() || !b.square() || a.rows() != b.rows()) fail(ErrorCode::ShapeMismatch, "similar: shapes differ");
    JnfResult ra = jordan_normal_form(F, a, rng, path, epsilon);
    JnfResult rb = jordan_normal_form(F, b, rng, path, epsilon);
    if (ra.divisors != rb.divisors) return {};
    Mat w = mat_mul(F, mat_inverse(F, rb.basis), ra.basis);
    if (!conjugates_to(F, w, a, b)) fail(ErrorCode::Verification, "similarity witness failed verification");
    return {true, std::move(w)};
}

}  // namespace gfjnf
