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

#include "conjugacy.hpp"

#include <numeric>

#include "error.hpp"
#include "matlin.hpp"

namespace gfjnf {

namespace {

std::uint32_t divisor_gcd(const Field& F, const std::vector<ElementaryDivisor>& divs) {
    std::uint32_t g = F.q() - 1;
    for (const auto& d : divs) g = std::gcd(g, d.power);
    return g;
}

void require_sl(const Field& F, const Mat& a, const char* what) {
    if (!a.square()) fail(ErrorCode::ShapeMismatch, std::string(what) + " must be square");
    if (determinant(F, a) != 1) fail(ErrorCode::Precondition, std::string(what) + " must have determinant 1");
}

Mat eval_poly_mat(const Field& F, const Poly& f, const Mat& a) {
    Mat r(a.rows(), a.cols());
    for (int i = f.degree(); i >= 0; --i) {
        r = mat_mul(F, r, a);
        for (std::size_t j = 0; j < a.rows(); ++j) r(j, j) = F.add(r(j, j), f[static_cast<std::size_t>(i)]);
    }
    return r;
}

bool is_primitive(const Field& F, Felt x) { return x != 0 && F.order(x) == F.q() - 1; }

// f of degree < deg p with det f(M_p) = N(f mod p) a primitive element.
Poly norm_generator(const Field& F, const Poly& p, Rng& rng) {
    if (p.degree() == 1) return Poly::constant(F.primitive());
    Mat c = companion_matrix(F, p);
    for (;;) {
        Poly f = poly_random(F, static_cast<std::size_t>(p.degree()), rng);
        if (is_primitive(F, determinant(F, eval_poly_mat(F, f, c)))) return f;
    }
}

struct Egcd {
    std::int64_t g, x, y;
};

Egcd egcd(std::int64_t a, std::int64_t b) {
    if (b == 0) return {a, 1, 0};
    Egcd e = egcd(b, a % b);
    return {e.g, e.y, e.x - (a / b) * e.y};
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
    a %= n;
    return a < 0 ? a + n : a;
}

}  // namespace

SlSplitting sl_splitting(const Field& F, const Mat& a, Rng& rng, double epsilon) {
    require_sl(F, a, "A");
    JnfResult r = jordan_normal_form(F, a, rng, JnfPath::Auto, epsilon);
    SlSplitting s;
    s.d = divisor_gcd(F, r.divisors);
    s.omega = F.primitive();
    const std::size_t n = a.rows();
    for (std::uint32_t i = 0; i < s.d; ++i) {
        // D^{-i} A D^i scales row 0 by omega^{-i} and column 0 by omega^i.
        Mat m = a;
        const Felt up = F.pow(s.omega, i), down = F.inv(up);
        for (std::size_t j = 0; j < n; ++j) {
            m(0, j) = F.mul(m(0, j), down);
            m(j, 0) = F.mul(m(j, 0), up);
        }
        s.representatives.push_back(std::move(m));
    }
    return s;
}

SlConjugacy sl_conjugate(const Field& F, const Mat& a, const Mat& b, Rng& rng, double epsilon) {
    require_sl(F, a, "A");
    require_sl(F, b, "B");
    if (a.rows() != b.rows()) fail(ErrorCode::ShapeMismatch, "sl_conjugate: shapes differ");
    JnfResult ra = jordan_normal_form(F, a, rng, JnfPath::Auto, epsilon);
    JnfResult rb = jordan_normal_form(F, b, rng, JnfPath::Auto, epsilon);
    if (ra.divisors != rb.divisors) return {};
    const std::size_t n = a.rows();
    if (n == 0) return {true, Mat(0, 0)};

    const Mat xb_inv = mat_inverse(F, rb.basis);
    const Felt det_w = F.mul(F.inv(determinant(F, rb.basis)), determinant(F, ra.basis));
    const std::int64_t order = F.q() - 1;
    const std::int64_t t = mod(-static_cast<std::int64_t>(F.log(det_w)), order);

    // Centralizer elements f_b(J_b) per block have det N_b^{m_b}; choose
    // exponents k_b with sum k_b e_b m_b = t (mod q - 1), N_b = omega^{e_b}.
    std::vector<Poly> gens;
    std::vector<std::int64_t> coef(ra.divisors.size(), 0);
    std::int64_t g = order;
    for (std::size_t i = 0; i < ra.divisors.size(); ++i) {
        const auto& dv = ra.divisors[i];
        Poly f = norm_generator(F, dv.factor, rng);
        Felt nb = dv.factor.degree() == 1 ? f[0] : determinant(F, eval_poly_mat(F, f, companion_matrix(F, dv.factor)));
        const std::int64_t ai = mod(static_cast<std::int64_t>(F.log(nb)) * dv.power, order);
        gens.push_back(std::move(f));
        Egcd e = egcd(g, ai);
        for (auto& c : coef) c = mod(c * e.x, order);
        coef[i] = mod(e.y, order);
        g = e.g;
    }
    if (t % g != 0) return {};
    const std::int64_t scale = t / g;
    std::vector<Mat> blocks;
    for (std::size_t i = 0; i < ra.divisors.size(); ++i) {
        const auto& dv = ra.divisors[i];
        Mat j = jordan_block(F, dv.factor, dv.power);
        blocks.push_back(mat_pow(F, eval_poly_mat(F, gens[i], j), static_cast<std::uint64_t>(mod(coef[i] * scale, order))));
    }
    Mat w = mat_mul(F, mat_mul(F, xb_inv, direct_sum(blocks)), ra.basis);
    if (determinant(F, w) != 1 || !conjugates_to(F, w, a, b))
        fail(ErrorCode::Verification, "SL witness failed verification");
    return {true, std::move(w)};
}

}  // namespace gfjnf
