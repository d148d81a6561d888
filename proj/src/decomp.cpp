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

#include "decomp.hpp"

#include <algorithm>
#include <map>

#include "error.hpp"

namespace gfjnf {

namespace {

bool canonical_poly_less(const Poly& a, const Poly& b) { return canonical_less(a, b); }

}  // namespace

Mat restrict_to(const Field& F, const Mat& a, const Mat& basis) {
    std::vector<std::size_t> piv;
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        auto r = basis.row(i);
        auto it = std::find_if(r.begin(), r.end(), [](Felt x) { return x != 0; });
        if (it == r.end()) fail(ErrorCode::InvalidArgument, "restrict_to: zero basis row");
        piv.push_back(static_cast<std::size_t>(it - r.begin()));
    }
    Mat img = mat_mul(F, basis, a);
    Mat out(basis.rows(), basis.rows());
    for (std::size_t i = 0; i < img.rows(); ++i)
        for (std::size_t j = 0; j < piv.size(); ++j) out(i, j) = img(i, piv[j]);
    return out;
}

// ---------------------------------------------------------------- primary

PrimaryDecomposition primary_decomposition(const Field& F, const Mat& a, Rng& rng) {
    if (!a.square()) fail(ErrorCode::ShapeMismatch, "primary_decomposition needs a square matrix");
    const std::size_t n = a.rows();
    PrimaryDecomposition out{Mat(0, n), {}};
    if (n == 0) return out;

    struct Part {
        std::uint32_t mult = 0;
        Subspace space;
    };
    std::map<Poly, Part, decltype(&canonical_poly_less)> parts(&canonical_poly_less);
    Subspace total(n);

    while (total.dim() < n) {
        Row v = random_vector_outside(F, total, rng);
        Poly mv = min_poly_vector(F, a, v);

        // Peel off factors already known, factor only what is new.
        std::vector<std::pair<Poly, std::uint32_t>> fac;
        Poly rest = mv;
        for (const auto& [p, part] : parts) {
            std::uint32_t e = 0;
            for (;;) {
                auto [qq, r] = poly_divmod(F, rest, p);
                if (!r.is_zero()) break;
                rest = std::move(qq);
                ++e;
            }
            if (e) fac.emplace_back(p, e);
        }
        if (rest.degree() > 0) {
            FactoredPoly fr = poly_factor(F, rest, rng);
            for (auto& f : fr.factors) fac.push_back(std::move(f));
        }

        Mat spun = spin_until(F, a, v, static_cast<std::size_t>(mv.degree()));
        for (const auto& [p, e] : fac) {
            Poly cof = poly_div_exact(F, mv, poly_pow(F, p, e));
            Row w = eval_poly_spun(F, cof, spun);
            auto [it, fresh] = parts.try_emplace(p, Part{0, Subspace(n)});
            Part& part = it->second;
            part.mult = std::max(part.mult, e);
            // The part is A-invariant, so spinning may stop at the first
            // image already inside it.
            const std::size_t limit = static_cast<std::size_t>(e) * static_cast<std::size_t>(p.degree());
            for (std::size_t i = 0; i < limit; ++i) {
                if (!part.space.insert(F, w)) break;
                total.insert(F, w);
                if (i + 1 < limit) w = vec_mat_mul(F, w, a);
            }
        }
    }

    for (auto& [p, part] : parts) {
        out.basis.append_rows(part.space.basis());
        out.components.push_back(PrimaryComponent{p, part.mult, part.space.basis()});
    }
    return out;
}

// ---------------------------------------------------------------- lengths

PolyAction::PolyAction(const Field& F, const Mat& a, const Poly& p) : F_(&F), a_(&a), p_(p) {
    if (!a.square()) fail(ErrorCode::ShapeMismatch, "PolyAction needs a square matrix");
    if (p.degree() == 1) {
        // p(A) = lead * A + c0 * I costs nothing to form.
        pa_ = mat_scale(F, a, p.lead());
        for (std::size_t i = 0; i < a.rows(); ++i) pa_(i, i) = F.add(pa_(i, i), p[0]);
        has_matrix_ = true;
    }
}

Row PolyAction::apply(std::span<const Felt> v) const {
    if (has_matrix_) return vec_mat_mul(*F_, v, pa_);
    return eval_poly_vec(*F_, *a_, p_, v);
}

namespace {

template <class Step>
VectorLength length_by(Step step, std::uint32_t m, std::span<const Felt> v) {
    VectorLength out{0, Row(v.begin(), v.end())};
    if (is_zero(v)) return out;
    Row cur(v.begin(), v.end());
    for (std::uint32_t i = 1; i <= m; ++i) {
        Row next = step(cur);
        if (is_zero(next)) {
            out.lambda = i;
            out.last = std::move(cur);
            return out;
        }
        cur = std::move(next);
    }
    fail(ErrorCode::Precondition, "vector_length: p^m does not annihilate the vector");
}

}  // namespace

VectorLength vector_length(const Field& F, const Mat& pA, std::uint32_t m, std::span<const Felt> v) {
    if (!pA.square() || v.size() != pA.rows()) fail(ErrorCode::ShapeMismatch, "vector_length: shape mismatch");
    return length_by([&](const Row& x) { return vec_mat_mul(F, x, pA); }, m, v);
}

VectorLength vector_length(const PolyAction& pa, std::uint32_t m, std::span<const Felt> v) {
    return length_by([&](const Row& x) { return pa.apply(x); }, m, v);
}

// ---------------------------------------------------------------- dependence

std::vector<Poly> fx_linear_dependence(const Field& F, const Mat& a, std::size_t d, const std::vector<Row>& vecs) {
    if (d == 0) fail(ErrorCode::InvalidArgument, "fx_linear_dependence: d must be positive");
    if (vecs.empty()) fail(ErrorCode::NoDependence, "no vectors given");
    Mat stacked(0, a.cols());
    for (const auto& u : vecs) stacked.append_rows(spin_until(F, a, u, d));
    Subspace ker = kernel_basis(F, stacked);
    if (ker.dim() == 0) fail(ErrorCode::NoDependence, "vectors are independent over F[X]/p");
    auto row = ker.basis().row(0);
    std::vector<Poly> q;
    q.reserve(vecs.size());
    for (std::size_t i = 0; i < vecs.size(); ++i)
        q.emplace_back(std::vector<Felt>(row.begin() + static_cast<std::ptrdiff_t>(i * d),
                                         row.begin() + static_cast<std::ptrdiff_t>((i + 1) * d)));
    return q;
}

// ---------------------------------------------------------------- cyclic

CyclicDecomposition cyclic_decomposition(const Field& F, const Mat& a, const Poly& p, std::uint32_t m, Rng& rng,
                                         double epsilon) {
    if (!a.square()) fail(ErrorCode::ShapeMismatch, "cyclic_decomposition needs a square matrix");
    if (p.degree() < 1 || !p.is_monic() || m == 0) fail(ErrorCode::InvalidArgument, "cyclic_decomposition: bad factor");
    const std::size_t n = a.rows();
    const std::size_t d = static_cast<std::size_t>(p.degree());
    CyclicDecomposition out{Mat::identity(n), {}};
    if (n == 0) return out;
    if (n % d != 0) fail(ErrorCode::Precondition, "dimension is not a multiple of deg p");

    if (static_cast<std::size_t>(m) * d == n) {
        Mat s = find_cyclic_vector(F, a, rng, epsilon);
        out.components.push_back(CyclicComponent{s.row_copy(0), m, std::move(s)});
        return out;
    }

    // Seed generators: any spanning family of cyclic subspaces.
    std::vector<Row> gens;
    Subspace span(n);
    while (span.dim() < n) {
        Row v = random_vector_outside(F, span, rng);
        gens.push_back(v);
        for (std::size_t i = 0; i < n; ++i) {
            if (!span.insert(F, v)) break;
            v = vec_mat_mul(F, v, a);
        }
    }

    PolyAction pa(F, a, p);
    std::vector<VectorLength> len;
    for (const auto& g : gens) len.push_back(vector_length(pa, m, g));
    const std::size_t target = n / d;
    auto total = [&] {
        std::size_t s = 0;
        for (const auto& l : len) s += l.lambda;
        return s;
    };

    while (total() != target) {
        std::vector<Row> lasts;
        for (const auto& l : len) lasts.push_back(l.last);
        std::vector<Poly> q = fx_linear_dependence(F, a, d, lasts);
        std::size_t j = gens.size();
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (!q[i].is_zero() && (j == gens.size() || len[i].lambda < len[j].lambda)) j = i;
        Row w(n, 0);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (q[i].is_zero()) continue;
            Poly f = poly_mul(F, q[i], poly_pow(F, p, len[i].lambda - len[j].lambda));
            F.axpy(w, 1, eval_poly_vec(F, a, f, gens[i]));
        }
        if (is_zero(w)) {
            gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(j));
            len.erase(len.begin() + static_cast<std::ptrdiff_t>(j));
        } else {
            len[j] = vector_length(pa, m, w);
            gens[j] = std::move(w);
        }
    }

    std::vector<std::size_t> order(gens.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return len[x].lambda > len[y].lambda; });
    out.basis = Mat(0, n);
    for (std::size_t i : order) {
        Mat s = spin_until(F, a, gens[i], len[i].lambda * d);
        out.basis.append_rows(s);
        out.components.push_back(CyclicComponent{gens[i], len[i].lambda, std::move(s)});
    }
    return out;
}

std::vector<std::uint32_t> conjugate_partition(const std::vector<std::uint32_t>& lengths) {
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        if (lengths[i] == 0) fail(ErrorCode::InvalidArgument, "partition parts must be positive");
        if (i && lengths[i] > lengths[i - 1]) fail(ErrorCode::InvalidArgument, "partition must be non-increasing");
    }
    std::vector<std::uint32_t> out(lengths.empty() ? 0 : lengths.front(), 0);
    for (std::uint32_t l : lengths)
        for (std::uint32_t i = 0; i < l; ++i) ++out[i];
    return out;
}

}  // namespace gfjnf
