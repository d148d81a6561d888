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

#include "generate.hpp"

#include <algorithm>

#include "matlin.hpp"

namespace gfjnf {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

PlantedForm planted(const Field& F, std::vector<ElementaryDivisor> divs, Rng& rng) {
    std::sort(divs.begin(), divs.end(), divisor_less);
    Mat j = jordan_form_of(F, divs);
    return PlantedForm{random_conjugate(F, j, rng), std::move(divs)};
}

}  // namespace

Mat random_conjugate(const Field& F, const Mat& a, Rng& rng) {
    Mat x = random_invertible(F, a.rows(), rng);
    return mat_mul(F, mat_mul(F, x, a), mat_inverse(F, x));
}

Mat random_cyclic_matrix(const Field& F, std::size_t n, Rng& rng) {
    std::vector<Felt> c = poly_random(F, n, rng).coeffs();
    c.resize(n + 1, 0);
    c[n] = 1;
    return random_conjugate(F, companion_matrix(F, Poly(std::move(c))), rng);
}

std::size_t irreducible_mu_blocks(std::size_t n) {
    for (std::size_t c = std::min<std::size_t>(4, n); c < n; ++c)
        if (n % c == 0) return c;
    return n;
}

Mat random_irreducible_mu_matrix(const Field& F, std::size_t n, Rng& rng) {
    const std::size_t c = irreducible_mu_blocks(n);
    Poly p = poly_random_irreducible(F, n / c, rng);
    return random_conjugate(F, direct_sum(std::vector<Mat>(c, companion_matrix(F, p))), rng);
}

PlantedForm random_primary_matrix(const Field& F, std::size_t n, Rng& rng) {
    std::vector<std::size_t> degs;
    for (std::size_t d = 1; d <= std::min<std::size_t>(n, 3); ++d)
        if (n % d == 0) degs.push_back(d);
    const std::size_t d = degs[uniform(rng, 0, degs.size() - 1)];
    Poly p = poly_random_irreducible(F, d, rng);
    std::vector<ElementaryDivisor> divs;
    std::size_t left = n / d;
    while (left) {
        const auto part = static_cast<std::uint32_t>(uniform(rng, 1, left));
        divs.push_back({p, part});
        left -= part;
    }
    return planted(F, std::move(divs), rng);
}

PlantedForm random_structured_matrix(const Field& F, std::size_t n, Rng& rng) {
    std::vector<Poly> pool;
    const std::size_t factors = uniform(rng, 1, 3);
    for (std::size_t i = 0; i < factors; ++i) pool.push_back(poly_random_irreducible(F, uniform(rng, 1, 2), rng));
    std::vector<ElementaryDivisor> divs;
    std::size_t left = n;
    while (left) {
        std::vector<const Poly*> fit;
        for (const auto& p : pool)
            if (static_cast<std::size_t>(p.degree()) <= left) fit.push_back(&p);
        if (fit.empty()) {
            pool.push_back(poly_random_irreducible(F, 1, rng));
            continue;
        }
        const Poly& p = *fit[uniform(rng, 0, fit.size() - 1)];
        const std::size_t d = static_cast<std::size_t>(p.degree());
        const auto power = static_cast<std::uint32_t>(uniform(rng, 1, std::min<std::size_t>(left / d, 4)));
        divs.push_back({p, power});
        left -= d * power;
    }
    return planted(F, std::move(divs), rng);
}

}  // namespace gfjnf
