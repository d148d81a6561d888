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

#include <set>

#include "conjugacy.hpp"
#include "doctest.h"
#include "error.hpp"
#include "generate.hpp"
#include "jnf.hpp"
#include "matlin.hpp"
#include "oracles.hpp"

using namespace gfjnf;

namespace {

struct Groups {
    std::vector<Mat> gl, sl;
};

Groups groups(const Field& F, std::size_t n) {
    Groups g;
    g.gl = oracle::all_invertible(F, n);
    for (const auto& x : g.gl)
        if (oracle::det(F, x) == 1) g.sl.push_back(x);
    return g;
}

Mat conj(const Field& F, const Mat& x, const Mat& a) { return oracle::mul(F, oracle::mul(F, x, a), mat_inverse(F, x)); }

// Number of SL-orbits inside the GL-class of a.
std::size_t sl_class_count(const Field& F, const Mat& a, const Groups& g) {
    std::set<std::vector<Felt>> cls;
    for (const auto& x : g.gl) cls.insert(conj(F, x, a).data());
    std::set<std::vector<Felt>> seen;
    std::size_t count = 0;
    for (const auto& e : cls) {
        if (seen.count(e)) continue;
        ++count;
        const Mat m(a.rows(), a.cols(), e);
        for (const auto& x : g.sl) seen.insert(conj(F, x, m).data());
    }
    return count;
}

Mat random_sl(const Field& F, std::size_t n, Rng& rng) {
    Mat x = random_invertible(F, n, rng);
    const Felt s = F.inv(determinant(F, x));
    F.scale(x.row(0), s);
    return x;
}

}  // namespace

TEST_SUITE("conjugacy") {
    TEST_CASE("unipotent element of SL_2(F_3)") {
        Field F = Field::make(3, 1);
        Rng rng(50);
        const Mat u(2, 2, {1, 1, 0, 1});
        SlSplitting s = sl_splitting(F, u, rng);
        CHECK(s.d == 2);
        CHECK(s.omega == 2);
        REQUIRE(s.representatives.size() == 2);
        CHECK(s.representatives[0] == u);
        const Groups g = groups(F, 2);
        CHECK(g.sl.size() == 24);
        CHECK(sl_class_count(F, u, g) == 2);
        CHECK_FALSE(oracle::conjugate_by_some(F, s.representatives[0], s.representatives[1], g.sl));
    }

    TEST_CASE("companion of X^2+1 does not split") {
        Field F = Field::make(3, 1);
        Rng rng(51);
        const Mat c = companion_matrix(F, Poly({1, 0, 1}));
        CHECK(sl_splitting(F, c, rng).d == 1);
        CHECK(sl_class_count(F, c, groups(F, 2)) == 1);
    }

    TEST_CASE("splitting count matches brute force on SL_2(F_3) and SL_2(F_5)") {
        for (std::uint32_t p : {3u, 5u}) {
            Field F = Field::make(p, 1);
            Rng rng(52);
            const Groups g = groups(F, 2);
            for (const auto& a : g.sl) {
                SlSplitting s = sl_splitting(F, a, rng);
                REQUIRE(s.d == sl_class_count(F, a, g));
                REQUIRE(s.representatives.size() == s.d);
                for (std::size_t i = 0; i < s.d; ++i) {
                    REQUIRE(determinant(F, s.representatives[i]) == 1);
                    REQUIRE(similar(F, a, s.representatives[i], rng).similar);
                    for (std::size_t j = 0; j < i; ++j)
                        REQUIRE_FALSE(oracle::conjugate_by_some(F, s.representatives[i], s.representatives[j], g.sl));
                }
            }
        }
    }

    TEST_CASE("sl_conjugate agrees with brute force") {
        for (std::uint32_t p : {3u, 5u}) {
            Field F = Field::make(p, 1);
            Rng rng(53);
            const Groups g = groups(F, 2);
            for (const auto& a : g.sl)
                for (std::size_t i = 0; i < g.sl.size(); i += (p == 3 ? 1 : 7)) {
                    const Mat& b = g.sl[i];
                    SlConjugacy r = sl_conjugate(F, a, b, rng);
                    REQUIRE(r.conjugate == oracle::conjugate_by_some(F, a, b, g.sl));
                    if (r.conjugate) {
                        REQUIRE(determinant(F, *r.witness) == 1);
                        REQUIRE(conjugates_to(F, *r.witness, a, b));
                    }
                }
        }
    }

    TEST_CASE("random SL conjugates with larger blocks") {
        Rng rng(54);
        for (auto [q, k] : {std::pair{3u, 1u}, {5u, 1u}, {7u, 1u}, {2u, 2u}, {3u, 2u}, {13u, 1u}}) {
            Field F = Field::make(q, k);
            for (int t = 0; t < 25; ++t) {
                const std::size_t n = 2 + rng() % 6;
                Mat a = random_structured_matrix(F, n, rng).matrix;
                const Felt d = determinant(F, a);
                if (d == 0) continue;
                F.scale(a.row(0), F.inv(d));  // det 1 now; the form may change, which is fine
                REQUIRE(determinant(F, a) == 1);
                const Mat b = conj(F, random_sl(F, n, rng), a);
                SlConjugacy r = sl_conjugate(F, a, b, rng);
                REQUIRE(r.conjugate);
                REQUIRE(determinant(F, *r.witness) == 1);
                REQUIRE(conjugates_to(F, *r.witness, a, b));

                SlSplitting s = sl_splitting(F, a, rng);
                for (std::size_t i = 1; i < s.d; ++i) REQUIRE_FALSE(sl_conjugate(F, a, s.representatives[i], rng).conjugate);
            }
        }
    }

    TEST_CASE("GL-conjugate but not SL-conjugate") {
        Field F = Field::make(5, 1);
        Rng rng(55);
        // unipotent J_2(1): d = gcd(4, 2) = 2
        const Mat u(2, 2, {1, 1, 0, 1});
        SlSplitting s = sl_splitting(F, u, rng);
        REQUIRE(s.d == 2);
        CHECK(similar(F, u, s.representatives[1], rng).similar);
        CHECK_FALSE(sl_conjugate(F, u, s.representatives[1], rng).conjugate);
    }

    TEST_CASE("preconditions") {
        Field F = Field::make(3, 1);
        Rng rng(56);
        const Mat two(2, 2, {2, 0, 0, 1});
        CHECK_THROWS_AS(sl_splitting(F, two, rng), Error);
        CHECK_THROWS_AS(sl_conjugate(F, Mat::identity(2), two, rng), Error);
        CHECK_THROWS_AS(sl_conjugate(F, Mat::identity(2), Mat::identity(3), rng), Error);
    }
}
