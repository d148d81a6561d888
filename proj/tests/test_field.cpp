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

#include <random>

#include "doctest.h"
#include "error.hpp"
#include "field.hpp"
#include "oracles.hpp"

using namespace gfjnf;

namespace {

void check_against_digits(const Field& F, bool exhaustive, std::mt19937_64& rng) {
    const auto D = oracle::digit_field(F);
    const std::uint32_t q = F.q();
    auto check_pair = [&](Felt a, Felt b) {
        REQUIRE(F.add(a, b) == D.add(a, b));
        REQUIRE(F.mul(a, b) == D.mul(a, b));
        REQUIRE(F.add(F.sub(a, b), b) == a);
        if (b != 0) REQUIRE(F.mul(F.div(a, b), b) == a);
    };
    if (exhaustive) {
        for (Felt a = 0; a < q; ++a)
            for (Felt b = 0; b < q; ++b) check_pair(a, b);
    } else {
        std::uniform_int_distribution<Felt> dist(0, q - 1);
        for (int i = 0; i < 20000; ++i) check_pair(dist(rng), dist(rng));
    }
}

}  // namespace

TEST_SUITE("field") {
    TEST_CASE("table arithmetic matches digit polynomials, small fields exhaustively") {
        std::mt19937_64 rng(1);
        for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}, {7u, 1u}, {2u, 3u}, {3u, 2u}, {2u, 4u},
                            {5u, 2u}, {3u, 3u}, {11u, 2u}, {2u, 8u}})
            check_against_digits(Field::make(p, k), true, rng);
    }

    TEST_CASE("table arithmetic matches digit polynomials, large fields sampled") {
        std::mt19937_64 rng(2);
        for (auto [p, k] : {std::pair{2u, 16u}, {3u, 10u}, {65521u, 1u}, {251u, 2u}, {31u, 3u}})
            check_against_digits(Field::make(p, k), false, rng);
    }

    TEST_CASE("axpy agrees with scalar operations") {
        std::mt19937_64 rng(3);
        for (auto [p, k] : {std::pair{5u, 1u}, {65521u, 1u}, {2u, 5u}, {11u, 2u}, {3u, 7u}}) {
            Field F = Field::make(p, k);
            std::uniform_int_distribution<Felt> dist(0, F.q() - 1);
            for (int t = 0; t < 200; ++t) {
                std::vector<Felt> x(17), y(17);
                for (auto& v : x) v = dist(rng);
                for (auto& v : y) v = dist(rng);
                const Felt c = dist(rng);
                auto expect = y;
                for (std::size_t i = 0; i < x.size(); ++i) expect[i] = F.add(y[i], F.mul(c, x[i]));
                F.axpy(y, c, x);
                REQUIRE(y == expect);
            }
        }
    }

    TEST_CASE("primitive element is the smallest generator") {
        for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {7u, 1u}, {2u, 4u}, {3u, 2u}, {5u, 2u}, {11u, 2u}}) {
            Field F = Field::make(p, k);
            const Felt g = F.primitive();
            CHECK(F.order(g) == F.q() - 1);
            for (Felt a = 1; a < g; ++a) CHECK(F.order(a) < F.q() - 1);
            for (Felt a = 1; a < F.q(); ++a) CHECK(F.exp(F.log(a)) == a);
        }
    }

    TEST_CASE("default moduli") {
        CHECK(Field::make(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
        CHECK(Field::make(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});
        CHECK(Field::make(5, 1).modulus().empty());
        for (auto [p, k] : {std::pair{2u, 8u}, {11u, 2u}, {3u, 5u}}) {
            Field F = Field::make(p, k);
            std::vector<Felt> m(F.modulus().begin(), F.modulus().end());
            Field Fp = Field::make(p, 1);
            CHECK(oracle::irreducible(Fp, Poly(m)));
        }
    }

    TEST_CASE("explicit modulus") {
        Field a = Field::make(3, 2, std::vector<std::uint32_t>{2, 1, 1});  // x^2 + x + 2
        Field b = Field::make(3, 2);
        CHECK(a.q() == 9);
        CHECK_FALSE(a == b);
        std::mt19937_64 rng(4);
        check_against_digits(a, true, rng);
    }

    TEST_CASE("encode and decode") {
        Field F = Field::make(11, 2);
        for (Felt a = 0; a < F.q(); ++a) {
            auto d = F.decode(a);
            REQUIRE(d.size() == 2);
            REQUIRE(F.encode(d) == a);
        }
    }

    TEST_CASE("errors") {
        auto code = [](auto fn) {
            try {
                fn();
            } catch (const Error& e) {
                return e.code();
            }
            return ErrorCode::Verification;
        };
        CHECK(code([] { Field::make(4, 1); }) == ErrorCode::NotPrime);
        CHECK(code([] { Field::make(1, 1); }) == ErrorCode::NotPrime);
        CHECK(code([] { Field::make(3, 2, std::vector<std::uint32_t>{1, 2, 1}); }) == ErrorCode::ReducibleModulus);
        CHECK(code([] { Field::make(3, 2, std::vector<std::uint32_t>{1, 0, 2}); }) == ErrorCode::ReducibleModulus);
        CHECK(code([] { Field::make(2, 17); }) == ErrorCode::UnsupportedField);
        CHECK(code([] { Field::make(65537, 1); }) == ErrorCode::UnsupportedField);
        CHECK(code([] { Field::make(2, 4000000000u); }) == ErrorCode::UnsupportedField);
        CHECK(code([] { Field::make(5, 1).inv(0); }) == ErrorCode::DivisionByZero);
    }
}
