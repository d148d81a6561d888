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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "conjugacy.hpp"
#include "decomp.hpp"
#include "fixtures.hpp"
#include "generate.hpp"
#include "jnf.hpp"
#include "matlin.hpp"
#include "oracles.hpp"

using namespace gfjnf;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool ok = true;
    std::string detail;
};

Field gf(std::uint32_t q) {
    for (std::uint32_t p = 2; p <= q; ++p) {
        std::uint32_t k = 0, r = q;
        while (r % p == 0) r /= p, ++k;
        if (k && r == 1) return Field::make(p, k);
    }
    return Field::make(q, 1);
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

// ---------------------------------------------------------------- 1

Outcome jnf_self_verification() {
    Rng rng(1001);
    const std::uint32_t qs[] = {2, 3, 4, 5, 9, 25};
    int pass = 0;
    for (int t = 0; t < 1000; ++t) {
        Field F = gf(qs[t % 6]);
        const std::size_t n = 1 + rng() % 12;
        const Mat a = (t % 2) ? random_structured_matrix(F, n, rng).matrix : random_matrix(F, n, n, rng);
        const JnfResult r = jordan_normal_form(F, a, rng);
        if (oracle::rank(F, r.basis) != n) continue;
        const Mat inv = mat_inverse(F, r.basis);
        if (oracle::mul(F, r.basis, inv) != Mat::identity(n)) continue;
        if (oracle::mul(F, oracle::mul(F, r.basis, a), inv) != r.jnf) continue;
        if (jordan_form_of(F, r.divisors) != r.jnf) continue;
        ++pass;
    }
    return {pass == 1000, std::to_string(pass) + "/1000 verified"};
}

// ---------------------------------------------------------------- 2

Outcome nilpotent_counterexample() {
    Field F = Field::make(3, 1);
    Rng rng(1002);
    const Mat a = fixture::nilpotent_rank1(), b = fixture::nilpotent_rank2();
    const Poly x({0, 1});
    const std::vector<ElementaryDivisor> da = {{x, 2}, {x, 1}, {x, 1}}, db = {{x, 2}, {x, 2}};
    const bool mu_chi = min_poly_matrix(F, a) == Poly({0, 0, 1}) && min_poly_matrix(F, b) == Poly({0, 0, 1}) &&
                        char_poly(F, a) == Poly({0, 0, 0, 0, 1}) && char_poly(F, b) == Poly({0, 0, 0, 0, 1});
    const bool divs = jordan_normal_form(F, a, rng).divisors == da && jordan_normal_form(F, b, rng).divisors == db;
    const bool verdict = !similar(F, a, b, rng).similar;
    return {mu_chi && divs && verdict, "mu = X^2, chi = X^4 for both; divisors (X,2)(X,1)(X,1) vs (X,2)(X,2); not similar"};
}

// ---------------------------------------------------------------- 3

Outcome similarity_completeness() {
    Rng rng(1003);
    std::size_t pairs = 0, agree = 0;
    for (std::uint32_t p : {2u, 3u}) {
        Field F = Field::make(p, 1);
        const auto all = oracle::all_matrices(F, 2);
        const auto inv = oracle::all_invertible(F, 2);
        for (const Mat& a : all)
            for (const Mat& b : all) {
                ++pairs;
                const Similarity s = similar(F, a, b, rng);
                const bool want = oracle::conjugate_by_some(F, a, b, inv);
                if (s.similar != want) continue;
                if (s.similar && !(s.witness && oracle::mul(F, *s.witness, a) == oracle::mul(F, b, *s.witness) &&
                                   oracle::rank(F, *s.witness) == 2))
                    continue;
                ++agree;
            }
    }
    return {agree == pairs && pairs == 16 * 16 + 81 * 81, std::to_string(agree) + "/" + std::to_string(pairs) + " pairs agree"};
}

// ---------------------------------------------------------------- 4

Outcome cyclic_vector_proportion() {
    Rng rng(1004);
    std::size_t checked = 0, exact = 0;
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        Field F = gf(q);
        std::uint64_t qn = 1;
        for (std::size_t n = 1;; ++n) {
            qn *= q;
            if (qn > 729) break;
            std::vector<Poly> family = {Poly::monomial(1, n), poly_pow(F, Poly({F.neg(1), 1}), n)};
            for (int i = 0; i < 6; ++i) {
                std::vector<Felt> c = poly_random(F, n, rng).coeffs();
                c.resize(n + 1, 0);
                c[n] = 1;
                family.emplace_back(c);
            }
            for (const Poly& f : family) {
                const Mat a = random_conjugate(F, companion_matrix(F, f), rng);
                const std::uint64_t count = oracle::count_cyclic_vectors(F, a);
                // count / q^n == prod (1 - q^-d_i)  <=>  count * prod q^d_i == q^n * prod (q^d_i - 1)
                std::uint64_t lhs = count, rhs = qn;
                for (const auto& [g, m] : poly_factor(F, f, rng).factors) {
                    (void)m;
                    std::uint64_t qd = 1;
                    for (int e = 0; e < g.degree(); ++e) qd *= q;
                    lhs *= qd;
                    rhs *= qd - 1;
                }
                ++checked;
                exact += lhs == rhs;
            }
        }
    }
    return {exact == checked, std::to_string(exact) + "/" + std::to_string(checked) + " cyclic matrices match exactly"};
}

// ---------------------------------------------------------------- 5

Outcome cyclic_matrix_proportion() {
    bool ok = true;
    std::string detail;
    for (std::uint32_t q : {2u, 3u}) {
        Field F = Field::make(q, 1);
        const auto all = oracle::all_matrices(F, 2);
        std::uint64_t cyclic = 0, cyclic_lib = 0;
        Rng rng(1005);
        for (const Mat& a : all) {
            cyclic += oracle::count_cyclic_vectors(F, a) > 0;
            cyclic_lib += min_poly_matrix(F, a).degree() == 2;
        }
        const std::uint64_t total = all.size(), den = (q * q - 1) * (q - 1);
        // cyclic / total > 1 - 1/den
        const bool strict = cyclic * den > total * (den - 1);
        ok = ok && strict && cyclic == cyclic_lib;
        detail += "GF(" + std::to_string(q) + "): " + std::to_string(cyclic) + "/" + std::to_string(total) + " > 1 - 1/" +
                  std::to_string(den) + "; ";
    }
    detail.resize(detail.size() - 2);
    return {ok, detail};
}

// ---------------------------------------------------------------- 6

Outcome partition_uniqueness() {
    Rng rng(1006);
    const std::uint32_t qs[] = {2, 3, 4, 5, 9};
    int pass = 0;
    for (int t = 0; t < 500; ++t) {
        Field F = gf(qs[t % 5]);
        const PlantedForm pf = random_primary_matrix(F, 1 + rng() % 12, rng);
        const Poly& p = pf.divisors.front().factor;
        const std::uint32_t m = pf.divisors.front().power;
        Rng r1(rng()), r2(rng());
        auto lengths = [&](Rng& r) {
            std::vector<std::uint32_t> l;
            for (const auto& c : cyclic_decomposition(F, pf.matrix, p, m, r).components) l.push_back(c.length);
            return l;
        };
        const auto l1 = lengths(r1), l2 = lengths(r2);
        pass += l1 == l2 && l1 == oracle::partition_from_kernels(F, pf.matrix, p);
    }
    return {pass == 500, std::to_string(pass) + "/500 primary matrices"};
}

// ---------------------------------------------------------------- 7

Outcome attempt_budget() {
    const std::size_t b9 = cyclic_attempt_budget(0.99, 9), b2 = cyclic_attempt_budget(0.99, 2);
    return {b9 == 3 && b2 == 7, "q = 9: " + std::to_string(b9) + ", q = 2: " + std::to_string(b2)};
}

// ---------------------------------------------------------------- 8

Outcome sl2_f3_splitting() {
    Field F = Field::make(3, 1);
    Rng rng(1008);
    const Mat u(2, 2, {1, 1, 0, 1});
    const SlSplitting s = sl_splitting(F, u, rng);
    std::vector<Mat> gl = oracle::all_invertible(F, 2), sl;
    for (const auto& x : gl)
        if (oracle::det(F, x) == 1) sl.push_back(x);
    // GL-class of u, then SL-orbits inside it
    std::vector<Mat> cls;
    for (const auto& x : gl) {
        const Mat c = oracle::mul(F, oracle::mul(F, x, u), mat_inverse(F, x));
        if (std::find(cls.begin(), cls.end(), c) == cls.end()) cls.push_back(c);
    }
    std::vector<Mat> reps;
    for (const auto& c : cls) {
        bool found = false;
        for (const auto& r : reps) found = found || oracle::conjugate_by_some(F, r, c, sl);
        if (!found) reps.push_back(c);
    }
    return {s.d == 2 && sl.size() == 24 && reps.size() == 2,
            "d = " + std::to_string(s.d) + ", brute force: " + std::to_string(reps.size()) + " classes over " +
                std::to_string(sl.size()) + " elements"};
}

// ---------------------------------------------------------------- 9

Outcome path_agreement() {
    Rng rng(1009);
    const std::uint32_t qs[] = {2, 3, 4, 5, 9, 25, 121};
    int cyc = 0, irr = 0;
    for (int t = 0; t < 500; ++t) {
        Field F = gf(qs[t % 7]);
        const std::size_t n = 1 + rng() % 16;
        const Mat c = random_cyclic_matrix(F, n, rng);
        const JnfResult g = jnf_general_path(F, c, rng);
        const JnfResult f = jnf_cyclic_fast_path(F, c, poly_factor(F, min_poly_matrix(F, c), rng), rng);
        cyc += f.divisors == g.divisors && f.jnf == g.jnf;

        const Mat i = random_irreducible_mu_matrix(F, n, rng);
        const JnfResult gi = jnf_general_path(F, i, rng);
        const JnfResult fi = jnf_irreducible_fast_path(F, i, rng);
        irr += fi.divisors == gi.divisors && fi.jnf == gi.jnf;
    }
    return {cyc == 500 && irr == 500,
            "cyclic " + std::to_string(cyc) + "/500, irreducible-mu " + std::to_string(irr) + "/500"};
}

// ---------------------------------------------------------------- 10

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t h = v.size() / 2;
    return v.size() % 2 ? v[h] : (v[h - 1] + v[h]) / 2;
}

template <class Fn>
double time_ms(Fn&& fn) {
    const auto t0 = Clock::now();
    fn();
    return seconds_since(t0) * 1e3;
}

Outcome relative_performance() {
    constexpr std::size_t n = 200;
    constexpr int trials = 5;
    bool ok = true;
    std::string detail;
    for (std::uint32_t q : {5u, 121u}) {
        Field F = gf(q);
        Rng rng(1010 + q);
        std::vector<double> cg, cf, ig, iff;
        for (int t = 0; t < trials; ++t) {
            const Mat c = random_cyclic_matrix(F, n, rng);
            const FactoredPoly mu = poly_factor(F, min_poly_matrix(F, c), rng);
            JnfResult g, f;
            cg.push_back(time_ms([&] { g = jnf_general_path(F, c, rng); }));
            cf.push_back(time_ms([&] { f = jnf_cyclic_fast_path(F, c, mu, rng); }));
            ok = ok && g.jnf == f.jnf;

            const Mat i = random_irreducible_mu_matrix(F, n, rng);
            JnfResult gi, fi;
            ig.push_back(time_ms([&] { gi = jnf_general_path(F, i, rng); }));
            iff.push_back(time_ms([&] { fi = jnf_irreducible_fast_path(F, i, rng); }));
            ok = ok && gi.jnf == fi.jnf;
        }
        const double mcg = median(cg), mcf = median(cf), mig = median(ig), mif = median(iff);
        ok = ok && mcf < mcg && mif < mig;
        detail += "GF(" + std::to_string(q) + ") cyclic " + fmt("%.1f vs %.1f ms (%.1fx)", mcf, mcg, mcg / mcf) +
                  ", irreducible " + fmt("%.1f vs %.1f ms (%.1fx)", mif, mig, mig / mif) + "; ";
    }
    detail.resize(detail.size() - 2);
    return {ok, detail};
}

// ---------------------------------------------------------------- 11

Outcome evaluator_equivalence() {
    Rng rng(1011);
    const std::uint32_t qs[] = {2, 3, 4, 5, 9, 25, 121, 65521};
    int pass = 0;
    for (int t = 0; t < 500; ++t) {
        Field F = gf(qs[t % 8]);
        const std::size_t n = 1 + rng() % 10;
        const Mat a = random_matrix(F, n, n, rng);
        const Poly f = poly_random(F, 1 + rng() % n, rng);
        const Row v = random_vector(F, n, rng);
        const Row naive = oracle::vec_mul(F, v, oracle::poly_at(F, f, a));
        const Row horner = eval_poly_vec(F, a, f, v);
        const Row spun = eval_poly_spun(F, f, spin_until(F, a, v, static_cast<std::size_t>(std::max(f.degree(), 0)) + 1));
        pass += naive == horner && horner == spun;
    }
    return {pass == 500, std::to_string(pass) + "/500 triples"};
}

struct Criterion {
    int id;
    const char* name;
    double limit_s;  // wall-clock budget; 0 for none
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "JNF self-verification", 60, jnf_self_verification},
        {2, "nilpotent pair not similar", 1, nilpotent_counterexample},
        {3, "similarity completeness on 2x2", 10, similarity_completeness},
        {4, "cyclic-vector proportion", 30, cyclic_vector_proportion},
        {5, "cyclic-matrix proportion", 1, cyclic_matrix_proportion},
        {6, "partition uniqueness", 60, partition_uniqueness},
        {7, "attempt budget", 1, attempt_budget},
        {8, "SL_2(F_3) splitting", 1, sl2_f3_splitting},
        {9, "path agreement", 120, path_agreement},
        {10, "relative performance", 0, relative_performance},
        {11, "evaluator equivalence", 30, evaluator_equivalence},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double s = seconds_since(t0);
        if (c.limit_s > 0 && s >= c.limit_s) {
            o.ok = false;
            o.detail += fmt("; over time budget %.0f s", c.limit_s);
        }
        failed += !o.ok;
        std::printf("criterion %2d %s  %s: %s [%.2f s]\n", c.id, o.ok ? "PASS" : "FAIL", c.name, o.detail.c_str(), s);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
