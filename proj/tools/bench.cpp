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

#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "handles.hpp"

namespace bench {

namespace {

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q) {
    std::uint32_t p = 2;
    while (p <= q && q % p != 0) ++p;
    std::uint32_t k = 0, r = q;
    while (r % p == 0) {
        r /= p;
        ++k;
    }
    if (q < 2 || r != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return {p, k};
}

std::string field_label(std::uint32_t p, std::uint32_t k) {
    return "GF(" + std::to_string(p) + (k > 1 ? "^" + std::to_string(k) : "") + ")";
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

template <class Fn>
double time_ms(Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

bool same_result(const gfjnf_jnf* x, const gfjnf_jnf* y) {
    const std::size_t n = gfjnf_jnf_divisor_count(x);
    if (n != gfjnf_jnf_divisor_count(y)) return false;
    for (std::size_t i = 0; i < n; ++i) {
        gfjnf_poly *fx = nullptr, *fy = nullptr;
        std::uint32_t px = 0, py = 0;
        cli::check(gfjnf_jnf_divisor(x, i, &fx, &px));
        cli::Poly hx(fx);
        cli::check(gfjnf_jnf_divisor(y, i, &fy, &py));
        cli::Poly hy(fy);
        if (px != py || cli::coeffs(hx.get()) != cli::coeffs(hy.get())) return false;
    }
    gfjnf_matrix *mx = nullptr, *my = nullptr;
    cli::check(gfjnf_jnf_form(x, &mx));
    cli::Matrix hx(mx);
    cli::check(gfjnf_jnf_form(y, &my));
    cli::Matrix hy(my);
    int eq = 0;
    cli::check(gfjnf_matrix_equal(hx.get(), hy.get(), &eq));
    return eq != 0;
}

bool verified(const gfjnf_jnf* r, const gfjnf_matrix* a) {
    int ok = 0;
    cli::check(gfjnf_jnf_verify(r, a, &ok));
    return ok != 0;
}

}  // namespace

void add_options(CLI::App* app, Config& c) {
    app->add_option("--sizes", c.sizes, "matrix sizes")->delimiter(',');
    app->add_option("--fields", c.fields, "field orders q")->delimiter(',');
    app->add_option("--cases", c.cases, "cyclic and/or irreducible")
        ->delimiter(',')
        ->check(CLI::IsMember({"cyclic", "irreducible"}));
    app->add_option("--trials", c.trials, "trials per (field, n, case)")->check(CLI::PositiveNumber);
    app->add_option("--seed", c.seed, "random seed (default: $JNF_SEED or 0)");
    app->add_option("--csv", c.csv, "write the table to this file instead of stdout");
}

int run(const Config& c) {
    std::ofstream file;
    if (!c.csv.empty()) {
        file.open(c.csv);
        if (!file) throw std::runtime_error("cannot write " + c.csv);
    }
    std::ostream& out = c.csv.empty() ? std::cout : file;
    out << "field,n,case,path,median_ms,verified\n";
    bool all_ok = true;

    for (std::uint32_t q : c.fields) {
        auto [p, k] = prime_power(q);
        gfjnf_field* fraw = nullptr;
        cli::check(gfjnf_field_create(p, k, nullptr, &fraw));
        cli::Field field(fraw);
        const std::string label = field_label(p, k);
        for (std::size_t n : c.sizes) {
            for (const auto& kase : c.cases) {
                const bool cyclic = kase == "cyclic";
                std::vector<double> general_ms, fast_ms;
                bool ok = true;
                for (std::size_t t = 0; t < c.trials; ++t) {
                    const std::uint64_t seed = mix(c.seed ^ mix(q * 1000003ull + n * 131ull + (cyclic ? 1 : 2) + t * 7919ull));
                    gfjnf_matrix* araw = nullptr;
                    cli::check(gfjnf_matrix_random(field.get(), n, cyclic ? GFJNF_RANDOM_CYCLIC : GFJNF_RANDOM_IRREDUCIBLE_MU,
                                                   seed, &araw));
                    cli::Matrix a(araw);
                    gfjnf_options o = gfjnf_default_options();
                    o.seed = seed;

                    gfjnf_jnf *g = nullptr, *f = nullptr;
                    o.path = GFJNF_PATH_GENERAL;
                    general_ms.push_back(time_ms([&] { cli::check(gfjnf_jnf_compute(a.get(), &o, &g)); }));
                    cli::Jnf gen(g);
                    if (cyclic) {
                        // The fast path takes the factored minimal polynomial as input.
                        gfjnf_factored* mu = nullptr;
                        cli::check(gfjnf_min_poly_factor(a.get(), seed, &mu));
                        cli::Factored hmu(mu);
                        fast_ms.push_back(time_ms([&] { cli::check(gfjnf_jnf_compute_cyclic(a.get(), hmu.get(), &o, &f)); }));
                    } else {
                        o.path = GFJNF_PATH_IRREDUCIBLE;
                        fast_ms.push_back(time_ms([&] { cli::check(gfjnf_jnf_compute(a.get(), &o, &f)); }));
                    }
                    cli::Jnf fast(f);
                    ok = ok && verified(gen.get(), a.get()) && verified(fast.get(), a.get()) &&
                         same_result(gen.get(), fast.get());
                }
                all_ok = all_ok && ok;
                const double mg = median(general_ms), mf = median(fast_ms);
                out << std::fixed << std::setprecision(3);
                out << label << ',' << n << ',' << kase << ",general," << mg << ',' << (ok ? "true" : "false") << '\n';
                out << label << ',' << n << ',' << kase << ',' << kase << ',' << mf << ',' << (ok ? "true" : "false") << '\n';
                out.flush();
                std::cerr << label << " n=" << n << ' ' << kase << ": speedup " << std::setprecision(2)
                          << (mf > 0 ? mg / mf : 0.0) << "x\n";
            }
        }
    }
    return all_ok ? 0 : 2;
}

}  // namespace bench
