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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bench.hpp"
#include "handles.hpp"
#include "json.hpp"

using json = nlohmann::json;

namespace {

// Exit statuses.
constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kVerificationFailed = 2;
constexpr int kFalse = 3;

struct Common {
    std::uint64_t seed = 0;
    std::string path = "auto";
    double epsilon = 0.99;
    bool json = false;
};

std::uint64_t default_seed() {
    const char* env = std::getenv("JNF_SEED");
    if (!env || !*env) return 0;
    try {
        return std::stoull(env);
    } catch (const std::exception&) {
        std::cerr << "warning: ignoring non-numeric JNF_SEED\n";
        return 0;
    }
}

void add_common(CLI::App* app, Common& c, bool with_path) {
    app->add_option("--seed", c.seed, "random seed (default: $JNF_SEED or 0)");
    if (with_path)
        app->add_option("--path", c.path, "auto, general, cyclic or irreducible")
            ->check(CLI::IsMember({"auto", "general", "cyclic", "irreducible"}));
    app->add_option("--epsilon", c.epsilon, "success target of the random cyclic-vector search")
        ->check(CLI::Range(0.0, 0.999999999));
    app->add_flag("--json", c.json, "emit a JSON report");
}

gfjnf_options options(const Common& c) {
    gfjnf_options o = gfjnf_default_options();
    o.seed = c.seed;
    o.epsilon = c.epsilon;
    if (c.path == "general") o.path = GFJNF_PATH_GENERAL;
    if (c.path == "cyclic") o.path = GFJNF_PATH_CYCLIC;
    if (c.path == "irreducible") o.path = GFJNF_PATH_IRREDUCIBLE;
    return o;
}

cli::Matrix load(const std::string& file) {
    std::string text;
    if (file == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(file, std::ios::binary);
        if (!in) throw cli::ApiError(GFJNF_E_PARSE, "cannot read " + file);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    gfjnf_matrix* m = nullptr;
    cli::check(gfjnf_matrix_parse(text.c_str(), &m));
    return cli::Matrix(m);
}

std::string poly_text(const std::vector<std::uint32_t>& c) {
    if (c.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
    return s;
}

void print_rows(std::ostream& os, const std::vector<std::vector<std::uint32_t>>& rows) {
    for (const auto& r : rows) {
        for (std::size_t j = 0; j < r.size(); ++j) os << (j ? " " : "") << r[j];
        os << '\n';
    }
}

json field_json(const gfjnf_matrix* m) {
    gfjnf_field* raw = nullptr;
    cli::check(gfjnf_matrix_field(m, &raw));
    cli::Field f(raw);
    std::vector<std::uint32_t> mod(gfjnf_field_k(f.get()) + 1);
    std::size_t len = 0;
    cli::check(gfjnf_field_modulus(f.get(), mod.data(), mod.size(), &len));
    mod.resize(len);
    return json{{"p", gfjnf_field_p(f.get())}, {"k", gfjnf_field_k(f.get())}, {"modulus", mod}};
}

std::string field_text(const json& f) {
    std::string s = "GF(" + std::to_string(f["p"].get<std::uint32_t>());
    if (f["k"].get<std::uint32_t>() > 1) s += "^" + std::to_string(f["k"].get<std::uint32_t>());
    s += ")";
    if (!f["modulus"].empty()) s += " modulus " + poly_text(f["modulus"].get<std::vector<std::uint32_t>>());
    return s;
}

int cmd_jnf(const std::string& file, const Common& c) {
    cli::Matrix a = load(file);
    const gfjnf_options o = options(c);
    gfjnf_jnf* raw = nullptr;
    const gfjnf_status st = gfjnf_jnf_compute(a.get(), &o, &raw);
    if (st == GFJNF_E_VERIFICATION) {
        std::cerr << "error: " << gfjnf_last_error() << '\n';
        return kVerificationFailed;
    }
    cli::check(st);
    cli::Jnf r(raw);
    int verified = 0;
    cli::check(gfjnf_jnf_verify(r.get(), a.get(), &verified));
    if (!verified) {
        std::cerr << "error: normal form failed re-verification\n";
        return kVerificationFailed;
    }

    json divisors = json::array();
    for (std::size_t i = 0; i < gfjnf_jnf_divisor_count(r.get()); ++i) {
        gfjnf_poly* f = nullptr;
        std::uint32_t power = 0;
        cli::check(gfjnf_jnf_divisor(r.get(), i, &f, &power));
        cli::Poly fp(f);
        divisors.push_back(json{{"factor", cli::coeffs(fp.get())}, {"power", power}});
    }
    gfjnf_matrix *form = nullptr, *basis = nullptr;
    cli::check(gfjnf_jnf_form(r.get(), &form));
    cli::Matrix fm(form);
    cli::check(gfjnf_jnf_basis(r.get(), &basis));
    cli::Matrix bm(basis);

    json report{{"field", field_json(a.get())},
                {"n", gfjnf_matrix_dim(a.get())},
                {"divisors", divisors},
                {"jnf", cli::rows(fm.get())},
                {"basis", cli::rows(bm.get())},
                {"verified", true},
                {"seed", c.seed}};
    if (c.json) {
        std::cout << report.dump() << '\n';
        return kOk;
    }
    std::cout << "field: " << field_text(report["field"]) << '\n';
    std::cout << "n: " << gfjnf_matrix_dim(a.get()) << '\n';
    std::cout << "divisors:\n";
    for (const auto& d : divisors)
        std::cout << "  (" << poly_text(d["factor"].get<std::vector<std::uint32_t>>()) << ")^" << d["power"] << '\n';
    std::cout << "jnf:\n";
    print_rows(std::cout, cli::rows(fm.get()));
    std::cout << "basis:\n";
    print_rows(std::cout, cli::rows(bm.get()));
    std::cout << "verified: true\n";
    return kOk;
}

using Decide = gfjnf_status (*)(const gfjnf_matrix*, const gfjnf_matrix*, const gfjnf_options*, int*, gfjnf_matrix**);

int cmd_pair(const std::string& label, Decide decide, const std::string& fa, const std::string& fb, const Common& c) {
    cli::Matrix a = load(fa), b = load(fb);
    const gfjnf_options o = options(c);
    int verdict = 0;
    gfjnf_matrix* w = nullptr;
    const gfjnf_status st = decide(a.get(), b.get(), &o, &verdict, &w);
    if (st == GFJNF_E_VERIFICATION) {
        std::cerr << "error: " << gfjnf_last_error() << '\n';
        return kVerificationFailed;
    }
    cli::check(st);
    cli::Matrix witness(w);
    if (verdict) {
        int ok = 0;
        cli::check(gfjnf_conjugates_to(witness.get(), a.get(), b.get(), &ok));
        if (!ok) {
            std::cerr << "error: witness failed re-verification\n";
            return kVerificationFailed;
        }
    }
    if (c.json) {
        json report{{label, static_cast<bool>(verdict)},
                    {"witness", verdict ? json(cli::rows(witness.get())) : json(nullptr)},
                    {"seed", c.seed}};
        std::cout << report.dump() << '\n';
    } else {
        std::cout << label << ": " << (verdict ? "true" : "false") << '\n';
        if (verdict) {
            std::cout << "witness:\n";
            print_rows(std::cout, cli::rows(witness.get()));
        }
    }
    return verdict ? kOk : kFalse;
}

int cmd_poly(const std::string& file, bool characteristic, const Common& c) {
    cli::Matrix a = load(file);
    gfjnf_poly* raw = nullptr;
    cli::check(characteristic ? gfjnf_char_poly(a.get(), &raw) : gfjnf_min_poly(a.get(), &raw));
    cli::Poly p(raw);
    const char* label = characteristic ? "charpoly" : "minpoly";
    json factors = json::array();
    if (!characteristic) {
        gfjnf_factored* fr = nullptr;
        cli::check(gfjnf_min_poly_factor(a.get(), c.seed, &fr));
        cli::Factored fac(fr);
        for (std::size_t i = 0; i < gfjnf_factored_count(fac.get()); ++i) {
            gfjnf_poly* f = nullptr;
            std::uint32_t power = 0;
            cli::check(gfjnf_factored_get(fac.get(), i, &f, &power));
            cli::Poly fp(f);
            factors.push_back(json{{"factor", cli::coeffs(fp.get())}, {"power", power}});
        }
    }
    if (c.json) {
        json report{{"field", field_json(a.get())}, {"n", gfjnf_matrix_dim(a.get())}, {label, cli::coeffs(p.get())}};
        if (!characteristic) report["factors"] = factors;
        std::cout << report.dump() << '\n';
        return kOk;
    }
    std::cout << label << ": " << poly_text(cli::coeffs(p.get())) << '\n';
    for (const auto& f : factors)
        std::cout << "  (" << poly_text(f["factor"].get<std::vector<std::uint32_t>>()) << ")^" << f["power"] << '\n';
    return kOk;
}

int cmd_split(const std::string& file, const Common& c) {
    cli::Matrix a = load(file);
    const gfjnf_options o = options(c);
    gfjnf_sl_split* raw = nullptr;
    cli::check(gfjnf_sl_splitting(a.get(), &o, &raw));
    cli::SlSplit s(raw);
    json reps = json::array();
    for (std::size_t i = 0; i < gfjnf_sl_split_count(s.get()); ++i) {
        gfjnf_matrix* m = nullptr;
        cli::check(gfjnf_sl_split_representative(s.get(), i, &m));
        cli::Matrix mm(m);
        reps.push_back(cli::rows(mm.get()));
    }
    if (c.json) {
        std::cout << json{{"classes", gfjnf_sl_split_count(s.get())},
                          {"omega", gfjnf_sl_split_omega(s.get())},
                          {"representatives", reps},
                          {"seed", c.seed}}
                         .dump()
                  << '\n';
        return kOk;
    }
    std::cout << "classes: " << gfjnf_sl_split_count(s.get()) << '\n';
    std::cout << "omega: " << gfjnf_sl_split_omega(s.get()) << '\n';
    for (std::size_t i = 0; i < reps.size(); ++i) {
        std::cout << "representative " << i << ":\n";
        print_rows(std::cout, reps[i].get<std::vector<std::vector<std::uint32_t>>>());
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized Jordan normal forms over finite fields"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    Common common;
    common.seed = default_seed();
    std::string file_a, file_b;
    bool characteristic = false;

    auto* jnf = app.add_subcommand("jnf", "normal form, elementary divisors and conjugating basis");
    jnf->add_option("file", file_a, "matrix file ('-' for stdin)")->required();
    add_common(jnf, common, true);

    auto* sim = app.add_subcommand("similar", "decide similarity in GL_n; exit 0 when similar, 3 when not");
    sim->add_option("a", file_a)->required();
    sim->add_option("b", file_b)->required();
    add_common(sim, common, true);

    auto* slc = app.add_subcommand("sl-conjugate", "decide conjugacy in SL_n; exit 0 when conjugate, 3 when not");
    slc->add_option("a", file_a)->required();
    slc->add_option("b", file_b)->required();
    add_common(slc, common, false);

    auto* split = app.add_subcommand("sl-split", "SL_n classes inside the GL_n class of a determinant-1 matrix");
    split->add_option("file", file_a)->required();
    add_common(split, common, false);

    auto* minpoly = app.add_subcommand("minpoly", "minimal polynomial and its factorization");
    minpoly->add_option("file", file_a)->required();
    minpoly->add_flag("--char", characteristic, "print the characteristic polynomial instead");
    add_common(minpoly, common, false);

    bench::Config bc;
    bc.seed = common.seed;
    auto* bn = app.add_subcommand("bench", "time the general path against the fast paths");
    bench::add_options(bn, bc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kError;
    }

    try {
        if (*jnf) return cmd_jnf(file_a, common);
        if (*sim) return cmd_pair("similar", gfjnf_similar, file_a, file_b, common);
        if (*slc) return cmd_pair("sl-conjugate", gfjnf_sl_conjugate, file_a, file_b, common);
        if (*split) return cmd_split(file_a, common);
        if (*minpoly) return cmd_poly(file_a, characteristic, common);
        if (*bn) return bench::run(bc);
    } catch (const cli::ApiError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.status() == GFJNF_E_VERIFICATION ? kVerificationFailed : kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}
