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

#include <cstring>
#include <new>
#include <string>

#include "conjugacy.hpp"
#include "error.hpp"
#include "generate.hpp"
#include "gfjnf/gfjnf.h"
#include "jnf.hpp"
#include "matlin.hpp"
#include "matrix_file.hpp"

using namespace gfjnf;

struct gfjnf_field {
    Field f;
};
struct gfjnf_matrix {
    Field f;
    Mat m;
};
struct gfjnf_poly {
    Poly p;
};
struct gfjnf_factored {
    Field f;
    FactoredPoly fp;
};
struct gfjnf_jnf {
    Field f;
    JnfResult r;
};
struct gfjnf_sl_split {
    Field f;
    SlSplitting s;
};

namespace {

thread_local std::string last_error;

gfjnf_status map_code(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidArgument: return GFJNF_E_INVALID_ARGUMENT;
        case ErrorCode::NotPrime: return GFJNF_E_NOT_PRIME;
        case ErrorCode::ReducibleModulus: return GFJNF_E_REDUCIBLE_MODULUS;
        case ErrorCode::UnsupportedField: return GFJNF_E_UNSUPPORTED_FIELD;
        case ErrorCode::DivisionByZero: return GFJNF_E_DIVISION_BY_ZERO;
        case ErrorCode::ShapeMismatch: return GFJNF_E_SHAPE;
        case ErrorCode::FieldMismatch: return GFJNF_E_FIELD_MISMATCH;
        case ErrorCode::Singular: return GFJNF_E_SINGULAR;
        case ErrorCode::Precondition: return GFJNF_E_PRECONDITION;
        case ErrorCode::NoDependence: return GFJNF_E_NO_DEPENDENCE;
        case ErrorCode::Parse: return GFJNF_E_PARSE;
        case ErrorCode::Verification: return GFJNF_E_VERIFICATION;
    }
    return GFJNF_E_INTERNAL;
}

template <class Fn>
gfjnf_status guard(Fn&& fn) {
    try {
        last_error.clear();
        fn();
        return GFJNF_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return map_code(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return GFJNF_E_OUT_OF_MEMORY;
    } catch (const std::exception& e) {
        last_error = e.what();
        return GFJNF_E_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return GFJNF_E_INTERNAL;
    }
}

void need(const void* p, const char* what) {
    if (!p) fail(ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

void same_field(const gfjnf_matrix* a, const gfjnf_matrix* b) {
    if (!(a->f == b->f)) fail(ErrorCode::FieldMismatch, "matrices live over different fields");
}

gfjnf_options opts_or_default(const gfjnf_options* o) { return o ? *o : gfjnf_default_options(); }

JnfPath to_path(gfjnf_path p) {
    switch (p) {
        case GFJNF_PATH_AUTO: return JnfPath::Auto;
        case GFJNF_PATH_GENERAL: return JnfPath::General;
        case GFJNF_PATH_CYCLIC: return JnfPath::Cyclic;
        case GFJNF_PATH_IRREDUCIBLE: return JnfPath::Irreducible;
    }
    fail(ErrorCode::InvalidArgument, "unknown path");
}

gfjnf_matrix* wrap(const Field& f, Mat m) { return new gfjnf_matrix{f, std::move(m)}; }

}  // namespace

extern "C" {

gfjnf_options gfjnf_default_options(void) { return gfjnf_options{0, GFJNF_PATH_AUTO, 0.99}; }

const char* gfjnf_status_string(gfjnf_status s) {
    switch (s) {
        case GFJNF_OK: return "ok";
        case GFJNF_E_INVALID_ARGUMENT: return "invalid argument";
        case GFJNF_E_NOT_PRIME: return "characteristic is not prime";
        case GFJNF_E_REDUCIBLE_MODULUS: return "modulus is not irreducible";
        case GFJNF_E_UNSUPPORTED_FIELD: return "unsupported field";
        case GFJNF_E_PARSE: return "parse error";
        case GFJNF_E_SHAPE: return "shape mismatch";
        case GFJNF_E_FIELD_MISMATCH: return "field mismatch";
        case GFJNF_E_PRECONDITION: return "precondition violated";
        case GFJNF_E_DIVISION_BY_ZERO: return "division by zero";
        case GFJNF_E_SINGULAR: return "singular matrix";
        case GFJNF_E_NO_DEPENDENCE: return "no dependence";
        case GFJNF_E_VERIFICATION: return "verification failed";
        case GFJNF_E_OUT_OF_MEMORY: return "out of memory";
        case GFJNF_E_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* gfjnf_last_error(void) { return last_error.c_str(); }

void gfjnf_string_free(char* s) { delete[] s; }

// ---------------------------------------------------------------- fields

gfjnf_status gfjnf_field_create(uint32_t p, uint32_t k, const uint32_t* modulus, gfjnf_field** out) {
    return guard([&] {
        need(out, "out");
        std::optional<std::vector<std::uint32_t>> m;
        if (modulus && k > 1) m.emplace(modulus, modulus + k + 1);
        *out = new gfjnf_field{Field::make(p, k, std::move(m))};
    });
}

void gfjnf_field_destroy(gfjnf_field* f) { delete f; }
uint32_t gfjnf_field_p(const gfjnf_field* f) { return f ? f->f.p() : 0; }
uint32_t gfjnf_field_k(const gfjnf_field* f) { return f ? f->f.k() : 0; }
uint32_t gfjnf_field_q(const gfjnf_field* f) { return f ? f->f.q() : 0; }
uint32_t gfjnf_field_primitive(const gfjnf_field* f) { return f ? f->f.primitive() : 0; }

gfjnf_status gfjnf_field_modulus(const gfjnf_field* f, uint32_t* out, size_t cap, size_t* len) {
    return guard([&] {
        need(f, "field");
        need(len, "len");
        const auto& m = f->f.modulus();
        if (cap < m.size() || (!out && !m.empty())) fail(ErrorCode::InvalidArgument, "buffer too small");
        std::copy(m.begin(), m.end(), out);
        *len = m.size();
    });
}

namespace {
void check_elements(const Field& F, std::initializer_list<uint32_t> xs) {
    for (auto x : xs)
        if (x >= F.q()) fail(ErrorCode::InvalidArgument, "element out of range");
}
}  // namespace

gfjnf_status gfjnf_field_mul(const gfjnf_field* f, uint32_t a, uint32_t b, uint32_t* out) {
    return guard([&] {
        need(f, "field");
        need(out, "out");
        check_elements(f->f, {a, b});
        *out = f->f.mul(a, b);
    });
}

gfjnf_status gfjnf_field_add(const gfjnf_field* f, uint32_t a, uint32_t b, uint32_t* out) {
    return guard([&] {
        need(f, "field");
        need(out, "out");
        check_elements(f->f, {a, b});
        *out = f->f.add(a, b);
    });
}

gfjnf_status gfjnf_field_inv(const gfjnf_field* f, uint32_t a, uint32_t* out) {
    return guard([&] {
        need(f, "field");
        need(out, "out");
        check_elements(f->f, {a});
        *out = f->f.inv(a);
    });
}

// ---------------------------------------------------------------- matrices

gfjnf_status gfjnf_matrix_create(const gfjnf_field* f, size_t n, const uint32_t* entries, gfjnf_matrix** out) {
    return guard([&] {
        need(f, "field");
        need(out, "out");
        Mat m(n, n);
        if (entries) {
            for (size_t i = 0; i < n * n; ++i)
                if (entries[i] >= f->f.q()) fail(ErrorCode::InvalidArgument, "entry out of range");
            m = Mat(n, n, std::vector<Felt>(entries, entries + n * n));
        }
        *out = wrap(f->f, std::move(m));
    });
}

gfjnf_status gfjnf_matrix_identity(const gfjnf_field* f, size_t n, gfjnf_matrix** out) {
    return guard([&] {
        need(f, "field");
        need(out, "out");
        *out = wrap(f->f, Mat::identity(n));
    });
}

gfjnf_status gfjnf_matrix_random(const gfjnf_field* f, size_t n, gfjnf_random_kind kind, uint64_t seed,
                                 gfjnf_matrix** out) {
    return guard([&] {
        need(f, "field");
        need(out, "out");
        Rng rng(seed);
        Mat m;
        switch (kind) {
            case GFJNF_RANDOM_UNIFORM: m = random_matrix(f->f, n, n, rng); break;
            case GFJNF_RANDOM_CYCLIC: m = random_cyclic_matrix(f->f, n, rng); break;
            case GFJNF_RANDOM_IRREDUCIBLE_MU: m = random_irreducible_mu_matrix(f->f, n, rng); break;
            default: fail(ErrorCode::InvalidArgument, "unknown random kind");
        }
        *out = wrap(f->f, std::move(m));
    });
}

gfjnf_status gfjnf_matrix_parse(const char* text, gfjnf_matrix** out) {
    return guard([&] {
        need(text, "text");
        need(out, "out");
        MatrixFile mf = parse_matrix_file(text);
        *out = wrap(mf.field, std::move(mf.matrix));
    });
}

gfjnf_status gfjnf_matrix_serialize(const gfjnf_matrix* m, char** out) {
    return guard([&] {
        need(m, "matrix");
        need(out, "out");
        std::string s = serialize_matrix_file(m->f, m->m);
        char* buf = new char[s.size() + 1];
        std::memcpy(buf, s.c_str(), s.size() + 1);
        *out = buf;
    });
}

void gfjnf_matrix_destroy(gfjnf_matrix* m) { delete m; }

gfjnf_status gfjnf_matrix_field(const gfjnf_matrix* m, gfjnf_field** out) {
    return guard([&] {
        need(m, "matrix");
        need(out, "out");
        *out = new gfjnf_field{m->f};
    });
}

size_t gfjnf_matrix_dim(const gfjnf_matrix* m) { return m ? m->m.rows() : 0; }

uint32_t gfjnf_matrix_get(const gfjnf_matrix* m, size_t i, size_t j) {
    if (!m || i >= m->m.rows() || j >= m->m.cols()) return 0;
    return m->m(i, j);
}

gfjnf_status gfjnf_matrix_entries(const gfjnf_matrix* m, uint32_t* out, size_t cap) {
    return guard([&] {
        need(m, "matrix");
        const auto& d = m->m.data();
        if (cap < d.size() || (!out && !d.empty())) fail(ErrorCode::InvalidArgument, "buffer too small");
        std::copy(d.begin(), d.end(), out);
    });
}

gfjnf_status gfjnf_matrix_mul(const gfjnf_matrix* a, const gfjnf_matrix* b, gfjnf_matrix** out) {
    return guard([&] {
        need(a, "a");
        need(b, "b");
        need(out, "out");
        same_field(a, b);
        *out = wrap(a->f, mat_mul(a->f, a->m, b->m));
    });
}

gfjnf_status gfjnf_matrix_inverse(const gfjnf_matrix* a, gfjnf_matrix** out) {
    return guard([&] {
        need(a, "a");
        need(out, "out");
        *out = wrap(a->f, mat_inverse(a->f, a->m));
    });
}

gfjnf_status gfjnf_matrix_determinant(const gfjnf_matrix* a, uint32_t* out) {
    return guard([&] {
        need(a, "a");
        need(out, "out");
        *out = determinant(a->f, a->m);
    });
}

gfjnf_status gfjnf_matrix_equal(const gfjnf_matrix* a, const gfjnf_matrix* b, int* out) {
    return guard([&] {
        need(a, "a");
        need(b, "b");
        need(out, "out");
        *out = a->f == b->f && a->m == b->m;
    });
}

gfjnf_status gfjnf_conjugates_to(const gfjnf_matrix* x, const gfjnf_matrix* a, const gfjnf_matrix* b, int* out) {
    return guard([&] {
        need(x, "x");
        need(a, "a");
        need(b, "b");
        need(out, "out");
        same_field(x, a);
        same_field(a, b);
        *out = conjugates_to(a->f, x->m, a->m, b->m);
    });
}

// ---------------------------------------------------------------- polynomials

gfjnf_status gfjnf_min_poly(const gfjnf_matrix* a, gfjnf_poly** out) {
    return guard([&] {
        need(a, "a");
        need(out, "out");
        *out = new gfjnf_poly{min_poly_matrix(a->f, a->m)};
    });
}

gfjnf_status gfjnf_char_poly(const gfjnf_matrix* a, gfjnf_poly** out) {
    return guard([&] {
        need(a, "a");
        need(out, "out");
        *out = new gfjnf_poly{char_poly(a->f, a->m)};
    });
}

void gfjnf_poly_destroy(gfjnf_poly* p) { delete p; }
int gfjnf_poly_degree(const gfjnf_poly* p) { return p ? p->p.degree() : -1; }
uint32_t gfjnf_poly_coeff(const gfjnf_poly* p, size_t i) { return p ? p->p[i] : 0; }

gfjnf_status gfjnf_min_poly_factor(const gfjnf_matrix* a, uint64_t seed, gfjnf_factored** out) {
    return guard([&] {
        need(a, "a");
        need(out, "out");
        Rng rng(seed);
        *out = new gfjnf_factored{a->f, poly_factor(a->f, min_poly_matrix(a->f, a->m), rng)};
    });
}

void gfjnf_factored_destroy(gfjnf_factored* f) { delete f; }
size_t gfjnf_factored_count(const gfjnf_factored* f) { return f ? f->fp.factors.size() : 0; }

gfjnf_status gfjnf_factored_get(const gfjnf_factored* f, size_t i, gfjnf_poly** factor, uint32_t* power) {
    return guard([&] {
        need(f, "factored");
        need(factor, "factor");
        need(power, "power");
        if (i >= f->fp.factors.size()) fail(ErrorCode::InvalidArgument, "factor index out of range");
        *factor = new gfjnf_poly{f->fp.factors[i].first};
        *power = f->fp.factors[i].second;
    });
}

// ---------------------------------------------------------------- jnf

gfjnf_status gfjnf_jnf_compute(const gfjnf_matrix* a, const gfjnf_options* opts, gfjnf_jnf** out) {
    return guard([&] {
        need(a, "a");
        need(out, "out");
        const gfjnf_options o = opts_or_default(opts);
        Rng rng(o.seed);
        *out = new gfjnf_jnf{a->f, jordan_normal_form(a->f, a->m, rng, to_path(o.path), o.epsilon)};
    });
}

gfjnf_status gfjnf_jnf_compute_cyclic(const gfjnf_matrix* a, const gfjnf_factored* mu, const gfjnf_options* opts,
                                      gfjnf_jnf** out) {
    return guard([&] {
        need(a, "a");
        need(mu, "mu");
        need(out, "out");
        if (!(a->f == mu->f)) fail(ErrorCode::FieldMismatch, "factorization belongs to another field");
        const gfjnf_options o = opts_or_default(opts);
        Rng rng(o.seed);
        *out = new gfjnf_jnf{a->f, jnf_cyclic_fast_path(a->f, a->m, mu->fp, rng, o.epsilon)};
    });
}

void gfjnf_jnf_destroy(gfjnf_jnf* r) { delete r; }
size_t gfjnf_jnf_divisor_count(const gfjnf_jnf* r) { return r ? r->r.divisors.size() : 0; }

gfjnf_status gfjnf_jnf_divisor(const gfjnf_jnf* r, size_t i, gfjnf_poly** factor, uint32_t* power) {
    return guard([&] {
        need(r, "result");
        need(factor, "factor");
        need(power, "power");
        if (i >= r->r.divisors.size()) fail(ErrorCode::InvalidArgument, "divisor index out of range");
        *factor = new gfjnf_poly{r->r.divisors[i].factor};
        *power = r->r.divisors[i].power;
    });
}

gfjnf_status gfjnf_jnf_form(const gfjnf_jnf* r, gfjnf_matrix** out) {
    return guard([&] {
        need(r, "result");
        need(out, "out");
        *out = wrap(r->f, r->r.jnf);
    });
}

gfjnf_status gfjnf_jnf_basis(const gfjnf_jnf* r, gfjnf_matrix** out) {
    return guard([&] {
        need(r, "result");
        need(out, "out");
        *out = wrap(r->f, r->r.basis);
    });
}

gfjnf_status gfjnf_jnf_verify(const gfjnf_jnf* r, const gfjnf_matrix* a, int* out) {
    return guard([&] {
        need(r, "result");
        need(a, "a");
        need(out, "out");
        if (!(r->f == a->f)) fail(ErrorCode::FieldMismatch, "result belongs to another field");
        *out = conjugates_to(a->f, r->r.basis, a->m, r->r.jnf) && jordan_form_of(a->f, r->r.divisors) == r->r.jnf;
    });
}

// ---------------------------------------------------------------- similarity

gfjnf_status gfjnf_similar(const gfjnf_matrix* a, const gfjnf_matrix* b, const gfjnf_options* opts, int* verdict,
                           gfjnf_matrix** witness) {
    return guard([&] {
        need(a, "a");
        need(b, "b");
        need(verdict, "verdict");
        same_field(a, b);
        const gfjnf_options o = opts_or_default(opts);
        Rng rng(o.seed);
        Similarity s = similar(a->f, a->m, b->m, rng, to_path(o.path), o.epsilon);
        if (witness) *witness = s.witness ? wrap(a->f, std::move(*s.witness)) : nullptr;
        *verdict = s.similar;
    });
}

gfjnf_status gfjnf_sl_conjugate(const gfjnf_matrix* a, const gfjnf_matrix* b, const gfjnf_options* opts, int* verdict,
                                gfjnf_matrix** witness) {
    return guard([&] {
        need(a, "a");
        need(b, "b");
        need(verdict, "verdict");
        same_field(a, b);
        const gfjnf_options o = opts_or_default(opts);
        Rng rng(o.seed);
        SlConjugacy s = sl_conjugate(a->f, a->m, b->m, rng, o.epsilon);
        if (witness) *witness = s.witness ? wrap(a->f, std::move(*s.witness)) : nullptr;
        *verdict = s.conjugate;
    });
}

gfjnf_status gfjnf_sl_splitting(const gfjnf_matrix* a, const gfjnf_options* opts, gfjnf_sl_split** out) {
    return guard([&] {
        need(a, "a");
        need(out, "out");
        const gfjnf_options o = opts_or_default(opts);
        Rng rng(o.seed);
        *out = new gfjnf_sl_split{a->f, sl_splitting(a->f, a->m, rng, o.epsilon)};
    });
}

void gfjnf_sl_split_destroy(gfjnf_sl_split* s) { delete s; }
uint32_t gfjnf_sl_split_count(const gfjnf_sl_split* s) { return s ? s->s.d : 0; }
uint32_t gfjnf_sl_split_omega(const gfjnf_sl_split* s) { return s ? s->s.omega : 0; }

gfjnf_status gfjnf_sl_split_representative(const gfjnf_sl_split* s, size_t i, gfjnf_matrix** out) {
    return guard([&] {
        need(s, "split");
        need(out, "out");
        if (i >= s->s.representatives.size()) fail(ErrorCode::InvalidArgument, "representative index out of range");
        *out = wrap(s->f, s->s.representatives[i]);
    });
}

}  // extern "C"
