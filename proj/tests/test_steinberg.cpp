#include <catch2/catch_amalgamated.hpp>

#include "twl/audit_steinberg.hpp"

using namespace twl;

namespace {
const fq_field& f4() {
    static fq_field f(2, 2, 1);
    return f;
}
const fq_field& f9() {
    static fq_field f(3, 2, 1);
    return f;
}
using P = tpoly<fq_elem>;
using U = tunit<fq_elem>;
} // namespace

TEST_CASE("phi is a homomorphism") {
    const auto& F = f4();
    prng rng(1);
    sampler<fq_field> S{&F, 2};
    for (int it = 0; it < 60; ++it) {
        st_word<fq_elem> a, b;
        for (int k = 0; k < 3; ++k) {
            int i = static_cast<int>(rng.range(1, 3)), j = static_cast<int>(rng.range(1, 3));
            if (i == j) continue;
            a.append(st_letter<fq_elem>{i, j, S.poly(rng), rng.coin() ? 1 : -1});
            b.append(st_letter<fq_elem>{i, j, S.poly(rng), rng.coin() ? 1 : -1});
        }
        REQUIRE(st_phi<fq_elem>(&F, 3, a * b) == st_phi<fq_elem>(&F, 3, a) * st_phi<fq_elem>(&F, 3, b));
        REQUIRE((st_phi<fq_elem>(&F, 3, a) * st_phi<fq_elem>(&F, 3, a.inverse())).is_identity());
    }
    // phi(X_12(f)) = x_12(f), phi(empty) = I
    P f = P::term(F.generator(), 1);
    REQUIRE(st_phi<fq_elem>(&F, 2, hat_x<fq_elem>(1, 2, f)) == gen_x<fq_elem>(&F, 2, 1, 2, f));
    REQUIRE(st_phi<fq_elem>(&F, 2, st_word<fq_elem>()).is_identity());
}

TEST_CASE("free reduction cancels only exact inverse pairs") {
    const auto& F = f4();
    P f = P::term(F.generator(), 0), g = P::t_power(&F, 1);
    st_word<fq_elem> w;
    w.append(st_letter<fq_elem>{1, 2, f, 1});
    w.append(st_letter<fq_elem>{1, 2, f, -1});
    REQUIRE(w.empty());
    w.append(st_letter<fq_elem>{1, 2, f, 1});
    w.append(st_letter<fq_elem>{1, 2, g, -1});
    REQUIRE(w.letters().size() == 2); // different payloads do not cancel
}

TEST_CASE("hat builders and their phi images") {
    const auto& F = f4();
    fq_elem om = F.generator();
    P u = P::term(om, 1), v = P::term(om, 0);
    // phi(h^_12(u)) = diag(u, u^-1)
    REQUIRE(st_phi<fq_elem>(&F, 2, hat_h<fq_elem>(1, 2, u)) == gen_h<fq_elem>(&F, 2, 1, 2, u));
    REQUIRE(st_phi<fq_elem>(&F, 3, hat_w<fq_elem>(1, 3, u)) == gen_w<fq_elem>(&F, 3, 1, 3, u));
    // phi(c^(wt, w)) = diag([wt,w], 1) = diag(w, 1) over F4
    matrix<fq_elem> img = st_phi<fq_elem>(&F, 2, hat_c<fq_elem>(u, v));
    REQUIRE(img.at(1, 1) == P::term(om, 0));
    REQUIRE(img.at(2, 2).is_one());
    // c^(1,1) has trivial image
    REQUIRE(st_phi<fq_elem>(&F, 2, hat_c<fq_elem>(P::one(&F), P::one(&F))).is_identity());
}

TEST_CASE("c^(u,v) is a kernel element iff [u,v] = 1") {
    const auto& F = f9();
    prng rng(4);
    sampler<fq_field> S{&F, 3};
    for (int it = 0; it < 150; ++it) {
        U u = S.unit(rng), v = S.unit(rng);
        bool trivial_comm = commutator(u, v).poly().is_one();
        bool in_kernel = st_phi<fq_elem>(&F, 2, hat_c<fq_elem>(u.poly(), v.poly())).is_identity();
        REQUIRE(trivial_comm == in_kernel);
    }
}

TEST_CASE("torus words evaluate compatibly with pi") {
    const auto& F = f9();
    prng rng(6);
    sampler<fq_field> S{&F, 2};
    // n = 2: the H~0 side's pi equals phi of the torus word
    for (int it = 0; it < 60; ++it) {
        torus_word<fq_elem> w;
        for (int k = 0; k < 3; ++k) {
            bool flip = rng.coin();
            w = torus_concat(w, torus_h(flip ? 2 : 1, flip ? 1 : 2, S.unit(rng),
                                        rng.coin() ? 1 : -1));
        }
        auto h0 = torus_eval0<fq_elem>(&F, w);
        REQUIRE(h0.pi().to_matrix() == st_phi<fq_elem>(&F, 2, torus_to_st(w)));
    }
    // n = 3: same through H~
    for (int it = 0; it < 60; ++it) {
        torus_word<fq_elem> w;
        for (int k = 0; k < 3; ++k) {
            int i = static_cast<int>(rng.range(1, 3)), j = static_cast<int>(rng.range(1, 3));
            if (i == j) continue;
            w = torus_concat(w, torus_h(i, j, S.unit(rng), rng.coin() ? 1 : -1));
        }
        auto hn = torus_evaln<fq_elem>(&F, 3, w);
        REQUIRE(hn.pi().to_matrix() == st_phi<fq_elem>(&F, 3, torus_to_st(w)));
    }
}

TEST_CASE("steinberg relation audits (smoke)") {
    const char* fams2[] = {"ST1", "ST2p", "R6h", "T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8"};
    for (const char* fam : fams2) {
        for (const fq_field* F : {&f4(), &f9()}) {
            audit_report rep = audit_steinberg(*F, fam, 2, 20, 31337, 2);
            INFO(rep.to_text());
            REQUIRE(rep.passed());
        }
    }
    const char* fams3[] = {"ST1", "ST2",  "R6h", "T1",  "T3",  "T5",  "T8",  "TT0", "TT1",
                           "TT2", "TT3",  "TT4", "TT5", "TT6", "TT7"};
    for (const char* fam : fams3) {
        for (const fq_field* F : {&f4(), &f9()}) {
            audit_report rep = audit_steinberg(*F, fam, 3, 15, 2718, 2);
            INFO(rep.to_text());
            REQUIRE(rep.passed());
        }
    }
}
