#include <catch2/catch_amalgamated.hpp>

#include "twl/audit_extension.hpp"

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
using U = tunit<fq_elem>;
using H0 = htilde0<fq_elem>;
using HN = htilden<fq_elem>;
using N0 = ntilde0<fq_elem>;
using NN = ntilden<fq_elem>;
using P = tpoly<fq_elem>;
} // namespace

TEST_CASE("N~0 group structure and psi") {
    const auto& F = f9();
    prng rng(81);
    sampler<fq_field> S{&F, 2};
    for (int it = 0; it < 80; ++it) {
        N0 a = ext_audit_detail::random_nt<fq_elem, N0>(&F, 2, rng, S);
        N0 b = ext_audit_detail::random_nt<fq_elem, N0>(&F, 2, rng, S);
        REQUIRE((a * b).psi() == a.psi() * b.psi());
        REQUIRE(cert_equal(a * a.inverse(), N0::one(&F)));
        REQUIRE(cert_equal(a.inverse() * a, N0::one(&F)));
        // psi_word reproduces psi
        REQUIRE(word_matrix<fq_elem>(&F, 2, a.psi_word()) == a.psi().to_matrix());
    }
    // psi(w~(u)) = w_12(u); w~(u) w~(-u) = 1; h~(u) = w~(u) w~(-1)
    for (int it = 0; it < 40; ++it) {
        U u = S.unit(rng);
        N0 wt = N0::wt(u);
        REQUIRE(wt.psi().to_matrix() == gen_w<fq_elem>(&F, 2, 1, 2, u.poly()));
        REQUIRE(cert_equal(wt * N0::wt(-u), N0::one(&F)));
        N0 h = wt * N0::wt(U(-F.one(), 0));
        REQUIRE(cert_equal(h, N0::from_h(H0::torus(u))));
    }
}

TEST_CASE("Lemma 2.10: h w1 h^-1 = h~(u1 u2^-1) w1") {
    const auto& F = f9();
    prng rng(82);
    sampler<fq_field> S{&F, 2};
    for (int it = 0; it < 60; ++it) {
        H0 h = ext_audit_detail::random_h0<fq_elem>(&F, rng, S);
        auto pi = h.pi();
        U u1 = pi.unit(1), u2 = pi.unit(2);
        N0 lhs = N0::from_h(h) * N0::w1(&F) * N0::from_h(h).inverse();
        N0 rhs = N0::from_h(H0::torus(u1 * u2.inverse())) * N0::w1(&F);
        REQUIRE(cert_equal(lhs, rhs));
    }
    // (L4): w1 xi w1^-1 = h~(phi0(xi)^-1) xi for non-kernel xi too
    for (int it = 0; it < 60; ++it) {
        symbol_word<fq_elem> xi(presentation::P);
        xi.append(S.unit(rng), S.unit(rng), rng.coin() ? 1 : -1);
        N0 lhs = N0::w1(&F) * N0::from_h(H0::central(&F, xi)) * N0::w1(&F).inverse();
        U s = symbol_image(&F, xi);
        N0 rhs = N0::from_h(H0::torus(s.inverse()) * H0::central(&F, xi));
        REQUIRE(cert_equal(lhs, rhs));
    }
}

TEST_CASE("N presentation identities hold as matrices") {
    const auto& F = f9();
    prng rng(83);
    sampler<fq_field> S{&F, 3};
    // (N1)-(N3) at n = 2
    for (int it = 0; it < 60; ++it) {
        P u = S.unit_poly(rng), v = S.unit_poly(rng);
        auto W = [&](const P& p) { return gen_w<fq_elem>(&F, 2, 1, 2, p); };
        auto H = [&](const P& p) { return gen_h<fq_elem>(&F, 2, 1, 2, p); };
        REQUIRE((W(u) * W(-u)).is_identity());
        REQUIRE(W(P::one(&F)) * H(u) * W(-P::one(&F)) == H(u.inverse()));
        REQUIRE(H(u) * H(v) == H(u * v * u) * H(u.inverse()));
    }
    // (N2) general form at n = 3: w_a(1) h_b(u) w_a(1)^-1 = h_b(u) h_a(u^-<a,b>)
    for (int it = 0; it < 60; ++it) {
        P u = S.unit_poly(rng);
        int a = static_cast<int>(rng.range(1, 2));
        int b = static_cast<int>(rng.range(1, 2));
        auto Wa = gen_w<fq_elem>(&F, 3, a, a + 1, P::one(&F));
        auto Wi = gen_w<fq_elem>(&F, 3, a, a + 1, -P::one(&F));
        auto Hb = gen_h<fq_elem>(&F, 3, b, b + 1, u);
        int pair = pairing(finite_root(a, a + 1), finite_root(b, b + 1));
        P upow = P::one(&F);
        for (int k = 0; k < (pair < 0 ? -pair : pair); ++k) upow = upow * u;
        if (pair > 0) upow = upow.inverse();
        auto Ha = gen_h<fq_elem>(&F, 3, a, a + 1, upow);
        REQUIRE(Wa * Hb * Wi == Hb * Ha);
    }
    // (N5)/(N6): braid and commutation for w_alpha(1)
    auto W1 = gen_w<fq_elem>(&F, 3, 1, 2, P::one(&F));
    auto W2 = gen_w<fq_elem>(&F, 3, 2, 3, P::one(&F));
    REQUIRE(W1 * W2 * W1 == W2 * W1 * W2);
    auto V1 = gen_w<fq_elem>(&F, 4, 1, 2, P::one(&F));
    auto V3 = gen_w<fq_elem>(&F, 4, 3, 4, P::one(&F));
    REQUIRE(V1 * V3 == V3 * V1);
}

TEST_CASE("N~ (n=3) group structure and Lemma 3.10") {
    const auto& F = f9();
    prng rng(84);
    sampler<fq_field> S{&F, 2};
    for (int it = 0; it < 50; ++it) {
        NN a = ext_audit_detail::random_nt<fq_elem, NN>(&F, 3, rng, S);
        NN b = ext_audit_detail::random_nt<fq_elem, NN>(&F, 3, rng, S);
        REQUIRE((a * b).psi() == a.psi() * b.psi());
        REQUIRE(cert_equal(a * a.inverse(), NN::one(&F, 3)));
        REQUIRE(word_matrix<fq_elem>(&F, 3, a.psi_word()) == a.psi().to_matrix());
    }
    // w~_a(u) has psi = w_a(u)
    for (int it = 0; it < 40; ++it) {
        int a = static_cast<int>(rng.range(1, 2));
        U u = S.unit(rng);
        NN wa = ntilden_walpha_u<fq_elem>(&F, 3, a, u);
        REQUIRE(wa.psi().to_matrix() == gen_w<fq_elem>(&F, 3, a, a + 1, u.poly()));
        REQUIRE(cert_equal(wa * ntilden_walpha_u<fq_elem>(&F, 3, a, -u), NN::one(&F, 3)));
    }
    // Lemma 3.10: w~ h~_ij(v) w~^-1 = h~_{s(ij)}(u_i v u_j^-1) h~_{s(ij)}(u_i u_j^-1)^-1
    for (int it = 0; it < 50; ++it) {
        NN wt = ext_audit_detail::random_nt<fq_elem, NN>(&F, 3, rng, S);
        auto psi = wt.psi();
        int i = static_cast<int>(rng.range(1, 3)), j = static_cast<int>(rng.range(1, 3));
        if (i == j) continue;
        U v = S.unit(rng);
        U ui = psi.unit(i), uj = psi.unit(j);
        int si = psi.sigma[static_cast<std::size_t>(i)],
            sj = psi.sigma[static_cast<std::size_t>(j)];
        NN lhs = wt * NN::from_h(HN::torus(&F, 3, i, j, v)) * wt.inverse();
        NN rhs = NN::from_h(HN::torus(&F, 3, si, sj, ui * v * uj.inverse()) *
                            HN::torus(&F, 3, si, sj, ui * uj.inverse()).inverse());
        REQUIRE(cert_equal(lhs, rhs));
        if (j == i + 1) {
            NN lhs2 = wt * ntilden_walpha_u<fq_elem>(&F, 3, i, U(F.one(), 0)) * wt.inverse();
            NN rhs2 = NN::from_h(HN::torus(&F, 3, si, sj, ui * uj.inverse()));
            NN wlift = lift_monomialn<fq_elem>(
                &F, 3, monomial_parts(gen_w<fq_elem>(&F, 3, si, sj, P::one(&F))));
            rhs2 = rhs2 * wlift;
            REQUIRE(lhs2.psi() == rhs2.psi());
        }
    }
}

TEST_CASE("nu-machinery lifts have the pinned psi images") {
    const auto& F = f9();
    // n = 2
    REQUIRE(nu_wt0<fq_elem>(&F, affine_root(1, 2, 0)).psi().to_matrix() ==
            gen_w<fq_elem>(&F, 2, affine_root(1, 2, 0), F.one()));
    REQUIRE(nu_wt0<fq_elem>(&F, affine_root(2, 1, 1)).psi().to_matrix() ==
            gen_w<fq_elem>(&F, 2, affine_root(2, 1, 1), F.one()));
    // psi(h~_a(f)) = h_a(f) h_a(1)^-1
    prng rng(85);
    sampler<fq_field> S{&F, 2};
    for (int it = 0; it < 40; ++it) {
        fq_elem f = S.nonzero(rng);
        for (affine_root a : {affine_root(1, 2, 0), affine_root(2, 1, 1)}) {
            auto lhs = nu_ht0<fq_elem>(&F, a, f).pi().to_matrix();
            auto rhs = gen_h<fq_elem>(&F, 2, a, f) *
                       monomial_parts(gen_h<fq_elem>(&F, 2, a, F.one())).inverse().to_matrix();
            REQUIRE(lhs == rhs);
        }
    }
    // n = 3
    auto s3 = simple_roots(3);
    for (const auto& a : s3) {
        REQUIRE(nu_wtn<fq_elem>(&F, 3, a).psi().to_matrix() ==
                gen_w<fq_elem>(&F, 3, a, F.one()));
    }
    for (int it = 0; it < 30; ++it) {
        fq_elem f = S.nonzero(rng);
        for (const auto& a : s3) {
            auto lhs = nu_htn<fq_elem>(&F, 3, a, f).pi().to_matrix();
            auto rhs = gen_h<fq_elem>(&F, 3, a, f) *
                       monomial_parts(gen_h<fq_elem>(&F, 3, a, F.one())).inverse().to_matrix();
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("xpair actions preserve compatibility") {
    const auto& F = f9();
    prng rng(86);
    sampler<fq_field> S{&F, 2};
    for (int it = 0; it < 40; ++it) {
        auto p = ext_audit_detail::random_xpair<fq_elem, N0>(&F, 2, rng, S);
        auto g = ext_audit_detail::random_gen<fq_elem, N0>(&F, 2, rng, S);
        apply_left<fq_elem, N0>(p, g); // check() is built in
        auto gs = ext_audit_detail::random_gen<fq_elem, N0>(&F, 2, rng, S);
        apply_right<fq_elem, N0>(p, gs);
        REQUIRE(p.compatible());
    }
    for (int it = 0; it < 25; ++it) {
        auto p = ext_audit_detail::random_xpair<fq_elem, NN>(&F, 3, rng, S);
        auto g = ext_audit_detail::random_gen<fq_elem, NN>(&F, 3, rng, S);
        apply_left<fq_elem, NN>(p, g);
        auto gs = ext_audit_detail::random_gen<fq_elem, NN>(&F, 3, rng, S);
        apply_right<fq_elem, NN>(p, gs);
        REQUIRE(p.compatible());
    }
}

TEST_CASE("extension audits (smoke)") {
    for (const fq_field* F : {&f4(), &f9()}) {
        for (int n = 2; n <= 3; ++n) {
            for (const char* fam : {"commute", "transitive", "central"}) {
                audit_report rep = audit_extension(*F, fam, n, 10, 4242, 2);
                INFO(rep.to_text());
                REQUIRE(rep.passed());
            }
        }
        audit_report rep = audit_extension(*F, "case3", 2, 40, 99, 2);
        INFO(rep.to_text());
        REQUIRE(rep.passed());
    }
}
