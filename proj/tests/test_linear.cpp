#include <catch2/catch_amalgamated.hpp>

#include "twl/audit_linear.hpp"
#include "twl/linear.hpp"
#include "twl/words.hpp"

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
const quat_algebra& hq() {
    static quat_algebra q(rat(-1), rat(-1), rat(1), rat(1), rat(0), rat(0));
    return q;
}
using P = tpoly<fq_elem>;
using M = matrix<fq_elem>;
} // namespace

TEST_CASE("generator matrices") {
    const auto& F = f4();
    fq_elem w = F.generator();
    P f = P::term(w, 0) + P::t_power(&F, 1);

    M xm = gen_x<fq_elem>(&F, 2, 1, 2, f);
    REQUIRE(xm.at(1, 2) == f);
    REQUIRE(xm.at(1, 1).is_one());
    REQUIRE(xm.at(2, 1).is_zero());

    // x at an affine root with zero payload is the identity
    REQUIRE(gen_x<fq_elem>(&F, 2, affine_root(2, 1, 1), F.zero()).is_identity());

    // beta negative: payload t^m f stored left-normal as tau^m(f) t^m
    M xa = gen_x<fq_elem>(&F, 2, affine_root(2, 1, 1), w);
    REQUIRE(xa.at(2, 1) == P::term(w.tau(1), 1));

    // w_12(u) = [[0,u],[-u^-1,0]]
    P u = P::term(w, 1);
    M wm = gen_w<fq_elem>(&F, 2, 1, 2, u);
    REQUIRE(wm.at(1, 1).is_zero());
    REQUIRE(wm.at(1, 2) == u);
    REQUIRE(wm.at(2, 1) == -u.inverse());
    REQUIRE(wm.at(2, 2).is_zero());

    // h_12(u) = diag(u, u^-1); h(1) = I at level zero
    M hm = gen_h<fq_elem>(&F, 2, 1, 2, u);
    REQUIRE(hm.at(1, 1) == u);
    REQUIRE(hm.at(2, 2) == u.inverse());
    REQUIRE(hm.at(1, 2).is_zero());
    REQUIRE(gen_h<fq_elem>(&F, 2, 1, 2, P::one(&F)).is_identity());

    // affine h picks up the t-shift: h_{a0}(1) = diag(t^-1, t) at n=2
    M ha = gen_h<fq_elem>(&F, 2, affine_root(2, 1, 1), F.one());
    REQUIRE(ha.at(1, 1) == P::t_power(&F, -1));
    REQUIRE(ha.at(2, 2) == P::t_power(&F, 1));
}

TEST_CASE("monomial parts") {
    const auto& F = f4();
    fq_elem w = F.generator();
    P u = P::term(w, 2);

    M d(&F, 2);
    d.at(1, 1) = P::t_power(&F, 1);
    d.at(2, 2) = P::one(&F);
    auto mp = monomial_parts(d);
    REQUIRE(mp.sigma[1] == 1);
    REQUIRE(mp.sigma[2] == 2);
    REQUIRE(mp.unit(1) == tunit<fq_elem>(F.one(), 1));
    REQUIRE(mp.unit(2) == tunit<fq_elem>(F.one(), 0));
    REQUIRE(mp.is_diagonal());

    // anti-diagonal [[0,u2],[u1,0]]: sigma = (1 2), units (u1, u2)
    M a(&F, 2);
    a.at(1, 2) = u;
    a.at(2, 1) = P::term(w, -1);
    auto ap = monomial_parts(a);
    REQUIRE(ap.sigma[1] == 2);
    REQUIRE(ap.sigma[2] == 1);
    REQUIRE(ap.unit(1) == tunit<fq_elem>(w, -1));
    REQUIRE(ap.unit(2) == tunit<fq_elem>(w, 2));
    REQUIRE(!ap.is_diagonal());
    REQUIRE(ap.to_matrix() == a);

    // w_12(u): sigma = (1 2), units (-u^-1, u)
    auto wp = monomial_parts(gen_w<fq_elem>(&F, 2, 1, 2, u));
    REQUIRE(wp.sigma[1] == 2);
    REQUIRE(wp.unit(1) == tunit<fq_elem>(-u.inverse()));
    REQUIRE(wp.unit(2) == tunit<fq_elem>(u));

    // round trips and group ops
    prng rng(3);
    sampler<fq_field> S{&F, 3};
    for (int it = 0; it < 50; ++it) {
        auto rand_mono = [&](prng& r) {
            int nn = 3;
            monomial_matrix<fq_elem> m = monomial_matrix<fq_elem>::identity(&F, nn);
            for (int k = 0; k < 4; ++k) {
                int i = static_cast<int>(r.range(1, nn)), j = static_cast<int>(r.range(1, nn));
                if (i != j)
                    std::swap(m.sigma[static_cast<std::size_t>(i)],
                              m.sigma[static_cast<std::size_t>(j)]);
            }
            for (int k = 0; k < nn; ++k) m.units[static_cast<std::size_t>(k)] = S.unit(r);
            return m;
        };
        auto m1 = rand_mono(rng), m2 = rand_mono(rng);
        REQUIRE((m1 * m2).to_matrix() == m1.to_matrix() * m2.to_matrix());
        REQUIRE((m1.inverse().to_matrix() * m1.to_matrix()).is_identity());
        REQUIRE(monomial_parts(m1.to_matrix()) == m1);
    }

    REQUIRE_THROWS_AS(monomial_parts(gen_x<fq_elem>(&F, 2, 1, 2, u)), domain_error);
}

TEST_CASE("membership predicates") {
    const auto& F = f4();
    fq_elem w = F.generator();
    P f = P::term(w, 0);

    REQUIRE(in_U(gen_x<fq_elem>(&F, 3, affine_root(1, 2, 0), w)));
    REQUIRE(in_U(gen_x<fq_elem>(&F, 3, affine_root(2, 1, 1), w)));
    REQUIRE(!in_U(gen_w<fq_elem>(&F, 3, 1, 2, P::one(&F))));
    REQUIRE(!in_U(gen_x<fq_elem>(&F, 3, affine_root(2, 1, 0), w)));
    REQUIRE(!in_U(gen_x<fq_elem>(&F, 3, affine_root(1, 2, -1), w)));

    // products of positive-root generators stay in U
    prng rng(11);
    for (int n = 2; n <= 3; ++n) {
        for (int it = 0; it < 100; ++it) {
            M m = M::identity(&F, n);
            for (int k = 0; k < 6; ++k) {
                int i = static_cast<int>(rng.range(1, n)), j = static_cast<int>(rng.range(1, n));
                if (i == j) continue;
                int lvl = static_cast<int>(rng.range(i < j ? 0 : 1, 2));
                m = m * gen_x<fq_elem>(&F, n, affine_root(i, j, lvl), F.random(rng));
            }
            REQUIRE(in_U(m));
            REQUIRE(in_B(m));
        }
    }

    // B allows a degree-zero torus part
    M b = gen_h<fq_elem>(&F, 2, 1, 2, f) * gen_x<fq_elem>(&F, 2, 1, 2, f);
    REQUIRE(in_B(b));
    REQUIRE(!in_U(b));
    REQUIRE(!in_B(gen_h<fq_elem>(&F, 2, affine_root(2, 1, 1), F.one())));
}

TEST_CASE("word matrices multiply") {
    const auto& F = f4();
    prng rng(5);
    sampler<fq_field> S{&F, 2};
    for (int it = 0; it < 40; ++it) {
        group_word<fq_elem> word;
        int len = static_cast<int>(rng.range(1, 5));
        for (int k = 0; k < len; ++k) {
            int i = static_cast<int>(rng.range(1, 3)), j = static_cast<int>(rng.range(1, 3));
            if (i == j) continue;
            switch (rng.below(3)) {
            case 0:
                word.push_back(letter<fq_elem>::make_x(i, j, S.poly(rng), rng.coin() ? 1 : -1));
                break;
            case 1:
                word.push_back(letter<fq_elem>::make_w(i, j, S.unit_poly(rng), rng.coin() ? 1 : -1));
                break;
            default:
                word.push_back(letter<fq_elem>::make_h(i, j, S.unit_poly(rng), rng.coin() ? 1 : -1));
                break;
            }
        }
        M m = word_matrix<fq_elem>(&F, 3, word);
        M prod = M::identity(&F, 3);
        for (const auto& L : word) prod = prod * letter_matrix<fq_elem>(&F, 3, L);
        REQUIRE(m == prod);
        REQUIRE((m * word_matrix<fq_elem>(&F, 3, word_inverse(word))).is_identity());
    }
}

TEST_CASE("R-relation audits (smoke)") {
    const char* fams[] = {"R1", "R2", "R3", "R4", "R5", "R6"};
    for (const char* fam : fams) {
        for (int n = 2; n <= 4; ++n) {
            audit_report rep = audit_R(f4(), fam, n, 25, 1234, 2);
            INFO(rep.to_text());
            REQUIRE(rep.passed());
            rep = audit_R(f9(), fam, n, 25, 99, 2);
            INFO(rep.to_text());
            REQUIRE(rep.passed());
        }
        audit_report rep = audit_R(hq(), fam, 2, 8, 5, 1);
        INFO(rep.to_text());
        REQUIRE(rep.passed());
        rep = audit_R(hq(), fam, 3, 8, 5, 1);
        INFO(rep.to_text());
        REQUIRE(rep.passed());
    }
}

TEST_CASE("audit reports are byte-stable") {
    audit_report a = audit_R(f4(), "R3", 2, 10, 42, 2);
    audit_report b = audit_R(f4(), "R3", 2, 10, 42, 2);
    REQUIRE(a.to_text() == b.to_text());
}
