#include <catch2/catch_amalgamated.hpp>

#include "twl/audit_bruhat.hpp"

using namespace twl;

namespace {
const fq_field& f4() {
    static fq_field f(2, 2, 1);
    return f;
}
const fq_field& f5() {
    static fq_field f(5, 1, 0);
    return f;
}
const fq_field& f9() {
    static fq_field f(3, 2, 1);
    return f;
}
using P = tpoly<fq_elem>;
using M = matrix<fq_elem>;
using L = letter<fq_elem>;
} // namespace

TEST_CASE("conj_by_monomial closed forms") {
    const auto& F = f4();
    fq_elem w = F.generator();

    // identity monomial: root and coefficient unchanged
    auto id = monomial_matrix<fq_elem>::identity(&F, 2);
    auto cr = conj_by_monomial<fq_elem>(id, affine_root(1, 2, 0), w, +1);
    REQUIRE(cr.root == affine_root(1, 2, 0));
    REQUIRE(cr.coeff == w);

    // diag(t,1) x_12(f) diag(t,1)^-1 = x_{(beta,1)}(tau(f))
    monomial_matrix<fq_elem> dt = monomial_matrix<fq_elem>::identity(&F, 2);
    dt.units[0] = tunit<fq_elem>(F.one(), 1);
    cr = conj_by_monomial<fq_elem>(dt, affine_root(1, 2, 0), w, +1);
    REQUIRE(cr.root == affine_root(1, 2, 1));
    REQUIRE(cr.coeff == w.tau(1));

    // plain 3-cycle permutation: indices move, level unchanged
    monomial_matrix<fq_elem> p3 = monomial_matrix<fq_elem>::identity(&F, 3);
    p3.sigma = {0, 2, 3, 1}; // 1->2, 2->3, 3->1
    cr = conj_by_monomial<fq_elem>(p3, affine_root(1, 2, 2), w, +1);
    REQUIRE(cr.root == affine_root(2, 3, 2));
    REQUIRE(cr.coeff == w);

    // postcondition: gen_x(result) equals the conjugated matrix, both signs
    prng rng(40);
    sampler<fq_field> S{&F, 2};
    for (int n = 2; n <= 3; ++n) {
        for (int it = 0; it < 200; ++it) {
            monomial_matrix<fq_elem> m = monomial_matrix<fq_elem>::identity(&F, n);
            for (int k = 1; k <= n; ++k) {
                int a = static_cast<int>(rng.range(1, n)), b = static_cast<int>(rng.range(1, n));
                std::swap(m.sigma[static_cast<std::size_t>(a)],
                          m.sigma[static_cast<std::size_t>(b)]);
                m.units[static_cast<std::size_t>(k - 1)] = S.unit(rng);
            }
            int i = static_cast<int>(rng.range(1, n)), j = static_cast<int>(rng.range(1, n));
            if (i == j) continue;
            affine_root r(i, j, static_cast<int>(rng.range(-2, 2)));
            fq_elem f = F.random(rng);
            int sign = rng.coin() ? 1 : -1;
            auto res = conj_by_monomial<fq_elem>(m, r, f, sign);
            M W = m.to_matrix(), Wi = m.inverse().to_matrix();
            M lhs = sign > 0 ? W * gen_x<fq_elem>(&F, n, r, f) * Wi
                             : Wi * gen_x<fq_elem>(&F, n, r, f) * W;
            REQUIRE(lhs == gen_x<fq_elem>(&F, n, res.root, res.coeff));
        }
    }
}

TEST_CASE("factorize worked examples") {
    const auto& F = f5();
    fq_elem g = F.from_int(2);

    // x_12(f): already in U
    {
        auto fac = factorize<fq_elem>(&F, 2, {L::make_x(1, 2, P::term(g, 0))});
        REQUIRE(fac.w == monomial_matrix<fq_elem>::identity(&F, 2));
        REQUIRE(fac.u_mat.is_identity());
        REQUIRE(fac.v_mat == gen_x<fq_elem>(&F, 2, 1, 2, P::term(g, 0)));
        REQUIRE(fac.invariant_holds());
    }
    // x_21(g) = x_12(g^-1) w_12(-g^-1) x_12(g^-1)
    {
        auto fac = factorize<fq_elem>(&F, 2, {L::make_x(2, 1, P::term(g, 0))});
        fq_elem gi = g.inverse();
        REQUIRE(fac.u_mat == gen_x<fq_elem>(&F, 2, 1, 2, P::term(gi, 0)));
        REQUIRE(fac.v_mat == gen_x<fq_elem>(&F, 2, 1, 2, P::term(gi, 0)));
        REQUIRE(fac.w.to_matrix() == gen_w<fq_elem>(&F, 2, 1, 2, P::term(-gi, 0)));
        REQUIRE(fac.total() == gen_x<fq_elem>(&F, 2, 2, 1, P::term(g, 0)));
        REQUIRE(fac.invariant_holds());
    }
    // a monomial letter stays in the w-part
    {
        auto fac = factorize<fq_elem>(&F, 2, {L::make_w(1, 2, P::term(g, 1))});
        REQUIRE(fac.u_mat.is_identity());
        REQUIRE(fac.v_mat.is_identity());
        REQUIRE(fac.w.to_matrix() == gen_w<fq_elem>(&F, 2, 1, 2, P::term(g, 1)));
    }
    // rho of a UNU word reads off the monomial part
    {
        group_word<fq_elem> word{L::make_x(1, 2, P::term(g, 0)),
                                 L::make_w(1, 2, P::one(&F)),
                                 L::make_x(1, 2, P::term(g + g, 0))};
        REQUIRE(rho<fq_elem>(&F, 2, word).to_matrix() == gen_w<fq_elem>(&F, 2, 1, 2, P::one(&F)));
    }
    // rho(x_21(1) w_12(-1)) = w_12(-1): the matrix [[0,-1],[1,-1]]
    {
        group_word<fq_elem> word{L::make_x(2, 1, P::one(&F)),
                                 L::make_w(1, 2, -P::one(&F))};
        REQUIRE(rho<fq_elem>(&F, 2, word).to_matrix() ==
                gen_w<fq_elem>(&F, 2, 1, 2, -P::one(&F)));
    }
}

TEST_CASE("local coordinates") {
    const auto& F = f5();
    fq_elem g = F.from_int(3);
    // v = x_12(g): coordinate at alpha_1 is g
    auto fac = factorize<fq_elem>(&F, 2, {L::make_x(1, 2, P::term(g, 0))});
    REQUIRE(local_coordinate<fq_elem>(fac, affine_root(1, 2, 0), coset_side::right) == g);
    // v = x_12(g t): no t^0 part
    fac = factorize<fq_elem>(&F, 2, {L::make_x(1, 2, P::term(g, 1))});
    REQUIRE(local_coordinate<fq_elem>(fac, affine_root(1, 2, 0), coset_side::right).is_zero());
    // v = xa[2,1,1](g): the a0-coordinate is g
    fac = factorize<fq_elem>(&F, 2, {L::make_x(affine_root(2, 1, 1), g)});
    REQUIRE(local_coordinate<fq_elem>(fac, affine_root(2, 1, 1), coset_side::right) == g);
    // left coordinate carries the display sign: u = x_a(-f) reports f
    fac = factorize<fq_elem>(&F, 2, {L::make_x(1, 2, P::term(-g, 0)),
                                     L::make_w(1, 2, P::one(&F))});
    REQUIRE(local_coordinate<fq_elem>(fac, affine_root(1, 2, 0), coset_side::left) == g);
}

TEST_CASE("rho_step worked example") {
    const auto& F = f5();
    // e = x_21(1); right step at alpha_1: g = 1 != 0 and w(b) negative,
    // so the torus branch fires and the new w-part is w_12(-1)
    auto fac = factorize<fq_elem>(&F, 2, {L::make_x(2, 1, P::one(&F))});
    auto res = rho_step<fq_elem>(fac, affine_root(1, 2, 0), coset_side::right);
    REQUIRE(res.torus_branch);
    REQUIRE(res.coeff == F.one());
    REQUIRE(fac.w.to_matrix() == gen_w<fq_elem>(&F, 2, 1, 2, -P::one(&F)));
    // cross-check against a from-scratch factorization of e w_12(-1)
    auto scratch = factorize<fq_elem>(
        &F, 2, {L::make_x(2, 1, P::one(&F)), L::make_w(1, 2, -P::one(&F))});
    REQUIRE(fac.w == scratch.w);
    REQUIRE(fac.total() == scratch.total());
}

TEST_CASE("f=0 branch keeps the monomial product form") {
    const auto& F = f5();
    fq_elem u = F.from_int(2);
    // e = w_12(u): left step at alpha_1 with f = 0 gives w-part w_12(1) w_12(u)
    auto fac = factorize<fq_elem>(&F, 2, {L::make_w(1, 2, P::term(u, 0))});
    auto res = rho_step<fq_elem>(fac, affine_root(1, 2, 0), coset_side::left);
    REQUIRE(!res.torus_branch);
    REQUIRE(res.coeff.is_zero());
    REQUIRE(fac.w.to_matrix() ==
            gen_w<fq_elem>(&F, 2, 1, 2, P::one(&F)) * gen_w<fq_elem>(&F, 2, 1, 2, P::term(u, 0)));
}

TEST_CASE("k-display audits (smoke)") {
    for (const char* fam : {"k1", "k2", "k3", "k4"}) {
        for (const fq_field* F : {&f4(), &f9()}) {
            audit_report rep = audit_bruhat(*F, fam, 2, 30, 11, 2);
            INFO(rep.to_text());
            REQUIRE(rep.passed());
        }
    }
}

TEST_CASE("corpus and sandwich audits (smoke)") {
    for (int n = 2; n <= 3; ++n) {
        for (const fq_field* F : {&f4(), &f9()}) {
            audit_report rep = audit_bruhat(*F, "corpus", n, 25, 7, 2);
            INFO(rep.to_text());
            REQUIRE(rep.passed());
            rep = audit_bruhat(*F, "sandwich", n, 25, 13, 2);
            INFO(rep.to_text());
            REQUIRE(rep.passed());
        }
    }
}

TEST_CASE("factorization invariants on random words") {
    const auto& F = f9();
    prng rng(71);
    for (int n = 2; n <= 3; ++n) {
        for (int it = 0; it < 40; ++it) {
            int len = static_cast<int>(rng.range(1, 8));
            auto word = bruhat_audit_detail::random_word<fq_elem>(&F, rng, n, len, 2);
            auto fac = factorize<fq_elem>(&F, n, word);
            REQUIRE(fac.invariant_holds());
            REQUIRE(fac.total() == word_matrix<fq_elem>(&F, n, word));
            REQUIRE(fac.refactor_count == 0);
        }
    }
}
