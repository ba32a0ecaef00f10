#include <catch2/catch_amalgamated.hpp>

#include "twl/symbols.hpp"

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
const fq_field& f7() {
    static fq_field f(7, 1, 0);
    return f;
}
const fq_field& f9() {
    static fq_field f(3, 2, 1);
    return f;
}
const fq_field& f9c() {
    static fq_field f(3, 2, 0); // commutative specialization, tau = id
    return f;
}
const quat_algebra& hq() {
    static quat_algebra q(rat(-1), rat(-1), rat(1), rat(1), rat(0), rat(0));
    return q;
}
using U4 = tunit<fq_elem>;
using S4 = symbol_word<fq_elem>;
} // namespace

TEST_CASE("symbol_image examples") {
    const auto& F = f4();
    fq_elem w = F.generator();
    // c(wt, w) -> [wt, w] = w over F4
    S4 c1 = symbol<fq_elem>(presentation::P, U4(w, 1), U4(w, 0));
    REQUIRE(symbol_image(&F, c1) == U4(w, 0));
    // c(u,u) -> 1
    U4 u(w, 2);
    REQUIRE(symbol_image(&F, symbol<fq_elem>(presentation::P, u, u)) == U4(F.one(), 0));
    // commuting arguments: c(u,v)c(v,u) -> 1
    const auto& C = f5();
    tunit<fq_elem> t(C.one(), 1), two(C.from_int(2), 0);
    auto word = symbol<fq_elem>(presentation::P, t, two) * symbol<fq_elem>(presentation::P, two, t);
    REQUIRE(is_kernel_witness(&C, word));
    // image lands in degree zero for random instances
    prng rng(12);
    sampler<fq_field> S{&f9(), 3};
    for (int it = 0; it < 100; ++it) {
        auto a = S.unit(rng), b = S.unit(rng);
        REQUIRE(symbol_image(&f9(), symbol<fq_elem>(presentation::P, a, b)).degree() == 0);
    }
}

TEST_CASE("kernel witnesses") {
    const auto& F = f4();
    fq_elem w = F.generator();
    REQUIRE(is_kernel_witness(&F, S4(presentation::P)));
    REQUIRE(!is_kernel_witness(&F, symbol<fq_elem>(presentation::P, U4(w, 1), U4(w, 0))));
    // c(u,v) c(v,u) is always a witness
    prng rng(77);
    sampler<fq_field> S{&F, 3};
    for (int it = 0; it < 50; ++it) {
        auto u = S.unit(rng), v = S.unit(rng);
        auto word =
            symbol<fq_elem>(presentation::P, u, v) * symbol<fq_elem>(presentation::P, v, u);
        REQUIRE(is_kernel_witness(&F, word));
    }
}

TEST_CASE("tame symbol values") {
    const auto& C = f5();
    tunit<fq_elem> t(C.one(), 1), two(C.from_int(2), 0), three(C.from_int(3), 0);
    REQUIRE(tame_symbol(t, two) == C.from_int(3)); // 2^-1 = 3 in F5
    REQUIRE(tame_symbol(two, three) == C.one());
    REQUIRE(tame_symbol(t, t) == C.from_int(4)); // (-1)^{1*1} = -1 = 4
    REQUIRE_THROWS_AS(tame_symbol(tunit<fq_elem>(f9().one(), 1), tunit<fq_elem>(f9().one(), 0)),
                      domain_error);
}

TEST_CASE("tame symbol is bimultiplicative and Steinberg") {
    // bimultiplicativity on random units
    for (const fq_field* F : {&f5(), &f7(), &f9c()}) {
        prng rng(5);
        sampler<fq_field> S{F, 4};
        for (int it = 0; it < 200; ++it) {
            auto u1 = S.unit(rng), u2 = S.unit(rng), v = S.unit(rng);
            REQUIRE(tame_symbol(u1 * u2, v) == tame_symbol(u1, v) * tame_symbol(u2, v));
            REQUIRE(tame_symbol(u1, u2 * v) == tame_symbol(u1, u2) * tame_symbol(u1, v));
        }
    }
    // Steinberg property, exhaustive over F_q for q <= 25
    for (auto [p, k] : {std::pair<int, int>{5, 1}, {7, 1}, {11, 1}, {13, 1}, {3, 2}, {5, 2}}) {
        fq_field F(static_cast<std::uint64_t>(p), static_cast<unsigned>(k), 0);
        std::vector<fq_elem> elems;
        std::uint64_t q = 1;
        for (int i = 0; i < k; ++i) q *= static_cast<std::uint64_t>(p);
        for (std::uint64_t v = 1; v < q; ++v) {
            std::vector<std::uint64_t> c(static_cast<std::size_t>(k));
            std::uint64_t t = v;
            for (int i = 0; i < k; ++i) {
                c[static_cast<std::size_t>(i)] = t % static_cast<std::uint64_t>(p);
                t /= static_cast<std::uint64_t>(p);
            }
            elems.emplace_back(&F, c);
        }
        for (const auto& u : elems) {
            if (u.is_one()) continue;
            fq_elem one_minus = F.one() - u;
            REQUIRE(tame_symbol(tunit<fq_elem>(u, 0), tunit<fq_elem>(one_minus, 0)) == F.one());
        }
    }
}

TEST_CASE("nontrivial K2 witness over F5") {
    const auto& C = f5();
    tunit<fq_elem> t(C.one(), 1), two(C.from_int(2), 0);
    auto w = symbol<fq_elem>(presentation::P, t, two);
    REQUIRE(is_kernel_witness(&C, w));           // [t,2] = 1
    REQUIRE(tame_value(&C, w) == C.from_int(3)); // 2^-1 = 3 != 1
    REQUIRE(tame_value(&C, w) != C.one());
}

TEST_CASE("zeta translation is phi-compatible") {
    const auto& F = f4();
    fq_elem w = F.generator();
    prng rng(3);
    sampler<fq_field> S{&F, 2};
    for (int it = 0; it < 30; ++it) {
        auto u = S.unit(rng), v = S.unit(rng);
        auto sw = symbol<fq_elem>(presentation::P, u, v);
        matrix<fq_elem> img = st_phi<fq_elem>(&F, 2, zeta(sw));
        // phi(c^(u,v)) = diag([u,v], 1)
        matrix<fq_elem> expect(&F, 2);
        expect.at(1, 1) = commutator(u, v).poly();
        expect.at(2, 2) = tpoly<fq_elem>::one(&F);
        REQUIRE(img == expect);
    }
    // c^(wt, w) over F4 -> diag(w, 1)
    auto sw = symbol<fq_elem>(presentation::P, U4(w, 1), U4(w, 0));
    matrix<fq_elem> img = st_phi<fq_elem>(&F, 2, zeta(sw));
    REQUIRE(img.at(1, 1) == tpoly<fq_elem>::term(w, 0));
    REQUIRE(img.at(2, 2).is_one());
}

TEST_CASE("centrality check") {
    const auto& C = f5();
    tunit<fq_elem> t(C.one(), 1), two(C.from_int(2), 0), three(C.from_int(3), 0);
    REQUIRE(centrality_check(&C, S4(presentation::P),
                             symbol<fq_elem>(presentation::P, t, three)));
    auto xi = symbol<fq_elem>(presentation::P, t, two) * symbol<fq_elem>(presentation::P, two, t);
    REQUIRE(centrality_check(&C, xi, symbol<fq_elem>(presentation::P, t, three)));
    // a non-witness must be rejected: [gt, g] != 1 over F9 with Frobenius
    const auto& F = f9();
    fq_elem g9 = F.generator();
    auto bad = symbol<fq_elem>(presentation::P, tunit<fq_elem>(g9, 1), tunit<fq_elem>(g9, 0));
    REQUIRE(!is_kernel_witness(&F, bad));
    REQUIRE_THROWS_AS(
        centrality_check(&F, bad, symbol<fq_elem>(presentation::P, tunit<fq_elem>(g9, 0),
                                                  tunit<fq_elem>(g9, 1))),
        domain_error);
    // random kernel witness vs random probe over F9
    prng rng(9);
    sampler<fq_field> S{&F, 2};
    for (int it = 0; it < 50; ++it) {
        auto u = S.unit(rng), v = S.unit(rng), a = S.unit(rng), b = S.unit(rng);
        auto xi2 =
            symbol<fq_elem>(presentation::P, u, v) * symbol<fq_elem>(presentation::P, v, u);
        REQUIRE(centrality_check(&F, xi2, symbol<fq_elem>(presentation::P, a, b)));
    }
}

TEST_CASE("symbol relation audits (smoke)") {
    const char* fams[] = {"P1", "P2", "P3", "P4", "P5", "P5p", "Q1", "Q2", "Q3", "Q4", "PQst"};
    for (const char* fam : fams) {
        for (const fq_field* F : {&f9(), &f5(), &f7(), &f9c()}) {
            audit_report rep = audit_symbols(*F, fam, 40, 2024, 2);
            INFO(rep.to_text());
            REQUIRE(rep.passed());
        }
        audit_report rep = audit_symbols(hq(), fam, 10, 2024, 1);
        INFO(rep.to_text());
        REQUIRE(rep.passed());
    }
}
