#ifndef TWL_AUDIT_STEINBERG_HPP
#define TWL_AUDIT_STEINBERG_HPP

#include <functional>
#include <string>

#include "twl/audit.hpp"
#include "twl/htilde.hpp"
#include "twl/st_word.hpp"

// Audits of the Steinberg relations (ST1), (ST2), (ST2)', (R^6) and of the
// torus relations (T1)-(T8) [n = 2] and (TT0)-(TT7) [n >= 3].  Equality in
// St is never asserted; each instance is compared under every implemented
// quotient certificate:
//   - phi-image: exact matrix equality (always),
//   - for torus words: the H~0 / H~ normal form (torus part exact, symbol
//     part under its own certificates).
//
// One sign in the printed (R^6) fails the phi-oracle: the gamma = +-beta
// second factor must read h^_{-+beta}(-u^{-+2})^-1, not -u^{+-2}.  The audit
// asserts the verified form.

namespace twl {

// torus-word evaluation into H~0 (n = 2).  The (2,1)-letters go through the
// N~0 identity h~_21(u) = w~(-u^-1) w~(1) = h~(-u^-1) h~(1) h~(-1)^-1.
template <class D>
htilde0<D> torus_eval0(const typename D::ring_type* ring, const torus_word<D>& w) {
    htilde0<D> out = htilde0<D>::one(ring);
    tunit<D> one(ring->one(), 0);
    for (const auto& L : w) {
        if (L.i == 1 && L.j == 2) {
            out.mul_torus(L.u, L.exp);
        } else if (L.i == 2 && L.j == 1) {
            htilde0<D> h21 = htilde0<D>::torus(-L.u.inverse()) * htilde0<D>::torus(one) *
                             htilde0<D>::torus(-one).inverse();
            out = out * (L.exp > 0 ? h21 : h21.inverse());
        } else {
            throw domain_error("torus_eval0: indices out of range for n = 2");
        }
    }
    return out;
}

template <class D>
htilden<D> torus_evaln(const typename D::ring_type* ring, int n, const torus_word<D>& w) {
    htilden<D> out = htilden<D>::one(ring, n);
    for (const auto& L : w) out.mul_h(L.i, L.j, L.u, L.exp);
    return out;
}

// both certificates for a pair of torus words
template <class D>
bool torus_words_agree(const typename D::ring_type* ring, int n, const torus_word<D>& a,
                       const torus_word<D>& b) {
    if (st_phi<D>(ring, n, torus_to_st(a)) != st_phi<D>(ring, n, torus_to_st(b))) return false;
    if (n == 2) return cert_equal(torus_eval0<D>(ring, a), torus_eval0<D>(ring, b));
    return cert_equal(torus_evaln<D>(ring, n, a), torus_evaln<D>(ring, n, b));
}

template <class R>
audit_report audit_steinberg(const R& ring, const std::string& family, int n, long samples,
                             std::uint64_t seed, int degree_cap) {
    using D = elem_t<R>;
    using TU = tunit<D>;
    using TW = torus_word<D>;

    if (n < 2) throw domain_error("audit_steinberg: n >= 2 required");
    sampler<R> S{&ring, degree_cap};
    audit_report rep;
    rep.family = family;
    rep.ring_desc = ring.describe();
    rep.n = n;
    rep.seed = seed;
    rep.degree_cap = degree_cap;
    rep.requested_samples = samples;

    auto run = [&](const std::string& branch, int min_n, int max_n,
                   const std::function<bool(prng&, std::string&)>& one) {
        if (n < min_n || (max_n && n > max_n)) return;
        std::uint64_t fam = hash_str((family + "/" + branch).c_str());
        for (long s = 0; s < samples; ++s) {
            prng rng(mix_seed(seed, fam, static_cast<std::uint64_t>(s)));
            std::string inst;
            bool ok = one(rng, inst);
            rep.record(branch, ok, inst);
        }
    };

    auto st_agree = [&](const st_word<D>& a, const st_word<D>& b) {
        return st_phi<D>(&ring, n, a) == st_phi<D>(&ring, n, b);
    };
    auto tw_agree = [&](const TW& a, const TW& b) { return torus_words_agree<D>(&ring, n, a, b); };

    // random index pair, distinct, in 1..n (for n = 2: (1,2) or (2,1))
    auto pair2 = [&](prng& rng) {
        int i = static_cast<int>(rng.range(1, n)), j;
        do {
            j = static_cast<int>(rng.range(1, n));
        } while (j == i);
        return std::pair<int, int>(i, j);
    };
    auto deg0_not_one = [&](prng& rng) {
        for (;;) {
            D s = S.nonzero(rng);
            if (!s.is_one()) return TU(s, 0);
        }
    };

    if (family == "ST1") {
        run("additivity", 2, 0, [&](prng& rng, std::string& inst) {
            auto [i, j] = pair2(rng);
            tpoly<D> f = S.poly(rng), g = S.poly(rng);
            bool ok = st_agree(hat_x<D>(i, j, f) * hat_x<D>(i, j, g), hat_x<D>(i, j, f + g));
            if (!ok) inst = "f=" + f.str() + " g=" + g.str();
            return ok;
        });
    } else if (family == "ST2") {
        run("sum_j=k", 3, 0, [&](prng& rng, std::string& inst) {
            auto idx = detail_pick3(rng, n);
            int i = idx[0], j = idx[1], l = idx[2];
            tpoly<D> f = S.poly(rng), g = S.poly(rng);
            st_word<D> lhs = hat_x<D>(i, j, f) * hat_x<D>(j, l, g) * hat_x<D>(i, j, f).inverse() *
                             hat_x<D>(j, l, g).inverse();
            bool ok = st_agree(lhs, hat_x<D>(i, l, f * g));
            if (!ok) inst = "f=" + f.str() + " g=" + g.str();
            return ok;
        });
        run("sum_i=l", 3, 0, [&](prng& rng, std::string& inst) {
            auto idx = detail_pick3(rng, n);
            int i = idx[0], j = idx[1], k = idx[2];
            tpoly<D> f = S.poly(rng), g = S.poly(rng);
            st_word<D> lhs = hat_x<D>(i, j, f) * hat_x<D>(k, i, g) * hat_x<D>(i, j, f).inverse() *
                             hat_x<D>(k, i, g).inverse();
            bool ok = st_agree(lhs, hat_x<D>(k, j, -(g * f)));
            if (!ok) inst = "f=" + f.str() + " g=" + g.str();
            return ok;
        });
        run("disjoint", 4, 0, [&](prng& rng, std::string& inst) {
            (void)inst;
            int i = 1, j = 2, k = 3, l = 4;
            tpoly<D> f = S.poly(rng), g = S.poly(rng);
            st_word<D> lhs = hat_x<D>(i, j, f) * hat_x<D>(k, l, g) * hat_x<D>(i, j, f).inverse() *
                             hat_x<D>(k, l, g).inverse();
            return st_agree(lhs, st_word<D>());
        });
    } else if (family == "ST2p") {
        run("n2_flip", 2, 2, [&](prng& rng, std::string& inst) {
            auto [i, j] = pair2(rng);
            tpoly<D> u = S.unit_poly(rng), f = S.poly(rng);
            st_word<D> lhs = hat_w<D>(i, j, u) * hat_x<D>(i, j, f) * hat_w<D>(i, j, -u);
            tpoly<D> ui = u.inverse();
            bool ok = st_agree(lhs, hat_x<D>(j, i, -(ui * f * ui)));
            if (!ok) inst = "u=" + u.str() + " f=" + f.str();
            return ok;
        });
    } else if (family == "R6h") {
        auto lhs_of = [&](int i, int j, const tpoly<D>& u, int k, int l, const tpoly<D>& s) {
            return hat_w<D>(i, j, u) * hat_h<D>(k, l, s) * hat_w<D>(i, j, -u);
        };
        run("orthogonal", 4, 0, [&](prng& rng, std::string& inst) {
            (void)inst;
            tpoly<D> u = S.unit_poly(rng), s = S.unit_poly(rng);
            return st_agree(lhs_of(1, 2, u, 3, 4, s), hat_h<D>(3, 4, s));
        });
        run("gamma=beta", 2, 0, [&](prng& rng, std::string& inst) {
            auto [i, j] = pair2(rng);
            tpoly<D> u = S.unit_poly(rng), s = S.unit_poly(rng), ui = u.inverse();
            st_word<D> rhs = hat_h<D>(j, i, -(ui * s * ui)) * hat_h<D>(j, i, -(ui * ui)).inverse();
            bool ok = st_agree(lhs_of(i, j, u, i, j, s), rhs);
            if (!ok) inst = "u=" + u.str() + " s=" + s.str();
            return ok;
        });
        run("gamma=-beta", 2, 0, [&](prng& rng, std::string& inst) {
            auto [i, j] = pair2(rng);
            tpoly<D> u = S.unit_poly(rng), s = S.unit_poly(rng);
            st_word<D> rhs = hat_h<D>(i, j, -(u * s * u)) * hat_h<D>(i, j, -(u * u)).inverse();
            bool ok = st_agree(lhs_of(i, j, u, j, i, s), rhs);
            if (!ok) inst = "u=" + u.str() + " s=" + s.str();
            return ok;
        });
        struct shared {
            const char* name;
            int gi, gj;
        };
        const shared cases[4] = {{"i=k", 0, 2}, {"i=l", 2, 0}, {"j=k", 1, 2}, {"j=l", 2, 1}};
        for (const auto& sc : cases) {
            run(sc.name, 3, 0, [&, sc](prng& rng, std::string& inst) {
                auto idx = detail_pick3(rng, n);
                int i = idx[0], j = idx[1], m = idx[2];
                auto pick = [&](int code) { return code == 0 ? i : code == 1 ? j : m; };
                int k = pick(sc.gi), l = pick(sc.gj);
                auto swp = [&](int v) { return v == i ? j : v == j ? i : v; };
                int sk = swp(k), sl = swp(l);
                tpoly<D> u = S.unit_poly(rng), s = S.unit_poly(rng), ui = u.inverse();
                std::string b = sc.name;
                st_word<D> rhs = [&] {
                    if (b == "i=k")
                        return hat_h<D>(sk, sl, -(ui * s)) * hat_h<D>(sk, sl, -ui).inverse();
                    if (b == "i=l")
                        return hat_h<D>(sk, sl, -(s * u)) * hat_h<D>(sk, sl, -u).inverse();
                    if (b == "j=k") return hat_h<D>(sk, sl, u * s) * hat_h<D>(sk, sl, u).inverse();
                    return hat_h<D>(sk, sl, s * ui) * hat_h<D>(sk, sl, ui).inverse();
                }();
                bool ok = st_agree(lhs_of(i, j, u, k, l, s), rhs);
                if (!ok) inst = b + " u=" + u.str() + " s=" + s.str();
                return ok;
            });
        }
    } else if (family == "T1") {
        run("T1", 2, 0, [&](prng& rng, std::string& inst) {
            auto [i, j] = pair2(rng);
            TU u = S.unit(rng), v = S.unit(rng);
            TW lhs = torus_concat(torus_h(i, j, u), torus_h(i, j, v));
            TW rhs = torus_concat(torus_h(i, j, u * v * u), torus_h(i, j, u.inverse()));
            bool ok = tw_agree(lhs, rhs);
            if (!ok) inst = "u=" + u.str() + " v=" + v.str();
            return ok;
        });
        run("T1p", 2, 0, [&](prng& rng, std::string& inst) {
            auto [i, j] = pair2(rng);
            TU u = S.unit(rng), v = S.unit(rng);
            TW lhs = torus_concat(torus_h(i, j, u), torus_h(i, j, v));
            TW rhs = torus_concat(torus_h(i, j, v.inverse()), torus_h(i, j, v * u * v));
            bool ok = tw_agree(lhs, rhs);
            if (!ok) inst = "u=" + u.str() + " v=" + v.str();
            return ok;
        });
    } else if (family == "T2") {
        run("T2", 2, 0, [&](prng& rng, std::string& inst) {
            auto [i, j] = pair2(rng);
            TU u = S.unit(rng), v = S.unit(rng);
            TW lhs = torus_c(i, j, u, v);
            // v^-1 u^-1 = (uv)^-1
            TW rhs = torus_h(i, j, (u * v).inverse(), -1);
            rhs = torus_concat(rhs, torus_h(i, j, u.inverse()));
            rhs = torus_concat(rhs, torus_h(i, j, v.inverse()));
            bool ok = tw_agree(lhs, rhs);
            if (!ok) inst = "u=" + u.str() + " v=" + v.str();
            return ok;
        });
        run("T2p", 2, 0, [&](prng& rng, std::string& inst) {
            auto [i, j] = pair2(rng);
            TU u = S.unit(rng), v = S.unit(rng);
            // u^-1 v^-1 = (vu)^-1
            TW lhs = torus_h(i, j, (v * u).inverse(), -1);
            lhs = torus_concat(lhs, torus_h(i, j, u.inverse()));
            lhs = torus_concat(lhs, torus_h(i, j, v.inverse()));
            TW rhs = torus_concat(torus_h(i, j, u), torus_h(i, j, v));
            rhs = torus_concat(rhs, torus_h(i, j, u * v, -1));
            bool ok = tw_agree(lhs, rhs);
            if (!ok) inst = "u=" + u.str() + " v=" + v.str();
            return ok;
        });
    } else if (family == "T3") {
        run("first", 2, 0, [&](prng& rng, std::string& inst) {
            auto [i, j] = pair2(rng);
            TU u = S.unit(rng), v = S.unit(rng);
            bool ok = tw_agree(torus_c(i, j, u, v), torus_c(i, j, u * v * u, u.inverse()));
            if (!ok) inst = "u=" + u.str() + " v=" + v.str();
            return ok;
        });
        run("second", 2, 0, [&](prng& rng, std::string& inst) {
            auto [i, j] = pair2(rng);
            TU u = S.unit(rng), v = S.unit(rng);
            bool ok = tw_agree(torus_c(i, j, u, v), torus_c(i, j, v.inverse(), v * u * v));
            if (!ok) inst = "u=" + u.str() + " v=" + v.str();
            return ok;
        });
    } else if (family == "T4") {
        run("cocycle", 2, 0, [&](prng& rng, std::string& inst) {
            auto [i, j] = pair2(rng);
            TU u = S.unit(rng), v = S.unit(rng), w = S.unit(rng);
            TW lhs = torus_concat(torus_c(i, j, u, v), torus_c(i, j, v * u, w));
            TW rhs = torus_concat(torus_c(i, j, u, v * w), torus_c(i, j, v, w));
            bool ok = tw_agree(lhs, rhs);
            if (!ok) inst = "u=" + u.str() + " v=" + v.str() + " w=" + w.str();
            return ok;
        });
        run("conjugated", 2, 0, [&](prng& rng, std::string& inst) {
            auto [i, j] = pair2(rng);
            TU u = S.unit(rng), v = S.unit(rng), w = S.unit(rng);
            TW lhs = torus_concat(torus_c(i, j, u, v), torus_c(i, j, v * u, w));
            TW rhs = torus_h(i, j, u);
            rhs = torus_concat(rhs, torus_c(i, j, v, w));
            rhs = torus_concat(rhs, torus_h(i, j, u, -1));
            rhs = torus_concat(rhs, torus_c(i, j, u, w * v));
            bool ok = tw_agree(lhs, rhs);
            if (!ok) inst = "u=" + u.str() + " v=" + v.str() + " w=" + w.str();
            return ok;
        });
    } else if (family == "T5") {
        run("first", 2, 0, [&](prng& rng, std::string& inst) {
            auto [i, j] = pair2(rng);
            TU x = S.unit(rng), y = S.unit(rng), u = S.unit(rng);
            TU com = commutator(x, y);
            TW lhs = torus_concat(torus_concat(torus_c(i, j, x, y), torus_h(i, j, u)),
                                  torus_c(i, j, x, y, -1));
            TW rhs = torus_concat(torus_h(i, j, com * u), torus_h(i, j, com, -1));
            bool ok = tw_agree(lhs, rhs);
            if (!ok) inst = "x=" + x.str() + " y=" + y.str() + " u=" + u.str();
            return ok;
        });
        run("second", 2, 0, [&](prng& rng, std::string& inst) {
            auto [i, j] = pair2(rng);
            TU x = S.unit(rng), y = S.unit(rng), u = S.unit(rng);
            TU com = commutator(y, x);
            TW lhs = torus_concat(torus_concat(torus_c(i, j, x, y), torus_h(i, j, u)),
                                  torus_c(i, j, x, y, -1));
            TW rhs = torus_concat(torus_h(i, j, com, -1), torus_h(i, j, u * com));
            bool ok = tw_agree(lhs, rhs);
            if (!ok) inst = "x=" + x.str() + " y=" + y.str() + " u=" + u.str();
            return ok;
        });
        run("T5p", 2, 0, [&](prng& rng, std::string& inst) {
            auto [i, j] = pair2(rng);
            TU u = S.unit(rng), v = S.unit(rng);
            int sign = rng.coin() ? 1 : -1;
            TW lhs = torus_concat(torus_concat(torus_h(i, j, u, sign), torus_h(i, j, v)),
                                  torus_h(i, j, u, -sign));
            TU us = sign > 0 ? u : u.inverse();
            TW rhs = torus_concat(torus_h(i, j, us * v * us), torus_h(i, j, us * us, -1));
            bool ok = tw_agree(lhs, rhs);
            if (!ok) inst = "u=" + u.str() + " v=" + v.str();
            return ok;
        });
    } else if (family == "T6") {
        run("first", 2, 0, [&](prng& rng, std::string& inst) {
            auto [i, j] = pair2(rng);
            TU x = S.unit(rng), y = S.unit(rng), u = S.unit(rng), v = S.unit(rng);
            TU com = commutator(x, y);
            TW lhs = torus_concat(torus_concat(torus_c(i, j, x, y), torus_c(i, j, u, v)),
                                  torus_c(i, j, x, y, -1));
            TW rhs = torus_concat(torus_c(i, j, u, com, -1), torus_c(i, j, u, com * v));
            bool ok = tw_agree(lhs, rhs);
            if (!ok) inst = "x=" + x.str() + " y=" + y.str();
            return ok;
        });
        run("second", 2, 0, [&](prng& rng, std::string& inst) {
            auto [i, j] = pair2(rng);
            TU x = S.unit(rng), y = S.unit(rng), u = S.unit(rng), v = S.unit(rng);
            TU com = commutator(x, y);
            TW lhs = torus_concat(torus_concat(torus_c(i, j, x, y), torus_c(i, j, u, v)),
                                  torus_c(i, j, x, y, -1));
            TW rhs = torus_concat(torus_c(i, j, com * u, v), torus_c(i, j, com, v, -1));
            bool ok = tw_agree(lhs, rhs);
            if (!ok) inst = "x=" + x.str() + " y=" + y.str();
            return ok;
        });
    } else if (family == "T7") {
        run("steinberg", 2, 0, [&](prng& rng, std::string& inst) {
            auto [i, j] = pair2(rng);
            TU u = deg0_not_one(rng);
            TU v = S.unit(rng);
            TU one_minus(ring.one() - u.leading(), 0);
            bool ok = tw_agree(torus_c(i, j, u, v), torus_c(i, j, u, v * one_minus));
            if (!ok) inst = "u=" + u.str() + " v=" + v.str();
            return ok;
        });
    } else if (family == "T8") {
        run("negation", 2, 0, [&](prng& rng, std::string& inst) {
            auto [i, j] = pair2(rng);
            TU u = S.unit(rng), v = S.unit(rng);
            bool ok = tw_agree(torus_c(i, j, u, v), torus_c(i, j, u, -(v * u)));
            if (!ok) inst = "u=" + u.str() + " v=" + v.str();
            return ok;
        });
    } else if (family == "TT0") {
        run("index_shift", 3, 0, [&](prng& rng, std::string& inst) {
            auto idx = detail_pick3(rng, n);
            TU u = S.unit(rng), v = S.unit(rng);
            bool ok =
                tw_agree(torus_c(idx[0], idx[1], u, v), torus_c(idx[0], idx[2], u, v));
            if (!ok) inst = "u=" + u.str() + " v=" + v.str();
            return ok;
        });
    } else if (family == "TT1") {
        run("inverse_pair", 3, 0, [&](prng& rng, std::string& inst) {
            auto [i, j] = pair2(rng);
            TU u = S.unit(rng);
            bool ok = tw_agree(torus_concat(torus_h(i, j, u), torus_h(j, i, u)), TW{});
            if (!ok) inst = "u=" + u.str();
            return ok;
        });
    } else if (family == "TT2") {
        run("triple", 3, 0, [&](prng& rng, std::string& inst) {
            auto idx = detail_pick3(rng, n);
            int i = idx[0], j = idx[1], k = idx[2];
            TU u = S.unit(rng);
            TW lhs = torus_concat(torus_concat(torus_h(i, j, u), torus_h(k, i, u)),
                                  torus_h(j, k, u));
            bool ok = tw_agree(lhs, TW{});
            if (!ok) inst = "u=" + u.str();
            return ok;
        });
    } else if (family == "TT3") {
        run("steinberg", 3, 0, [&](prng& rng, std::string& inst) {
            auto [i, j] = pair2(rng);
            TU s = deg0_not_one(rng);
            TU one_minus(ring.one() - s.leading(), 0);
            bool ok = tw_agree(torus_c(i, j, s, one_minus), TW{});
            if (!ok) inst = "s=" + s.str();
            return ok;
        });
    } else if (family == "TT4") {
        run("commutator_form", 3, 0, [&](prng& rng, std::string& inst) {
            auto idx = detail_pick3(rng, n);
            int i = idx[0], j = idx[1], k = idx[2];
            TU u = S.unit(rng), v = S.unit(rng);
            TW rhs = torus_concat(torus_concat(torus_h(i, j, u), torus_h(i, k, v)),
                                  torus_concat(torus_h(i, j, u, -1), torus_h(i, k, v, -1)));
            bool ok = tw_agree(torus_c(i, j, u, v), rhs);
            if (!ok) inst = "u=" + u.str() + " v=" + v.str();
            return ok;
        });
        run("TT4p", 3, 0, [&](prng& rng, std::string& inst) {
            auto [i, j] = pair2(rng);
            TU u = S.unit(rng), v = S.unit(rng);
            bool ok = tw_agree(torus_c(i, j, u, v, -1), torus_c(i, j, v, u));
            if (!ok) inst = "u=" + u.str() + " v=" + v.str();
            return ok;
        });
    } else if (family == "TT5") {
        auto lhs_of = [&](int i, int j, int k, const TU& x, const TU& u, const TU& v) {
            return torus_concat(torus_concat(torus_h(i, j, x), torus_c(i, k, u, v)),
                                torus_h(i, j, x, -1));
        };
        run("first", 3, 0, [&](prng& rng, std::string& inst) {
            auto idx = detail_pick3(rng, n);
            int i = idx[0], j = idx[1], k = idx[2];
            TU x = S.unit(rng), u = S.unit(rng), v = S.unit(rng);
            TW rhs = torus_concat(torus_c(i, k, u, x, -1), torus_c(i, k, u, x * v));
            bool ok = tw_agree(lhs_of(i, j, k, x, u, v), rhs);
            if (!ok) inst = "x=" + x.str();
            return ok;
        });
        run("second", 3, 0, [&](prng& rng, std::string& inst) {
            auto idx = detail_pick3(rng, n);
            int i = idx[0], j = idx[1], k = idx[2];
            TU x = S.unit(rng), u = S.unit(rng), v = S.unit(rng);
            TW rhs = torus_concat(torus_c(i, k, x * u, v), torus_c(i, k, x, v, -1));
            bool ok = tw_agree(lhs_of(i, j, k, x, u, v), rhs);
            if (!ok) inst = "x=" + x.str();
            return ok;
        });
        run("third", 3, 0, [&](prng& rng, std::string& inst) {
            auto idx = detail_pick3(rng, n);
            int i = idx[0], j = idx[1], k = idx[2];
            TU x = S.unit(rng), u = S.unit(rng), v = S.unit(rng);
            TW rhs = torus_c(i, k, conj_unit(x, u), conj_unit(x, v));
            bool ok = tw_agree(lhs_of(i, j, k, x, u, v), rhs);
            if (!ok) inst = "x=" + x.str();
            return ok;
        });
        run("TT5p", 3, 0, [&](prng& rng, std::string& inst) {
            auto [i, j] = pair2(rng);
            TU u = S.unit(rng), v = S.unit(rng), w = S.unit(rng);
            TW lhs = torus_c(i, j, u, v * w);
            TW rhs = torus_concat(torus_c(i, j, u * v, w), torus_c(i, j, w * u, v));
            bool ok = tw_agree(lhs, rhs);
            if (!ok) inst = "u=" + u.str() + " v=" + v.str() + " w=" + w.str();
            return ok;
        });
    } else if (family == "TT6") {
        run("left_cocycle", 3, 0, [&](prng& rng, std::string& inst) {
            auto [i, j] = pair2(rng);
            TU u = S.unit(rng), v = S.unit(rng), w = S.unit(rng);
            TW rhs = torus_concat(torus_c(i, j, conj_unit(u, v), conj_unit(u, w)),
                                  torus_c(i, j, u, w));
            bool ok = tw_agree(torus_c(i, j, u * v, w), rhs);
            if (!ok) inst = "u=" + u.str() + " v=" + v.str() + " w=" + w.str();
            return ok;
        });
    } else if (family == "TT7") {
        run("right_cocycle", 3, 0, [&](prng& rng, std::string& inst) {
            auto [i, j] = pair2(rng);
            TU u = S.unit(rng), v = S.unit(rng), w = S.unit(rng);
            TW rhs = torus_concat(torus_c(i, j, u, v),
                                  torus_c(i, j, conj_unit(v, u), conj_unit(v, w)));
            bool ok = tw_agree(torus_c(i, j, u, v * w), rhs);
            if (!ok) inst = "u=" + u.str() + " v=" + v.str() + " w=" + w.str();
            return ok;
        });
    } else {
        throw domain_error("audit_steinberg: unknown family " + family);
    }

    return rep;
}

} // namespace twl

#endif
