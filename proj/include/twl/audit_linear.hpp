#ifndef TWL_AUDIT_LINEAR_HPP
#define TWL_AUDIT_LINEAR_HPP

#include <array>
#include <functional>
#include <string>

#include "twl/audit.hpp"
#include "twl/linear.hpp"

// Randomized audits of the elementary relations (R1)-(R6).  Both sides of
// every branch are evaluated as matrices over D_tau and compared exactly.
//
// The printed gamma = +-beta branches of (R3) and (R4) carry a sign that the
// matrix oracle rejects; the verified forms are
//   (R3)  w_beta(u) x_{+-beta}(f) w_beta(u)^-1 = x_{-+beta}(-u^{-+1} f u^{-+1})
//   (R4)  h_beta(u) x_{+-beta}(f) h_beta(u)^-1 = x_{+-beta}( u^{+-1} f u^{+-1})
// i.e. (R4) has no sign.  The audits assert the verified forms.

namespace twl {

namespace detail {

// distinct indices in 1..n
inline std::array<int, 4> pick_distinct(prng& rng, int n, int count) {
    std::array<int, 4> out{0, 0, 0, 0};
    for (int c = 0; c < count;) {
        int v = static_cast<int>(rng.range(1, n));
        bool dup = false;
        for (int i = 0; i < c; ++i)
            if (out[static_cast<std::size_t>(i)] == v) dup = true;
        if (!dup) out[static_cast<std::size_t>(c++)] = v;
    }
    return out;
}

} // namespace detail

template <class R>
audit_report audit_R(const R& ring, const std::string& family, int n, long samples,
                     std::uint64_t seed, int degree_cap) {
    using D = elem_t<R>;
    using M = matrix<D>;
    using P = tpoly<D>;

    if (n < 2) throw domain_error("audit_R: n >= 2 required");
    sampler<R> S{&ring, degree_cap};
    audit_report rep;
    rep.family = family;
    rep.ring_desc = ring.describe();
    rep.n = n;
    rep.seed = seed;
    rep.degree_cap = degree_cap;
    rep.requested_samples = samples;

    auto x = [&](int i, int j, const P& f) { return gen_x<D>(&ring, n, i, j, f); };
    auto w = [&](int i, int j, const P& u) { return gen_w<D>(&ring, n, i, j, u); };
    auto h = [&](int i, int j, const P& u) { return gen_h<D>(&ring, n, i, j, u); };
    auto inv_m = [&](const M& m, int i, int j, const P& u, char kind) {
        // inverses of the generators: x(f)^-1 = x(-f), w(u)^-1 = w(-u),
        // h(u)^-1 via the monomial form
        (void)m;
        if (kind == 'x') return x(i, j, -u);
        if (kind == 'w') return w(i, j, -u);
        return monomial_parts(h(i, j, u)).inverse().to_matrix();
    };

    auto run = [&](const std::string& branch, int needed_n,
                   const std::function<bool(prng&, std::string&)>& one) {
        if (n < needed_n) return;
        std::uint64_t fam = hash_str((family + "/" + branch).c_str());
        for (long s = 0; s < samples; ++s) {
            prng rng(mix_seed(seed, fam, static_cast<std::uint64_t>(s)));
            std::string inst;
            bool ok = one(rng, inst);
            rep.record(branch, ok, inst);
        }
    };

    auto fail_dump = [&](std::string& inst, const std::string& text) { inst = text; };

    if (family == "R1") {
        run("additivity", 2, [&](prng& rng, std::string& inst) {
            auto idx = detail::pick_distinct(rng, n, 2);
            P f = S.poly(rng), g = S.poly(rng);
            M lhs = x(idx[0], idx[1], f) * x(idx[0], idx[1], g);
            M rhs = x(idx[0], idx[1], f + g);
            if (lhs != rhs) {
                fail_dump(inst, "x[" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) +
                                    "](" + f.str() + "),(" + g.str() + ")");
                return false;
            }
            // inverse law
            return (x(idx[0], idx[1], f) * x(idx[0], idx[1], -f)).is_identity();
        });
        return rep;
    }

    if (family == "R2") {
        // [x_ij(f), x_jl(g)] = x_il(fg)
        run("sum_j=k", 3, [&](prng& rng, std::string& inst) {
            auto idx = detail::pick_distinct(rng, n, 3);
            int i = idx[0], j = idx[1], l = idx[2];
            P f = S.poly(rng), g = S.poly(rng);
            M lhs = x(i, j, f) * x(j, l, g) * x(i, j, -f) * x(j, l, -g);
            M rhs = x(i, l, f * g);
            if (lhs != rhs) fail_dump(inst, "f=" + f.str() + " g=" + g.str());
            return lhs == rhs;
        });
        // [x_ij(f), x_ki(g)] = x_kj(-gf)
        run("sum_i=l", 3, [&](prng& rng, std::string& inst) {
            auto idx = detail::pick_distinct(rng, n, 3);
            int i = idx[0], j = idx[1], k = idx[2];
            P f = S.poly(rng), g = S.poly(rng);
            M lhs = x(i, j, f) * x(k, i, g) * x(i, j, -f) * x(k, i, -g);
            M rhs = x(k, j, -(g * f));
            if (lhs != rhs) fail_dump(inst, "f=" + f.str() + " g=" + g.str());
            return lhs == rhs;
        });
        // disjoint index pairs commute
        run("disjoint", 4, [&](prng& rng, std::string& inst) {
            auto idx = detail::pick_distinct(rng, n, 4);
            P f = S.poly(rng), g = S.poly(rng);
            M lhs = x(idx[0], idx[1], f) * x(idx[2], idx[3], g) * x(idx[0], idx[1], -f) *
                    x(idx[2], idx[3], -g);
            if (!lhs.is_identity()) fail_dump(inst, "f=" + f.str() + " g=" + g.str());
            return lhs.is_identity();
        });
        // gamma = beta commutes by (R1)
        run("same_root", 2, [&](prng& rng, std::string& inst) {
            auto idx = detail::pick_distinct(rng, n, 2);
            P f = S.poly(rng), g = S.poly(rng);
            M lhs = x(idx[0], idx[1], f) * x(idx[0], idx[1], g) * x(idx[0], idx[1], -f) *
                    x(idx[0], idx[1], -g);
            if (!lhs.is_identity()) fail_dump(inst, "f=" + f.str() + " g=" + g.str());
            return lhs.is_identity();
        });
        return rep;
    }

    // families R3..R6 share the branch geometry; the conjugator is w_beta(u)
    // for R3/R5/R6 and h_beta(u) for R4
    bool isR3 = family == "R3", isR4 = family == "R4", isR5 = family == "R5",
         isR6 = family == "R6";
    if (!(isR3 || isR4 || isR5 || isR6)) throw domain_error("audit_R: unknown family " + family);

    auto conjugator = [&](int i, int j, const P& u) { return isR4 ? h(i, j, u) : w(i, j, u); };
    auto conjugator_inv = [&](int i, int j, const P& u) {
        return inv_m(M::identity(&ring, n), i, j, u, isR4 ? 'h' : 'w');
    };
    auto conj = [&](int i, int j, const P& u, const M& target) {
        return conjugator(i, j, u) * target * conjugator_inv(i, j, u);
    };
    // inner element and expected-result builders per family
    auto inner = [&](int k, int l, const P& payload) {
        if (isR3 || isR4) return x(k, l, payload);
        if (isR5) return w(k, l, payload);
        return h(k, l, payload);
    };
    auto inner_payload = [&](prng& rng) { return (isR3 || isR4) ? S.poly(rng) : S.unit_poly(rng); };

    run("orthogonal", 4, [&](prng& rng, std::string& inst) {
        auto idx = detail::pick_distinct(rng, n, 4);
        P u = S.unit_poly(rng), f = inner_payload(rng);
        M lhs = conj(idx[0], idx[1], u, inner(idx[2], idx[3], f));
        M rhs = inner(idx[2], idx[3], f);
        if (lhs != rhs) fail_dump(inst, "u=" + u.str() + " f=" + f.str());
        return lhs == rhs;
    });

    run("gamma=beta", 2, [&](prng& rng, std::string& inst) {
        auto idx = detail::pick_distinct(rng, n, 2);
        int i = idx[0], j = idx[1];
        P u = S.unit_poly(rng), f = inner_payload(rng);
        P ui = u.inverse();
        M lhs = conj(i, j, u, inner(i, j, f));
        M rhs = [&] {
            if (isR3) return x(j, i, -(ui * f * ui));
            if (isR4) return x(i, j, u * f * u); // verified form; paper prints a sign
            if (isR5) return w(j, i, -(ui * f * ui));
            return h(j, i, ui * f * ui) * h(j, i, u * u);
        }();
        if (lhs != rhs) fail_dump(inst, "u=" + u.str() + " f=" + f.str());
        return lhs == rhs;
    });

    run("gamma=-beta", 2, [&](prng& rng, std::string& inst) {
        auto idx = detail::pick_distinct(rng, n, 2);
        int i = idx[0], j = idx[1];
        P u = S.unit_poly(rng), f = inner_payload(rng);
        P ui = u.inverse();
        M lhs = conj(i, j, u, inner(j, i, f));
        M rhs = [&] {
            if (isR3) return x(i, j, -(u * f * u));
            if (isR4) return x(j, i, ui * f * ui); // verified form
            if (isR5) return w(i, j, -(u * f * u));
            return h(i, j, u * f * u) * h(i, j, ui * ui);
        }();
        if (lhs != rhs) fail_dump(inst, "u=" + u.str() + " f=" + f.str());
        return lhs == rhs;
    });

    // shared-index branches: gamma has exactly one index in {i,j}
    struct shared_case {
        const char* name;
        int gi, gj; // encodes which of (i,j,m) the gamma indices are: 0->i,1->j,2->m
    };
    // gamma = (i,m): i=k; gamma = (m,i): i=l; gamma = (j,m): j=k; gamma = (m,j): j=l
    const shared_case cases[4] = {{"i=k", 0, 2}, {"i=l", 2, 0}, {"j=k", 1, 2}, {"j=l", 2, 1}};
    for (const auto& sc : cases) {
        run(sc.name, 3, [&, sc](prng& rng, std::string& inst) {
            auto idx = detail::pick_distinct(rng, n, 3);
            int i = idx[0], j = idx[1], m = idx[2];
            auto pick = [&](int code) { return code == 0 ? i : code == 1 ? j : m; };
            int k = pick(sc.gi), l = pick(sc.gj);
            P u = S.unit_poly(rng), f = inner_payload(rng);
            P ui = u.inverse();
            // sigma_beta swaps i and j inside gamma
            auto swp = [&](int v) { return v == i ? j : v == j ? i : v; };
            int sk = swp(k), sl = swp(l);
            M lhs = conj(i, j, u, inner(k, l, f));
            M rhs = [&]() -> M {
                std::string b = sc.name;
                if (isR3) {
                    if (b == "i=k") return x(sk, sl, -(ui * f));
                    if (b == "i=l") return x(sk, sl, -(f * u));
                    if (b == "j=k") return x(sk, sl, u * f);
                    return x(sk, sl, f * ui);
                }
                if (isR4) {
                    if (b == "i=k") return x(k, l, u * f);
                    if (b == "i=l") return x(k, l, f * ui);
                    if (b == "j=k") return x(k, l, ui * f);
                    return x(k, l, f * u);
                }
                if (isR5) {
                    if (b == "i=k") return w(sk, sl, -(ui * f));
                    if (b == "i=l") return w(sk, sl, -(f * u));
                    if (b == "j=k") return w(sk, sl, u * f);
                    return w(sk, sl, f * ui);
                }
                if (b == "i=k") return h(sk, sl, ui * f) * h(sk, sl, u);
                if (b == "i=l") return h(sk, sl, f * u) * h(sk, sl, ui);
                if (b == "j=k") return h(sk, sl, u * f) * h(sk, sl, ui);
                return h(sk, sl, f * ui) * h(sk, sl, u);
            }();
            if (lhs != rhs)
                fail_dump(inst, std::string(sc.name) + " u=" + u.str() + " f=" + f.str());
            return lhs == rhs;
        });
    }

    return rep;
}

} // namespace twl

#endif
