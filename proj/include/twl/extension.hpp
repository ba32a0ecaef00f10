#ifndef TWL_EXTENSION_HPP
#define TWL_EXTENSION_HPP

#include <functional>
#include <string>
#include <variant>

#include "twl/audit.hpp"
#include "twl/bruhat.hpp"
#include "twl/ntilde.hpp"

// The Matsumoto-style central extension: compatible pairs (e, w~) with
// rho(e) = psi(w~), the permutations lambda / mu / nu and their starred
// duals, and the audits behind Lemmas 2.14 / 2.15 and Theorem 2.16.

namespace twl {

// uniform interface over ntilde0 (n = 2) and ntilden (n >= 3)
template <class NT>
struct nt_traits;

template <class D>
struct nt_traits<ntilde0<D>> {
    using H = htilde0<D>;
    using ring_type = typename D::ring_type;
    static ntilde0<D> one(const ring_type* ring, int) { return ntilde0<D>::one(ring); }
    static ntilde0<D> from_h(H h) { return ntilde0<D>::from_h(std::move(h)); }
    static ntilde0<D> kernel(const ring_type* ring, int, const symbol_word<D>& l) {
        return ntilde0<D>::from_kernel(ring, l);
    }
    static ntilde0<D> nu_wt(const ring_type* ring, int, const affine_root& a) {
        return nu_wt0<D>(ring, a);
    }
    static H nu_ht(const ring_type* ring, int, const affine_root& a, const D& f) {
        return nu_ht0<D>(ring, a, f);
    }
    static constexpr presentation pres = presentation::P;
};

template <class D>
struct nt_traits<ntilden<D>> {
    using H = htilden<D>;
    using ring_type = typename D::ring_type;
    static ntilden<D> one(const ring_type* ring, int n) { return ntilden<D>::one(ring, n); }
    static ntilden<D> from_h(H h) { return ntilden<D>::from_h(std::move(h)); }
    static ntilden<D> kernel(const ring_type* ring, int n, const symbol_word<D>& l) {
        return ntilden<D>::from_kernel(ring, n, l);
    }
    static ntilden<D> nu_wt(const ring_type* ring, int n, const affine_root& a) {
        return nu_wtn<D>(ring, n, a);
    }
    static H nu_ht(const ring_type* ring, int n, const affine_root& a, const D& f) {
        return nu_htn<D>(ring, n, a, f);
    }
    static constexpr presentation pres = presentation::Q;
};

// ---------------------------------------------------------------------------
// compatible pairs

template <class D, class NT>
struct xpair {
    factorization<D> e;
    NT wt;

    bool compatible() const { return e.w == wt.psi(); }
    void check(const char* where) const {
        if (!compatible()) throw internal_error(std::string(where) + ": rho(e) != psi(wt)");
    }
};

template <class D, class NT>
bool cert_equal(const xpair<D, NT>& a, const xpair<D, NT>& b) {
    return a.e.total() == b.e.total() && cert_equal(a.wt, b.wt);
}

// mu(u): (ue, w~); the U-element is given as a word of positive letters
template <class D, class NT>
void mu_left(xpair<D, NT>& p, const group_word<D>& u) {
    for (auto it = u.rbegin(); it != u.rend(); ++it) absorb_x_left<D>(p.e, *it);
    for (auto it = u.rbegin(); it != u.rend(); ++it) p.e.origin.insert(p.e.origin.begin(), *it);
    if (!in_U(p.e.u_mat)) throw internal_error("mu_left: u-part left U");
    p.check("mu_left");
}

template <class D, class NT>
void mu_right(xpair<D, NT>& p, const group_word<D>& v) {
    for (const auto& L : v) {
        absorb_x_right<D>(p.e, L);
        p.e.origin.push_back(L);
    }
    if (!in_U(p.e.v_mat)) throw internal_error("mu_right: v-part left U");
    p.check("mu_right");
}

// lambda(h): (psi(h) e, h w~); falls back to re-factorization when the
// conjugated u-part leaves U (the Remark's case), counting the event
template <class D, class NT>
void lambda_left(xpair<D, NT>& p, const NT& h) {
    monomial_matrix<D> Hm = h.psi();
    matrix<D> HM = Hm.to_matrix(), HMi = Hm.inverse().to_matrix();
    matrix<D> u_conj = HM * p.e.u_mat * HMi;
    group_word<D> hword = h.psi_word();
    group_word<D> new_origin = concat(hword, p.e.origin);
    if (in_U(u_conj)) {
        p.e.u_word = conj_word<D>(Hm, p.e.u_word, +1);
        p.e.u_mat = u_conj;
        p.e.w = Hm * p.e.w;
        p.e.origin = std::move(new_origin);
    } else {
        long count = p.e.refactor_count + 1;
        p.e = factorize<D>(p.e.ring, p.e.n, new_origin);
        p.e.refactor_count = count;
    }
    p.wt = h * p.wt;
    p.check("lambda_left");
}

template <class D, class NT>
void lambda_right(xpair<D, NT>& p, const NT& h) {
    monomial_matrix<D> Hm = h.psi();
    matrix<D> HM = Hm.to_matrix(), HMi = Hm.inverse().to_matrix();
    matrix<D> v_conj = HMi * p.e.v_mat * HM;
    group_word<D> new_origin = concat(p.e.origin, h.psi_word());
    if (in_U(v_conj)) {
        p.e.v_word = conj_word<D>(Hm, p.e.v_word, -1);
        p.e.v_mat = v_conj;
        p.e.w = p.e.w * Hm;
        p.e.origin = std::move(new_origin);
    } else {
        long count = p.e.refactor_count + 1;
        p.e = factorize<D>(p.e.ring, p.e.n, new_origin);
        p.e.refactor_count = count;
    }
    p.wt = p.wt * h;
    p.check("lambda_right");
}

// nu_a: (w_a(1) e, ...) with the w~-part updated by the branch of Lemma 2.12
template <class D, class NT>
void nu_left(xpair<D, NT>& p, const affine_root& a) {
    using T = nt_traits<NT>;
    step_result<D> res = rho_step<D>(p.e, a, coset_side::left);
    if (res.torus_branch)
        p.wt = T::from_h(T::nu_ht(p.e.ring, p.e.n, a, res.coeff)).inverse() * p.wt;
    else
        p.wt = T::nu_wt(p.e.ring, p.e.n, a) * p.wt;
    p.check("nu_left");
}

// nu*_b: (e w_b(-1), ...)
template <class D, class NT>
void nu_right(xpair<D, NT>& p, const affine_root& b) {
    using T = nt_traits<NT>;
    step_result<D> res = rho_step<D>(p.e, b, coset_side::right);
    if (res.torus_branch)
        p.wt = p.wt * T::from_h(T::nu_ht(p.e.ring, p.e.n, b, res.coeff));
    else
        p.wt = p.wt * T::nu_wt(p.e.ring, p.e.n, b).inverse();
    p.check("nu_right");
}

// a generator of G_0 (left column) or G_0^* (right column)
template <class D, class NT>
struct ext_gen {
    enum class kind { lambda, mu, nu } k;
    NT h;              // lambda
    group_word<D> u;   // mu
    affine_root root;  // nu

    static ext_gen make_lambda(NT h_) {
        return ext_gen{kind::lambda, std::move(h_), {}, affine_root(1, 2, 0)};
    }
    static ext_gen make_mu(const typename D::ring_type* ring, int n, group_word<D> u_) {
        return ext_gen{kind::mu, nt_traits<NT>::one(ring, n), std::move(u_),
                       affine_root(1, 2, 0)};
    }
    static ext_gen make_nu(const typename D::ring_type* ring, int n, const affine_root& r) {
        return ext_gen{kind::nu, nt_traits<NT>::one(ring, n), {}, r};
    }
};

template <class D, class NT>
void apply_left(xpair<D, NT>& p, const ext_gen<D, NT>& g) {
    switch (g.k) {
    case ext_gen<D, NT>::kind::lambda: lambda_left<D, NT>(p, g.h); break;
    case ext_gen<D, NT>::kind::mu: mu_left<D, NT>(p, g.u); break;
    case ext_gen<D, NT>::kind::nu: nu_left<D, NT>(p, g.root); break;
    }
}

template <class D, class NT>
void apply_right(xpair<D, NT>& p, const ext_gen<D, NT>& g) {
    switch (g.k) {
    case ext_gen<D, NT>::kind::lambda: lambda_right<D, NT>(p, g.h); break;
    case ext_gen<D, NT>::kind::mu: mu_right<D, NT>(p, g.u); break;
    case ext_gen<D, NT>::kind::nu: nu_right<D, NT>(p, g.root); break;
    }
}

} // namespace twl

#endif
