#ifndef TWL_NTILDE_HPP
#define TWL_NTILDE_HPP

#include <vector>

#include "twl/htilde.hpp"
#include "twl/words.hpp"

// The extensions N~0 (n = 2) and N~ (n >= 3) of the monomial subgroup N by
// the symbol groups, built as W~ x H~ modulo J.  Elements are h * (Weyl
// lift); Weyl lifts of reduced words are canonical because the braid
// relations (W2), (W3) hold on the nose, and a square w~_a^2 is identified
// with h~_a(-1) through eta.
//
// The nu-machinery lifts pinned here deviate from the printed Section 2/3
// displays where the psi-compatibility rho = psi forces it (the printed
// w~_a = w_1 resp. h~_{-theta}(-t^-1) w~_{-theta}(1) have the wrong psi
// image); every pinned lift is verified by psi in the tests.

namespace twl {

// ---------------------------------------------------------------------------
// n = 2: elements h * w1^eps

template <class D>
class ntilde0 {
public:
    using ring_type = typename D::ring_type;

    explicit ntilde0(const ring_type* ring) : h_(htilde0<D>::one(ring)), eps_(0) {}
    ntilde0(htilde0<D> h, int eps) : h_(std::move(h)), eps_(eps & 1) {}

    static ntilde0 one(const ring_type* ring) { return ntilde0(ring); }
    static ntilde0 from_h(htilde0<D> h) { return ntilde0(std::move(h), 0); }
    static ntilde0 from_kernel(const ring_type* ring, const symbol_word<D>& l) {
        return from_h(htilde0<D>::central(ring, l));
    }
    static ntilde0 w1(const ring_type* ring) { return ntilde0(htilde0<D>::one(ring), 1); }
    // w~(u) = h~(u) w1^-1 = h~(u) h~(-1)^-1 w1
    static ntilde0 wt(const tunit<D>& u) {
        const ring_type* ring = u.ring();
        htilde0<D> h = htilde0<D>::torus(u) * htilde0<D>::torus(tunit<D>(-ring->one(), 0)).inverse();
        return ntilde0(std::move(h), 1);
    }

    const htilde0<D>& h() const { return h_; }
    int weyl_parity() const { return eps_; }
    const ring_type* ring() const { return h_.ring(); }

    // theta acts by the w_12(-1)-action
    static htilde0<D> act_theta(const htilde0<D>& x) {
        return htilde0<D>::act_w12(tunit<D>(-x.ring()->one(), 0), x);
    }

    ntilde0 operator*(const ntilde0& o) const {
        if (eps_ == 0) return ntilde0(h_ * o.h_, o.eps_);
        htilde0<D> h = h_ * act_theta(o.h_);
        int eps = 1 + o.eps_;
        if (eps == 2) // w1^2 = theta^2 = h~(-1)
            return ntilde0(h * htilde0<D>::torus(tunit<D>(-ring()->one(), 0)), 0);
        return ntilde0(std::move(h), 1);
    }

    ntilde0 inverse() const {
        if (eps_ == 0) return ntilde0(h_.inverse(), 0);
        // (h w1)^-1 = h~(-1)^-1 act(h^-1) w1
        htilde0<D> m1 = htilde0<D>::torus(tunit<D>(-ring()->one(), 0));
        return ntilde0(m1.inverse() * act_theta(h_.inverse()), 1);
    }

    monomial_matrix<D> psi() const {
        monomial_matrix<D> m = h_.pi();
        if (eps_) m = m * monomial_parts(gen_w<D>(ring(), 2, 1, 2, -tpoly<D>::one(ring())));
        return m;
    }

    // psi as an elementary word (for re-factorization fallbacks)
    group_word<D> psi_word() const {
        group_word<D> out;
        for (const auto& L : h_.xi().letters()) {
            group_word<D> sym{letter<D>::make_h(1, 2, L.u.poly()),
                              letter<D>::make_h(1, 2, L.v.poly()),
                              letter<D>::make_h(1, 2, (L.v * L.u).poly(), -1)};
            if (L.exp < 0) sym = word_inverse(sym);
            out = concat(out, sym);
        }
        out.push_back(letter<D>::make_h(1, 2, h_.torus_part().poly()));
        if (eps_) out.push_back(letter<D>::make_w(1, 2, -tpoly<D>::one(ring())));
        return out;
    }

    std::string str() const {
        return h_.str() + (eps_ ? "*w1" : "");
    }

private:
    htilde0<D> h_;
    int eps_;
};

template <class D>
bool cert_equal(const ntilde0<D>& a, const ntilde0<D>& b) {
    return a.weyl_parity() == b.weyl_parity() && cert_equal(a.h(), b.h());
}

// ---------------------------------------------------------------------------
// permutations and lexicographically smallest reduced words

inline int perm_length(const std::vector<int>& sig) {
    int n = static_cast<int>(sig.size()) - 1, len = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (sig[static_cast<std::size_t>(i)] > sig[static_cast<std::size_t>(j)]) ++len;
    return len;
}

// s_a * sigma (swap the VALUES a, a+1)
inline std::vector<int> perm_left_mul(int a, std::vector<int> sig) {
    for (auto& v : sig)
        if (v == a)
            v = a + 1;
        else if (v == a + 1)
            v = a;
    sig[0] = 0;
    return sig;
}

// sigma * s_a (swap positions a, a+1)
inline std::vector<int> perm_right_mul(std::vector<int> sig, int a) {
    std::swap(sig[static_cast<std::size_t>(a)], sig[static_cast<std::size_t>(a + 1)]);
    return sig;
}

// lexicographically smallest reduced word: repeatedly take the smallest a
// with l(s_a sigma) < l(sigma)
inline std::vector<int> lex_reduced_word(std::vector<int> sig) {
    int n = static_cast<int>(sig.size()) - 1;
    std::vector<int> word;
    int len = perm_length(sig);
    while (len > 0) {
        for (int a = 1; a < n; ++a) {
            std::vector<int> next = perm_left_mul(a, sig);
            int nl = perm_length(next);
            if (nl < len) {
                word.push_back(a);
                sig = std::move(next);
                len = nl;
                break;
            }
        }
    }
    return word;
}

// ---------------------------------------------------------------------------
// n >= 3: elements h * w~(sigma)

template <class D>
class ntilden {
public:
    using ring_type = typename D::ring_type;

    ntilden(const ring_type* ring, int n)
        : n_(n), h_(htilden<D>::one(ring, n)), sig_(static_cast<std::size_t>(n) + 1) {
        for (int i = 0; i <= n; ++i) sig_[static_cast<std::size_t>(i)] = i;
    }

    static ntilden one(const ring_type* ring, int n) { return ntilden(ring, n); }
    static ntilden from_h(htilden<D> h) {
        ntilden e(h.ring(), h.n());
        e.h_ = std::move(h);
        return e;
    }
    static ntilden from_kernel(const ring_type* ring, int n, const symbol_word<D>& l) {
        return from_h(htilden<D>::central(ring, n, l));
    }

    const htilden<D>& h() const { return h_; }
    const std::vector<int>& weyl() const { return sig_; }
    int n() const { return n_; }
    const ring_type* ring() const { return h_.ring(); }

    // w~(sigma) h w~(sigma)^-1, folding the w_a(-1)-action over the
    // canonical reduced word
    static htilden<D> act_weyl(const std::vector<int>& sig, const htilden<D>& x) {
        htilden<D> r = x;
        std::vector<int> word = lex_reduced_word(sig);
        tunit<D> m1(-x.ring()->one(), 0);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            r = htilden<D>::act_w(*it, *it + 1, m1, r);
        return r;
    }

    // right-multiply by the Weyl letter w~_a (psi = w_a(-1))
    void mul_walpha(int a) {
        int before = perm_length(sig_);
        std::vector<int> next = perm_right_mul(sig_, a);
        if (perm_length(next) > before) {
            sig_ = std::move(next);
            return;
        }
        // w~(sigma) w~_a = w~(sigma s_a) h~_a; eta: h~_a = h~_a(-1)
        htilden<D> corr =
            htilden<D>::torus(ring(), n_, a, a + 1, tunit<D>(-ring()->one(), 0));
        h_ = h_ * act_weyl(next, corr);
        sig_ = std::move(next);
    }

    // right-multiply by w~_a^-1 = h~_a(-1)^-1 w~_a
    void mul_walpha_inv(int a) {
        htilden<D> corr =
            htilden<D>::torus(ring(), n_, a, a + 1, tunit<D>(-ring()->one(), 0)).inverse();
        h_ = h_ * act_weyl(sig_, corr);
        mul_walpha(a);
    }

    void mul_h(const htilden<D>& x) { h_ = h_ * act_weyl(sig_, x); }

    ntilden operator*(const ntilden& o) const {
        ntilden r = *this;
        r.mul_h(o.h_);
        for (int a : lex_reduced_word(o.sig_)) r.mul_walpha(a);
        return r;
    }

    ntilden inverse() const {
        ntilden r(ring(), n_);
        std::vector<int> word = lex_reduced_word(sig_);
        for (auto it = word.rbegin(); it != word.rend(); ++it) r.mul_walpha_inv(*it);
        r.mul_h(h_.inverse());
        return r;
    }

    monomial_matrix<D> psi() const {
        monomial_matrix<D> m = h_.pi();
        for (int a : lex_reduced_word(sig_))
            m = m * monomial_parts(gen_w<D>(ring(), n_, a, a + 1, -tpoly<D>::one(ring())));
        return m;
    }

    group_word<D> psi_word() const {
        group_word<D> out;
        for (const auto& L : h_.xi().letters()) {
            group_word<D> sym{letter<D>::make_h(1, 2, L.u.poly()),
                              letter<D>::make_h(1, 2, L.v.poly()),
                              letter<D>::make_h(1, 2, (L.v * L.u).poly(), -1)};
            if (L.exp < 0) sym = word_inverse(sym);
            out = concat(out, sym);
        }
        for (int j = 2; j <= n_; ++j)
            out.push_back(letter<D>::make_h(1, j, h_.slot(j).poly()));
        for (int a : lex_reduced_word(sig_))
            out.push_back(letter<D>::make_w(a, a + 1, -tpoly<D>::one(ring())));
        return out;
    }

    std::string str() const {
        std::string s = h_.str();
        for (int a : lex_reduced_word(sig_)) s += "*w" + std::to_string(a);
        return s;
    }

private:
    int n_;
    htilden<D> h_;
    std::vector<int> sig_;
};

template <class D>
bool cert_equal(const ntilden<D>& a, const ntilden<D>& b) {
    return a.weyl() == b.weyl() && cert_equal(a.h(), b.h());
}

// w~_alpha(u) = h~_alpha(u) w~_alpha^-1
template <class D>
ntilden<D> ntilden_walpha_u(const typename D::ring_type* ring, int n, int a, const tunit<D>& u) {
    ntilden<D> e = ntilden<D>::from_h(htilden<D>::torus(ring, n, a, a + 1, u));
    e.mul_walpha_inv(a);
    return e;
}

// ---------------------------------------------------------------------------
// monomial lifts (used to pin the nu-machinery elements)

// n = 2: target = pi_0(h~(s)) * psi_0(w1)^eps requires the diagonal residue
// diag(s, s^-1)
template <class D>
ntilde0<D> lift_monomial0(const typename D::ring_type* ring,
                          const monomial_matrix<D>& target) {
    bool anti = !target.is_diagonal();
    monomial_matrix<D> residue = target;
    if (anti) {
        monomial_matrix<D> w1 = monomial_parts(gen_w<D>(ring, 2, 1, 2, -tpoly<D>::one(ring)));
        residue = target * w1.inverse();
    }
    if (!residue.is_diagonal()) throw internal_error("lift_monomial0: residue not diagonal");
    tunit<D> s = residue.unit(2).inverse();
    if (residue.unit(1) != s)
        throw domain_error("lift_monomial0: target needs an explicit commutator part");
    ntilde0<D> out = ntilde0<D>::from_h(htilde0<D>::torus(s));
    if (anti) out = out * ntilde0<D>::w1(ring);
    if (out.psi() != target) throw internal_error("lift_monomial0: psi mismatch");
    return out;
}

// n >= 3: Weyl braid-lift of the permutation, then an h~_{1j}-peel of the
// diagonal residue; requires the leftover first entry to close up exactly
template <class D>
ntilden<D> lift_monomialn(const typename D::ring_type* ring, int n,
                          const monomial_matrix<D>& target) {
    ntilden<D> base(ring, n);
    {
        // copy the permutation into the Weyl part via generators
        std::vector<int> sig = target.sigma;
        for (int a : lex_reduced_word(sig)) (void)a;
        ntilden<D> tmp(ring, n);
        for (int a : lex_reduced_word(sig)) tmp.mul_walpha(a);
        base = tmp;
    }
    monomial_matrix<D> residue_m = monomial_parts(
        target.to_matrix() * base.psi().inverse().to_matrix());
    if (!residue_m.is_diagonal()) throw internal_error("lift_monomialn: residue not diagonal");
    htilden<D> pre = htilden<D>::one(ring, n);
    tunit<D> acc(ring->one(), 0);
    for (int j = 2; j <= n; ++j) {
        tunit<D> vj = residue_m.unit(j).inverse();
        pre.mul_basis(j, vj, 1);
        acc = acc * vj;
    }
    if (residue_m.unit(1) != acc)
        throw domain_error("lift_monomialn: target needs an explicit commutator part");
    ntilden<D> out = ntilden<D>::from_h(pre) * base;
    if (out.psi() != target) throw internal_error("lift_monomialn: psi mismatch");
    return out;
}

// ---------------------------------------------------------------------------
// the nu-machinery elements w~_a and h~_a(f), pinned by psi-compatibility

template <class D>
ntilde0<D> nu_wt0(const typename D::ring_type* ring, const affine_root& a) {
    if (a == affine_root(1, 2, 0)) return ntilde0<D>::wt(tunit<D>(ring->one(), 0));
    if (a == affine_root(2, 1, 1))
        return lift_monomial0<D>(ring, monomial_parts(gen_w<D>(ring, 2, a, ring->one())));
    throw domain_error("nu_wt0: not a simple affine root at n = 2");
}

template <class D>
htilde0<D> nu_ht0(const typename D::ring_type* ring, const affine_root& a, const D& f) {
    if (f.is_zero()) throw domain_error("nu_ht0: unit coefficient required");
    if (a == affine_root(1, 2, 0)) return htilde0<D>::torus(tunit<D>(f, 0));
    if (a == affine_root(2, 1, 1)) {
        // h~_a0(f) = h~(-f^-1 t^-1) h~(-t^-1)^-1
        return htilde0<D>::torus(tunit<D>(-f.inverse(), -1)) *
               htilde0<D>::torus(tunit<D>(-f.ring()->one(), -1)).inverse();
    }
    throw domain_error("nu_ht0: not a simple affine root at n = 2");
}

template <class D>
ntilden<D> nu_wtn(const typename D::ring_type* ring, int n, const affine_root& a) {
    if (a.level == 0) return ntilden_walpha_u<D>(ring, n, a.beta.i, tunit<D>(ring->one(), 0));
    if (a == affine_root(n, 1, 1))
        return lift_monomialn<D>(ring, n, monomial_parts(gen_w<D>(ring, n, a, ring->one())));
    throw domain_error("nu_wtn: not a simple affine root");
}

template <class D>
htilden<D> nu_htn(const typename D::ring_type* ring, int n, const affine_root& a, const D& f) {
    if (f.is_zero()) throw domain_error("nu_htn: unit coefficient required");
    if (a.level == 0) return htilden<D>::torus(ring, n, a.beta.i, a.beta.j, tunit<D>(f, 0));
    if (a == affine_root(n, 1, 1)) {
        // basis (1,n): h~_{1n}(-f^-1 t^-1) h~_{1n}(-t^-1)^-1
        htilden<D> out = htilden<D>::torus(ring, n, 1, n, tunit<D>(-f.inverse(), -1));
        return out * htilden<D>::torus(ring, n, 1, n, tunit<D>(-f.ring()->one(), -1)).inverse();
    }
    throw domain_error("nu_htn: not a simple affine root");
}

} // namespace twl

#endif
