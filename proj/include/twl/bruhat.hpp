#ifndef TWL_BRUHAT_HPP
#define TWL_BRUHAT_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "twl/words.hpp"

// Incremental UNU factorization of elementary-group words: the monomial
// projection rho, local coordinates at simple affine roots, and the
// double-coset update steps of Lemmas 2.12 / 3.9.
//
// A factorization carries exact letter lists for its u- and v-parts together
// with cached matrices; the class invariant is matrix-level:
//     u_mat * w * v_mat == represented element,  in_U(u_mat), in_U(v_mat).
// (Individual letters of u_word/v_word need not sit at positive roots: a
// positive word conjugated through the w-part can only be renormalized by
// infinite normal ordering, which the t-adic filtration does not admit.)

namespace twl {

enum class coset_side { left, right };

// ---------------------------------------------------------------------------
// conjugation by a monomial matrix

template <class D>
struct conj_result {
    affine_root root;
    D coeff;
};

// sign=+1: w x w^-1; sign=-1: w^-1 x w.  Payload-level form.
template <class D>
letter<D> conj_x_letter(const monomial_matrix<D>& w, const letter<D>& L, int sign) {
    if (L.kind != letter_kind::x) throw domain_error("conj_x_letter: x letters only");
    int i = L.i, j = L.j;
    int ni, nj;
    tpoly<D> q(L.payload.ring());
    if (sign > 0) {
        ni = w.sigma[static_cast<std::size_t>(i)];
        nj = w.sigma[static_cast<std::size_t>(j)];
        q = w.unit(i).poly() * L.payload * w.unit(j).inverse().poly();
    } else {
        std::vector<int> inv(static_cast<std::size_t>(w.n) + 1);
        for (int k = 1; k <= w.n; ++k) inv[static_cast<std::size_t>(w.sigma[static_cast<std::size_t>(k)])] = k;
        ni = inv[static_cast<std::size_t>(i)];
        nj = inv[static_cast<std::size_t>(j)];
        q = w.unit(ni).inverse().poly() * L.payload * w.unit(nj).poly();
    }
    return letter<D>::make_x(ni, nj, std::move(q), L.exp);
}

// spec-level form: w^{+-1} x_{beta.}(f) w^{-+1} = x_{gamma.}(g)
template <class D>
conj_result<D> conj_by_monomial(const monomial_matrix<D>& w, const affine_root& r, const D& f,
                                int sign) {
    letter<D> L = letter<D>::make_x(r, f);
    letter<D> c = conj_x_letter(w, L, sign);
    if (c.payload.is_zero()) {
        // root still moves; recompute the level from a probe payload
        letter<D> probe = conj_x_letter(w, letter<D>::make_x(r, f.ring()->one()), sign);
        affine_root out(c.i, c.j, probe.payload.min_exp());
        return conj_result<D>{out, f.ring()->zero()};
    }
    affine_root out(c.i, c.j, c.payload.min_exp());
    return conj_result<D>{out, affine_coeff_of<D>(out, c.payload)};
}

// root image only (coefficient-independent)
template <class D>
affine_root monomial_root_image(const monomial_matrix<D>& w, const affine_root& r, int sign) {
    letter<D> probe = conj_x_letter(w, letter<D>::make_x(r, w.ring->one()), sign);
    return affine_root(probe.i, probe.j, probe.payload.min_exp());
}

// ---------------------------------------------------------------------------
// factorization e = u w v

template <class D>
struct factorization {
    using ring_type = typename D::ring_type;

    const ring_type* ring;
    int n;
    group_word<D> u_word, v_word;
    matrix<D> u_mat, v_mat;
    monomial_matrix<D> w;
    group_word<D> origin;    // the full defining word, extended by every step
    long refactor_count = 0; // times the U'-membership fallback re-factorized

    factorization(const ring_type* ring_, int n_)
        : ring(ring_), n(n_), u_mat(matrix<D>::identity(ring_, n_)),
          v_mat(matrix<D>::identity(ring_, n_)), w(monomial_matrix<D>::identity(ring_, n_)) {}

    matrix<D> total() const { return u_mat * w.to_matrix() * v_mat; }

    bool invariant_holds() const {
        return in_U(u_mat) && in_U(v_mat) && word_matrix<D>(ring, n, u_word) == u_mat &&
               word_matrix<D>(ring, n, v_word) == v_mat;
    }
};

// ---------------------------------------------------------------------------
// local coordinates (type A slot reading; other positive-root products only
// contribute strictly higher t-degree to the designated entry)

template <class D>
D local_coordinate_of(const matrix<D>& m, const affine_root& a, int n) {
    if (!is_simple(a, n)) throw domain_error("local_coordinate: simple roots only");
    const tpoly<D>& e = m.at(a.beta.i, a.beta.j);
    if (a.beta.positive()) return e.coeff(0);  // (alpha_i, 0): t^0 of (i, i+1)
    return e.coeff_right(1);                   // a0: t^1 of (n, 1), right-normal
}

template <class D>
D local_coordinate(const factorization<D>& fac, const affine_root& a, coset_side side) {
    if (side == coset_side::right) return local_coordinate_of(fac.v_mat, a, fac.n);
    // display convention: u ends in x_a(-f); return f
    return -local_coordinate_of(fac.u_mat, a, fac.n);
}

// ---------------------------------------------------------------------------
// absorption

template <class D>
void absorb_x_right(factorization<D>& fac, const letter<D>& L) {
    fac.v_word.push_back(L);
    fac.v_mat = fac.v_mat * letter_matrix<D>(fac.ring, fac.n, L);
}

template <class D>
void absorb_x_left(factorization<D>& fac, const letter<D>& L) {
    fac.u_word.insert(fac.u_word.begin(), L);
    fac.u_mat = letter_matrix<D>(fac.ring, fac.n, L) * fac.u_mat;
}

template <class D>
group_word<D> conj_word(const monomial_matrix<D>& w, const group_word<D>& word, int sign) {
    group_word<D> out;
    out.reserve(word.size());
    for (const auto& L : word) out.push_back(conj_x_letter(w, L, sign));
    return out;
}

template <class D>
struct step_result {
    bool torus_branch = false; // h_a(..)-branch of Lemma 2.12 taken
    D coeff;                   // the f (left) or g (right) of the display
};

template <class D> void refactor_from_origin(factorization<D>& fac);

// e * w_b(s) for a simple affine root b and s in D^x.
// Lemma 2.12 Case 2 machinery at arbitrary coefficient; rho_step passes -1.
template <class D>
step_result<D> absorb_w_right(factorization<D>& fac, const affine_root& b, const D& s) {
    if (!is_simple(b, fac.n)) throw domain_error("absorb_w_right: simple roots only");
    if (s.is_zero()) throw domain_error("absorb_w_right: unit coefficient required");
    const auto* ring = fac.ring;
    int n = fac.n;
    matrix<D> before = fac.total();

    monomial_matrix<D> Wb = monomial_parts(gen_w<D>(ring, n, b, s));
    D g = local_coordinate_of(fac.v_mat, b, n);

    // v = x_b(g) z with z of zero b-coordinate; conjugate z through w_b(s)
    group_word<D> z_word = fac.v_word;
    z_word.insert(z_word.begin(), letter<D>::make_x(b, -g));
    matrix<D> z_conj = Wb.inverse().to_matrix() * (gen_x<D>(ring, n, b, -g) * fac.v_mat) *
                       Wb.to_matrix();
    if (!in_U(z_conj)) {
        // the stripped remainder was not in U'_b; renormalize from scratch
        fac.origin.push_back(letter<D>::make_w(b, s));
        refactor_from_origin(fac);
        return step_result<D>{false, g};
    }

    affine_root wb = monomial_root_image<D>(fac.w, b, +1);
    step_result<D> res;
    res.coeff = g;

    if (g.is_zero() || wb.positive()) {
        if (!g.is_zero()) {
            conj_result<D> cr = conj_by_monomial<D>(fac.w, b, g, +1);
            letter<D> uL = letter<D>::make_x(cr.root, cr.coeff);
            fac.u_word.push_back(uL);
            fac.u_mat = fac.u_mat * letter_matrix<D>(ring, n, uL);
        }
        fac.w = fac.w * Wb;
        fac.v_word = conj_word<D>(Wb.inverse(), z_word, +1);
        fac.v_mat = z_conj;
        res.torus_branch = false;
    } else {
        // rank-1 rewrite x_b(p) w_b(u') = x_{-b}(p^-1) H x_b(-u' p^-1 u')
        tpoly<D> p = affine_payload<D>(b, g);
        tpoly<D> up = affine_payload<D>(b, s);
        tpoly<D> pi = p.inverse(), ui = up.inverse();
        monomial_matrix<D> H = monomial_matrix<D>::identity(ring, n);
        H.units[static_cast<std::size_t>(b.beta.i - 1)] = tunit<D>(-(p * ui));
        H.units[static_cast<std::size_t>(b.beta.j - 1)] = tunit<D>(-(pi * up));

        affine_root minus_b = -b;
        conj_result<D> cr = conj_by_monomial<D>(fac.w, minus_b, affine_coeff_of<D>(minus_b, pi), +1);
        letter<D> uL = letter<D>::make_x(cr.root, cr.coeff);
        fac.u_word.push_back(uL);
        fac.u_mat = fac.u_mat * letter_matrix<D>(ring, n, uL);

        fac.w = fac.w * H;

        tpoly<D> tail = -(up * pi * up);
        letter<D> vL = letter<D>::make_x(b.beta.i, b.beta.j, tail);
        group_word<D> nv;
        nv.push_back(vL);
        for (auto& L : conj_word<D>(Wb.inverse(), z_word, +1)) nv.push_back(L);
        fac.v_word = std::move(nv);
        fac.v_mat = letter_matrix<D>(ring, n, vL) * z_conj;
        res.torus_branch = true;
    }

    fac.origin.push_back(letter<D>::make_w(b, s));
    matrix<D> after = fac.total();
    if (after != before * gen_w<D>(ring, n, b, s))
        throw internal_error("absorb_w_right: factorization invariant broken");
    return res;
}

// w_a(s) * e, mirror of the right absorption; rho_step passes +1.
template <class D>
step_result<D> absorb_w_left(factorization<D>& fac, const affine_root& a, const D& s) {
    if (!is_simple(a, fac.n)) throw domain_error("absorb_w_left: simple roots only");
    if (s.is_zero()) throw domain_error("absorb_w_left: unit coefficient required");
    const auto* ring = fac.ring;
    int n = fac.n;
    matrix<D> before = fac.total();

    monomial_matrix<D> Wa = monomial_parts(gen_w<D>(ring, n, a, s));
    D c = local_coordinate_of(fac.u_mat, a, n);

    // u = y x_a(c); conjugate y through w_a(s)
    group_word<D> y_word = fac.u_word;
    y_word.push_back(letter<D>::make_x(a, -c));
    matrix<D> y_conj = Wa.to_matrix() * (fac.u_mat * gen_x<D>(ring, n, a, -c)) *
                       Wa.inverse().to_matrix();
    if (!in_U(y_conj)) {
        fac.origin.insert(fac.origin.begin(), letter<D>::make_w(a, s));
        refactor_from_origin(fac);
        return step_result<D>{false, -c};
    }

    affine_root wa_inv = monomial_root_image<D>(fac.w, a, -1);
    step_result<D> res;
    res.coeff = -c; // display writes x_a(-f): f = -c

    if (c.is_zero() || wa_inv.positive()) {
        if (!c.is_zero()) {
            conj_result<D> cr = conj_by_monomial<D>(fac.w, a, c, -1);
            letter<D> vL = letter<D>::make_x(cr.root, cr.coeff);
            fac.v_word.insert(fac.v_word.begin(), vL);
            fac.v_mat = letter_matrix<D>(ring, n, vL) * fac.v_mat;
        }
        fac.w = Wa * fac.w;
        fac.u_word = conj_word<D>(Wa, y_word, +1);
        fac.u_mat = y_conj;
        res.torus_branch = false;
    } else {
        // rank-1 rewrite w_a(u') x_a(p) = x_a(-u' p^-1 u') H x_{-a}(p^-1),
        // H = diag(-u' p^-1 at i, -u'^-1 p at j); then x_{-a}(p^-1) passes
        // through the old w-part to the v side
        tpoly<D> p = affine_payload<D>(a, c);
        tpoly<D> up = affine_payload<D>(a, s);
        tpoly<D> pi = p.inverse(), ui = up.inverse();
        monomial_matrix<D> H = monomial_matrix<D>::identity(ring, n);
        H.units[static_cast<std::size_t>(a.beta.i - 1)] = tunit<D>(-(up * pi));
        H.units[static_cast<std::size_t>(a.beta.j - 1)] = tunit<D>(-(ui * p));

        affine_root minus_a = -a;
        conj_result<D> cr =
            conj_by_monomial<D>(fac.w, minus_a, affine_coeff_of<D>(minus_a, pi), -1);
        letter<D> vL = letter<D>::make_x(cr.root, cr.coeff);
        fac.v_word.insert(fac.v_word.begin(), vL);
        fac.v_mat = letter_matrix<D>(ring, n, vL) * fac.v_mat;

        tpoly<D> head = -(up * pi * up);
        letter<D> uL = letter<D>::make_x(a.beta.i, a.beta.j, head);
        group_word<D> nu = conj_word<D>(Wa, y_word, +1);
        nu.push_back(uL);
        fac.u_word = std::move(nu);
        fac.u_mat = y_conj * letter_matrix<D>(ring, n, uL);

        fac.w = H * fac.w;
        res.torus_branch = true;
    }

    fac.origin.insert(fac.origin.begin(), letter<D>::make_w(a, s));
    matrix<D> after = fac.total();
    if (after != gen_w<D>(ring, n, a, s) * before)
        throw internal_error("absorb_w_left: factorization invariant broken");
    return res;
}

// ---------------------------------------------------------------------------
// rewriting a word into the absorbable alphabet
//   {x at a positive affine root} u {w at a simple affine root, unit coeff}

template <class D>
struct atom {
    bool is_w;
    affine_root root;
    D coeff;
};

namespace bruhat_detail {

// one w-letter at an arbitrary positive affine root -> chain of simple atoms
template <class D>
void push_w_at(std::vector<atom<D>>& out, const affine_root& r, const D& s, int n) {
    const auto* ring = s.ring();
    if (is_simple(r, n)) {
        out.push_back(atom<D>{true, r, s});
        return;
    }
    simple_reduction red = reduce_to_simple(r, n);
    // w_r(s) = prod_i w_{a_i}(1) . w_target(s') . prod_i w_{a_i}(1)^-1,
    // the payload pulled back letter by letter
    affine_root cur = r;
    D coeff = s;
    for (const auto& a : red.word) {
        monomial_matrix<D> Wa = monomial_parts(gen_w<D>(ring, n, a, ring->one()));
        conj_result<D> cr = conj_by_monomial<D>(Wa, cur, coeff, -1);
        cur = cr.root;
        coeff = cr.coeff;
        out.push_back(atom<D>{true, a, ring->one()});
    }
    if (cur != red.target) throw internal_error("push_w_at: reduction mismatch");
    out.push_back(atom<D>{true, red.target, coeff});
    for (auto it = red.word.rbegin(); it != red.word.rend(); ++it)
        out.push_back(atom<D>{true, *it, -ring->one()});
}

// one x-monomial at an affine root (possibly negative) -> atoms
template <class D>
void push_x_at(std::vector<atom<D>>& out, const affine_root& r, const D& f, int n) {
    if (f.is_zero()) return;
    if (r.positive()) {
        out.push_back(atom<D>{false, r, f});
        return;
    }
    // x_{-b}(f) = x_b(f^-1) w_b(-f^-1) x_b(f^-1) with b = -r positive
    affine_root b = -r;
    D fi = f.inverse();
    out.push_back(atom<D>{false, b, fi});
    push_w_at<D>(out, b, -fi, n);
    out.push_back(atom<D>{false, b, fi});
}

} // namespace bruhat_detail

// splits every letter into absorbable atoms; multi-term payloads split by
// (R1) in ascending exponent order
template <class D>
std::vector<atom<D>> rewrite_word(const typename D::ring_type* ring, int n,
                                  const group_word<D>& word) {
    std::vector<atom<D>> out;
    auto push_x_poly = [&](int i, int j, const tpoly<D>& p) {
        for (const auto& [m, c] : p.terms()) {
            affine_root r(i, j, m);
            D coeff = r.beta.positive() ? c : c.tau(-m);
            bruhat_detail::push_x_at<D>(out, r, coeff, n);
        }
    };
    auto push_w_poly = [&](int i, int j, const tpoly<D>& p) {
        if (!p.is_unit()) throw domain_error("rewrite_word: w payload must be a unit");
        int i2 = i, j2 = j;
        tpoly<D> q = p;
        if (i2 > j2) { // w_{ij}(u) = w_{ji}(-u^-1)
            std::swap(i2, j2);
            q = -q.inverse();
        }
        int m = q.min_exp();
        affine_root r(i2, j2, m);
        D coeff = q.coeff(m);
        if (!r.positive()) { // level < 0: move to the opposite root
            r = -r;
            tpoly<D> qi = -q.inverse();
            coeff = affine_coeff_of<D>(r, qi);
        }
        bruhat_detail::push_w_at<D>(out, r, coeff, n);
    };
    for (const auto& L : word) {
        switch (L.kind) {
        case letter_kind::x:
            push_x_poly(L.i, L.j, L.exp > 0 ? L.payload : -L.payload);
            break;
        case letter_kind::w:
            push_w_poly(L.i, L.j, L.exp > 0 ? L.payload : -L.payload);
            break;
        case letter_kind::h:
            // h_ij(u) = w_ij(u) w_ij(-1); inverse: w_ij(1) w_ij(-u)
            if (L.exp > 0) {
                push_w_poly(L.i, L.j, L.payload);
                push_w_poly(L.i, L.j, -tpoly<D>::one(ring));
            } else {
                push_w_poly(L.i, L.j, tpoly<D>::one(ring));
                push_w_poly(L.i, L.j, -L.payload);
            }
            break;
        }
    }
    return out;
}

template <class D>
void absorb_atom_right(factorization<D>& fac, const atom<D>& a) {
    if (a.is_w) {
        absorb_w_right<D>(fac, a.root, a.coeff);
    } else {
        letter<D> L = letter<D>::make_x(a.root, a.coeff);
        absorb_x_right<D>(fac, L);
        fac.origin.push_back(L);
        if (!in_U(fac.v_mat)) throw internal_error("absorb_atom_right: v left U");
    }
}

template <class D>
void absorb_atom_left(factorization<D>& fac, const atom<D>& a) {
    if (a.is_w) {
        absorb_w_left<D>(fac, a.root, a.coeff);
    } else {
        letter<D> L = letter<D>::make_x(a.root, a.coeff);
        absorb_x_left<D>(fac, L);
        fac.origin.insert(fac.origin.begin(), L);
        if (!in_U(fac.u_mat)) throw internal_error("absorb_atom_left: u left U");
    }
}

// left-to-right factorization
template <class D>
factorization<D> factorize(const typename D::ring_type* ring, int n, const group_word<D>& word) {
    factorization<D> fac(ring, n);
    for (const auto& a : rewrite_word<D>(ring, n, word)) absorb_atom_right<D>(fac, a);
    fac.origin = word;
    if (fac.total() != word_matrix<D>(ring, n, word))
        throw internal_error("factorize: result does not reproduce the word");
    return fac;
}

// right-to-left letter absorption; an independent route to the same monomial
template <class D>
factorization<D> factorize_rtl(const typename D::ring_type* ring, int n,
                               const group_word<D>& word) {
    factorization<D> fac(ring, n);
    auto atoms = rewrite_word<D>(ring, n, word);
    for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) absorb_atom_left<D>(fac, *it);
    fac.origin = word;
    if (fac.total() != word_matrix<D>(ring, n, word))
        throw internal_error("factorize_rtl: result does not reproduce the word");
    return fac;
}

template <class D>
void refactor_from_origin(factorization<D>& fac) {
    group_word<D> word = fac.origin;
    long count = fac.refactor_count + 1;
    fac = factorize<D>(fac.ring, fac.n, word);
    fac.refactor_count = count;
}

template <class D>
monomial_matrix<D> rho(const typename D::ring_type* ring, int n, const group_word<D>& word) {
    return factorize<D>(ring, n, word).w;
}

// Lemma 2.12 steps: left multiplies by w_a(1), right by w_b(-1)
template <class D>
step_result<D> rho_step(factorization<D>& fac, const affine_root& a, coset_side side) {
    if (side == coset_side::left) return absorb_w_left<D>(fac, a, fac.ring->one());
    return absorb_w_right<D>(fac, a, -fac.ring->one());
}

} // namespace twl

#endif
