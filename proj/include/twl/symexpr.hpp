#ifndef TWL_SYMEXPR_HPP
#define TWL_SYMEXPR_HPP

#include <memory>
#include <optional>

#include "twl/symbols.hpp"

// Shared immutable expression DAG over formal symbol words.  The H~ / N~
// bookkeeping multiplies, inverts and conjugates xi-parts constantly; a flat
// letter list makes stacked Weyl conjugations quadratic-to-exponential.  A
// node caches the quotient certificates (phi-image, tame value) so concat,
// inverse and ^x-conjugation are O(1); the letter list is only materialized
// for display or for elementary-word fallbacks.

namespace twl {

template <class D>
struct sym_cert {
    tunit<D> image;
    std::optional<D> tame;

    friend bool operator==(const sym_cert& a, const sym_cert& b) {
        if (a.image != b.image) return false;
        if (a.tame.has_value() != b.tame.has_value()) return false;
        return !a.tame.has_value() || *a.tame == *b.tame;
    }
    friend bool operator!=(const sym_cert& a, const sym_cert& b) { return !(a == b); }
};

template <class D>
sym_cert<D> sym_cert_of(const typename D::ring_type* ring, const symbol_word<D>& w) {
    sym_cert<D> c{symbol_image(ring, w), std::nullopt};
    if (supports_tame(*ring)) c.tame = tame_value(ring, w);
    return c;
}

template <class D>
class sym_handle {
    enum class node_kind { empty, letter, concat, inverse, conj };

    struct node {
        node_kind kind;
        std::shared_ptr<const node> a, b;
        std::optional<symbol_letter<D>> L;
        std::optional<tunit<D>> conj_by;
        sym_cert<D> cert;
        long size;
    };

    explicit sym_handle(std::shared_ptr<const node> n, presentation tag)
        : node_(std::move(n)), tag_(tag) {}

public:
    using ring_type = typename D::ring_type;

    sym_handle(const ring_type* ring, presentation tag) : tag_(tag) {
        sym_cert<D> c{tunit<D>(ring->one(), 0), std::nullopt};
        if (supports_tame(*ring)) c.tame = ring->one();
        node_ = std::make_shared<node>(
            node{node_kind::empty, nullptr, nullptr, std::nullopt, std::nullopt, c, 0});
    }

    static sym_handle from_word(const ring_type* ring, const symbol_word<D>& w) {
        sym_handle h(ring, w.tag());
        for (const auto& L : w.letters()) h = h.append_letter(ring, L);
        return h;
    }

    presentation tag() const { return tag_; }
    const sym_cert<D>& cert() const { return node_->cert; }
    const tunit<D>& image() const { return node_->cert.image; }
    long size() const { return node_->size; }
    bool trivial_image() const {
        return node_->cert.image.degree() == 0 && node_->cert.image.leading().is_one();
    }

    sym_handle append_letter(const ring_type* ring, const symbol_letter<D>& L) const {
        tunit<D> c = commutator(L.u, L.v);
        sym_cert<D> lc{L.exp > 0 ? c : c.inverse(), std::nullopt};
        if (supports_tame(*ring)) {
            D t = tame_symbol(L.u, L.v);
            lc.tame = L.exp > 0 ? t : t.inverse();
        }
        auto ln = std::make_shared<node>(
            node{node_kind::letter, nullptr, nullptr, L, std::nullopt, lc, 1});
        return combine(node_, ln);
    }
    sym_handle append_letter(const ring_type* ring, const tunit<D>& u, const tunit<D>& v,
                             int exp = 1) const {
        return append_letter(ring, symbol_letter<D>{u, v, exp});
    }

    sym_handle operator*(const sym_handle& o) const { return combine(node_, o.node_); }

    sym_handle inverse() const {
        sym_cert<D> c{node_->cert.image.inverse(), std::nullopt};
        if (node_->cert.tame) c.tame = node_->cert.tame->inverse();
        return sym_handle(std::make_shared<node>(node{node_kind::inverse, node_, nullptr,
                                                      std::nullopt, std::nullopt, c,
                                                      node_->size}),
                          tag_);
    }

    // ^x: conjugate every letter argument by the unit x
    sym_handle conj(const tunit<D>& x) const {
        if (node_->size == 0) return *this;
        sym_cert<D> c{x * node_->cert.image * x.inverse(), node_->cert.tame};
        // tame lives in the commutative specialization where ^x is trivial
        return sym_handle(std::make_shared<node>(node{node_kind::conj, node_, nullptr,
                                                      std::nullopt, x, c, node_->size}),
                          tag_);
    }

    symbol_word<D> materialize(long cap = 4000000) const {
        if (node_->size > cap) throw internal_error("sym_handle: materialize over cap");
        symbol_word<D> out(tag_);
        walk(node_, std::nullopt, false, out);
        return out;
    }

    std::string str() const { return materialize().str(); }

private:
    sym_handle combine(std::shared_ptr<const node> a, std::shared_ptr<const node> b) const {
        if (a->size == 0) return sym_handle(b, tag_);
        if (b->size == 0) return sym_handle(a, tag_);
        sym_cert<D> c{a->cert.image * b->cert.image, std::nullopt};
        if (a->cert.tame && b->cert.tame) c.tame = *a->cert.tame * *b->cert.tame;
        return sym_handle(std::make_shared<node>(node{node_kind::concat, a, b, std::nullopt,
                                                      std::nullopt, c, a->size + b->size}),
                          tag_);
    }

    static void walk(const std::shared_ptr<const node>& n, std::optional<tunit<D>> conj_by,
                     bool inverted, symbol_word<D>& out) {
        switch (n->kind) {
        case node_kind::empty: return;
        case node_kind::letter: {
            symbol_letter<D> L = *n->L;
            if (conj_by) {
                L.u = conj_unit(*conj_by, L.u);
                L.v = conj_unit(*conj_by, L.v);
            }
            if (inverted) L.exp = -L.exp;
            out.append(L);
            return;
        }
        case node_kind::concat:
            if (inverted) {
                walk(n->b, conj_by, true, out);
                walk(n->a, conj_by, true, out);
            } else {
                walk(n->a, conj_by, false, out);
                walk(n->b, conj_by, false, out);
            }
            return;
        case node_kind::inverse: walk(n->a, conj_by, !inverted, out); return;
        case node_kind::conj: {
            std::optional<tunit<D>> next =
                conj_by ? std::optional<tunit<D>>(*conj_by * *n->conj_by) : n->conj_by;
            walk(n->a, next, inverted, out);
            return;
        }
        }
    }

    std::shared_ptr<const node> node_;
    presentation tag_;
};

} // namespace twl

#endif
