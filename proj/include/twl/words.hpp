#ifndef TWL_WORDS_HPP
#define TWL_WORDS_HPP

#include <sstream>
#include <string>
#include <vector>

#include "twl/linear.hpp"

// Free words over the elementary-group alphabet: letters x/w/h with index
// pair and a D_tau payload, plus a formal exponent.  No rewriting is
// implicit; matrix() is the evaluation homomorphism.

namespace twl {

enum class letter_kind { x, w, h };

template <class D>
struct letter {
    letter_kind kind;
    int i, j;
    tpoly<D> payload;
    int exp; // +1 or -1

    static letter make_x(int i, int j, tpoly<D> p, int e = 1) {
        return letter{letter_kind::x, i, j, std::move(p), e};
    }
    static letter make_x(const affine_root& r, const D& f, int e = 1) {
        return letter{letter_kind::x, r.beta.i, r.beta.j, affine_payload<D>(r, f), e};
    }
    static letter make_w(int i, int j, tpoly<D> p, int e = 1) {
        return letter{letter_kind::w, i, j, std::move(p), e};
    }
    static letter make_w(const affine_root& r, const D& s, int e = 1) {
        return letter{letter_kind::w, r.beta.i, r.beta.j, affine_payload<D>(r, s), e};
    }
    static letter make_h(int i, int j, tpoly<D> p, int e = 1) {
        return letter{letter_kind::h, i, j, std::move(p), e};
    }
    static letter make_h(const affine_root& r, const D& s, int e = 1) {
        return letter{letter_kind::h, r.beta.i, r.beta.j, affine_payload<D>(r, s), e};
    }

    std::string str() const {
        std::ostringstream os;
        switch (kind) {
        case letter_kind::x: os << "x"; break;
        case letter_kind::w: os << "w"; break;
        case letter_kind::h: os << "h"; break;
        }
        os << "[" << i << "," << j << "](" << payload.str() << ")";
        if (exp < 0) os << "^-1";
        return os.str();
    }
};

template <class D>
using group_word = std::vector<letter<D>>;

template <class D>
matrix<D> letter_matrix(const typename D::ring_type* ring, int n, const letter<D>& L) {
    switch (L.kind) {
    case letter_kind::x:
        return gen_x<D>(ring, n, L.i, L.j, L.exp > 0 ? L.payload : -L.payload);
    case letter_kind::w:
        return gen_w<D>(ring, n, L.i, L.j, L.exp > 0 ? L.payload : -L.payload);
    case letter_kind::h: {
        matrix<D> h = gen_h<D>(ring, n, L.i, L.j, L.payload);
        if (L.exp > 0) return h;
        return monomial_parts(h).inverse().to_matrix();
    }
    }
    throw internal_error("letter_matrix: bad kind");
}

template <class D>
matrix<D> word_matrix(const typename D::ring_type* ring, int n, const group_word<D>& w) {
    matrix<D> m = matrix<D>::identity(ring, n);
    for (const auto& L : w) m = m * letter_matrix<D>(ring, n, L);
    return m;
}

template <class D>
group_word<D> word_inverse(const group_word<D>& w) {
    group_word<D> out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        letter<D> L = *it;
        L.exp = -L.exp;
        out.push_back(std::move(L));
    }
    return out;
}

template <class D>
std::string word_str(const group_word<D>& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& L : w) {
        if (!first) os << "*";
        os << L.str();
        first = false;
    }
    return os.str();
}

template <class D>
group_word<D> concat(group_word<D> a, const group_word<D>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

} // namespace twl

#endif
