#ifndef TWL_ST_WORD_HPP
#define TWL_ST_WORD_HPP

#include <sstream>
#include <string>
#include <vector>

#include "twl/linear.hpp"

// Words in the Steinberg group St(n, D_tau).  A word is a free product of
// letters X_ij(g)^{+-1}; the only implicit rewriting is cancellation of an
// adjacent letter/inverse pair with identical payload.  Equality in St is
// never decided here: quotient certificates (phi-image, and torus-level
// normal forms from the extension machinery) are the testable shadow.

namespace twl {

template <class D>
struct st_letter {
    int i, j;
    tpoly<D> payload;
    int exp; // +1 or -1

    bool cancels(const st_letter& o) const {
        return i == o.i && j == o.j && exp == -o.exp && payload == o.payload;
    }

    std::string str() const {
        std::ostringstream os;
        os << "X[" << i << "," << j << "](" << payload.str() << ")";
        if (exp < 0) os << "^-1";
        return os.str();
    }
};

template <class D>
class st_word {
public:
    st_word() = default;

    void append(st_letter<D> L) {
        if (!letters_.empty() && letters_.back().cancels(L)) {
            letters_.pop_back();
            return;
        }
        letters_.push_back(std::move(L));
    }
    void append(const st_word& w) {
        for (const auto& L : w.letters_) append(L);
    }

    st_word operator*(const st_word& o) const {
        st_word r = *this;
        r.append(o);
        return r;
    }
    st_word inverse() const {
        st_word r;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
            st_letter<D> L = *it;
            L.exp = -L.exp;
            r.append(std::move(L));
        }
        return r;
    }

    const std::vector<st_letter<D>>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }

    std::string str() const {
        if (letters_.empty()) return "1";
        std::ostringstream os;
        bool first = true;
        for (const auto& L : letters_) {
            if (!first) os << "*";
            os << L.str();
            first = false;
        }
        return os.str();
    }

private:
    std::vector<st_letter<D>> letters_;
};

// phi(X_ij(f)) = x_ij(f); the canonical projection onto E(n, D_tau)
template <class D>
matrix<D> st_phi(const typename D::ring_type* ring, int n, const st_word<D>& w) {
    matrix<D> m = matrix<D>::identity(ring, n);
    for (const auto& L : w.letters())
        m = m * gen_x<D>(ring, n, L.i, L.j, L.exp > 0 ? L.payload : -L.payload);
    return m;
}

template <class D>
st_word<D> hat_x(int i, int j, tpoly<D> payload, int exp = 1) {
    st_word<D> w;
    w.append(st_letter<D>{i, j, std::move(payload), exp});
    return w;
}

template <class D>
st_word<D> hat_x(const affine_root& r, const D& f, int exp = 1) {
    return hat_x<D>(r.beta.i, r.beta.j, affine_payload<D>(r, f), exp);
}

// w^_ij(u) = X_ij(u) X_ji(-u^-1) X_ij(u)
template <class D>
st_word<D> hat_w(int i, int j, const tpoly<D>& u) {
    if (!u.is_unit()) throw domain_error("hat_w: payload must be a unit");
    st_word<D> w;
    w.append(st_letter<D>{i, j, u, 1});
    w.append(st_letter<D>{j, i, -u.inverse(), 1});
    w.append(st_letter<D>{i, j, u, 1});
    return w;
}

// h^_ij(u) = w^_ij(u) w^_ij(-1)
template <class D>
st_word<D> hat_h(int i, int j, const tpoly<D>& u) {
    const auto* ring = u.ring();
    return hat_w<D>(i, j, u) * hat_w<D>(i, j, -tpoly<D>::one(ring));
}

// c^_ij(u,v) = h^_ij(u) h^_ij(v) h^_ij(vu)^-1
template <class D>
st_word<D> hat_c(int i, int j, const tpoly<D>& u, const tpoly<D>& v) {
    return hat_h<D>(i, j, u) * hat_h<D>(i, j, v) * hat_h<D>(i, j, v * u).inverse();
}

template <class D>
st_word<D> hat_c(const tpoly<D>& u, const tpoly<D>& v) {
    return hat_c<D>(1, 2, u, v);
}

// ---------------------------------------------------------------------------
// torus words: formal products of h^_ij(u)^{+-1}, the shape of every word in
// the T/TT relation families.  They expand to st_words for the phi
// certificate and feed the H~ normal forms for the symbol-level certificate.

template <class D>
struct torus_letter {
    int i, j;
    tunit<D> u;
    int exp; // +1 or -1
};

template <class D>
using torus_word = std::vector<torus_letter<D>>;

template <class D>
torus_word<D> torus_h(int i, int j, const tunit<D>& u, int exp = 1) {
    return torus_word<D>{torus_letter<D>{i, j, u, exp}};
}

// c^_ij(u,v) as a torus word
template <class D>
torus_word<D> torus_c(int i, int j, const tunit<D>& u, const tunit<D>& v, int exp = 1) {
    torus_word<D> w;
    if (exp > 0) {
        w.push_back(torus_letter<D>{i, j, u, 1});
        w.push_back(torus_letter<D>{i, j, v, 1});
        w.push_back(torus_letter<D>{i, j, v * u, -1});
    } else {
        w.push_back(torus_letter<D>{i, j, v * u, 1});
        w.push_back(torus_letter<D>{i, j, v, -1});
        w.push_back(torus_letter<D>{i, j, u, -1});
    }
    return w;
}

template <class D>
torus_word<D> torus_concat(torus_word<D> a, const torus_word<D>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

template <class D>
torus_word<D> torus_inverse(const torus_word<D>& w) {
    torus_word<D> out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        torus_letter<D> L = *it;
        L.exp = -L.exp;
        out.push_back(std::move(L));
    }
    return out;
}

template <class D>
st_word<D> torus_to_st(const torus_word<D>& w) {
    st_word<D> out;
    for (const auto& L : w) {
        st_word<D> h = hat_h<D>(L.i, L.j, L.u.poly());
        out.append(L.exp > 0 ? h : h.inverse());
    }
    return out;
}

} // namespace twl

#endif
