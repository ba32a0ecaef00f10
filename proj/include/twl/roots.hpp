#ifndef TWL_ROOTS_HPP
#define TWL_ROOTS_HPP

#include <sstream>
#include <string>
#include <vector>

#include "twl/errors.hpp"

// Root system of type A_{n-1} with roots eps_i - eps_j kept as index pairs,
// and the affine system Delta_a = Delta x Z.

namespace twl {

struct finite_root {
    int i, j; // 1-based, i != j; beta = eps_i - eps_j

    finite_root(int i_, int j_) : i(i_), j(j_) {
        if (i < 1 || j < 1 || i == j) throw domain_error("finite_root: need 1 <= i != j");
    }

    bool positive() const { return i < j; }
    finite_root operator-() const { return finite_root(j, i); }

    friend bool operator==(const finite_root& a, const finite_root& b) {
        return a.i == b.i && a.j == b.j;
    }
    friend bool operator!=(const finite_root& a, const finite_root& b) { return !(a == b); }

    // height in the simple-root basis: j - i for positive, -(i - j) for negative
    int height() const { return j - i; }
};

struct affine_root {
    finite_root beta;
    int level; // m in (beta, m)

    affine_root(finite_root b, int m) : beta(b), level(m) {}
    affine_root(int i, int j, int m) : beta(i, j), level(m) {}

    bool positive() const {
        return (beta.positive() && level >= 0) || (!beta.positive() && level > 0);
    }
    affine_root operator-() const { return affine_root(-beta, -level); }

    friend bool operator==(const affine_root& a, const affine_root& b) {
        return a.beta == b.beta && a.level == b.level;
    }
    friend bool operator!=(const affine_root& a, const affine_root& b) { return !(a == b); }

    // coefficient sum over the affine simple basis; >= 1 on positive roots
    int affine_height(int n) const { return beta.height() + level * n; }

    std::string str() const {
        std::ostringstream os;
        os << "a[" << beta.i << "," << beta.j << "," << level << "]";
        return os.str();
    }
};

// <gamma, beta> = 2(gamma,beta)/(beta,beta); for type A this is the plain
// inner product of the eps-differences.
inline int pairing(const finite_root& g, const finite_root& b) {
    int v = 0;
    v += (g.i == b.i) - (g.i == b.j) - (g.j == b.i) + (g.j == b.j);
    return v;
}
inline int pairing(const affine_root& g, const affine_root& b) { return pairing(g.beta, b.beta); }

// sigma_beta(gamma): swap the indices i, j of beta inside gamma
inline finite_root reflect(const finite_root& b, const finite_root& g) {
    auto swp = [&](int x) { return x == b.i ? b.j : x == b.j ? b.i : x; };
    return finite_root(swp(g.i), swp(g.j));
}

// sigma_{(beta,m)}(gamma,l) = (sigma_beta(gamma), l - <gamma,beta> m)
inline affine_root affine_reflect(const affine_root& b, const affine_root& g) {
    return affine_root(reflect(b.beta, g.beta), g.level - pairing(g.beta, b.beta) * b.level);
}

// [a0, a1, ..., a_{n-1}] with a0 = (eps_n - eps_1, 1) and a_i = (eps_i - eps_{i+1}, 0)
inline std::vector<affine_root> simple_roots(int n) {
    if (n < 2) throw domain_error("simple_roots: need n >= 2");
    std::vector<affine_root> out;
    out.emplace_back(n, 1, 1);
    for (int i = 1; i < n; ++i) out.emplace_back(i, i + 1, 0);
    return out;
}

inline bool is_simple(const affine_root& r, int n) {
    if (r.beta.i == n && r.beta.j == 1 && r.level == 1) return true;
    return r.level == 0 && r.beta.j == r.beta.i + 1;
}

struct simple_reduction {
    // sigma_{word[0]} ... sigma_{word[r-1]} (target) = input root
    std::vector<affine_root> word;
    affine_root target;
};

// Greedy descent to a simple root: while positive and not simple, the
// smallest-index simple reflection with positive pairing strictly lowers the
// affine height and keeps the root positive; negative roots go through their
// opposite plus one extra reflection.  Self-verifying via recompose().
inline simple_reduction reduce_to_simple(affine_root r, int n) {
    if (!r.positive()) {
        // -r = w(target) gives r = w(sigma_target(target)): append one letter
        simple_reduction red = reduce_to_simple(-r, n);
        red.word.push_back(red.target);
        return red;
    }
    std::vector<affine_root> word;
    const std::vector<affine_root> simples = simple_roots(n);
    while (!is_simple(r, n)) {
        bool moved = false;
        for (const auto& a : simples) {
            if (pairing(r, a) > 0) {
                affine_root next = affine_reflect(a, r);
                if (next.positive() && next.affine_height(n) < r.affine_height(n)) {
                    word.push_back(a);
                    r = next;
                    moved = true;
                    break;
                }
            }
        }
        if (!moved) throw internal_error("reduce_to_simple: descent stalled");
    }
    return simple_reduction{std::move(word), r};
}

inline affine_root recompose(const simple_reduction& red) {
    affine_root r = red.target;
    for (auto it = red.word.rbegin(); it != red.word.rend(); ++it) r = affine_reflect(*it, r);
    return r;
}

} // namespace twl

#endif
