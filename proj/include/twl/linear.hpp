#ifndef TWL_LINEAR_HPP
#define TWL_LINEAR_HPP

#include <sstream>
#include <string>
#include <vector>

#include "twl/errors.hpp"
#include "twl/roots.hpp"
#include "twl/tpoly.hpp"

// Matrices over D_tau, the generator matrices x/w/h, monomial matrices, and
// the desk-scale membership predicates for U and B.

namespace twl {

template <class D>
class matrix {
public:
    using ring_type = typename D::ring_type;

    matrix(const ring_type* ring, int n)
        : ring_(ring), n_(n), a_(static_cast<std::size_t>(n) * n, tpoly<D>::zero(ring)) {
        if (n < 1) throw domain_error("matrix: size must be positive");
    }

    static matrix identity(const ring_type* ring, int n) {
        matrix m(ring, n);
        for (int i = 1; i <= n; ++i) m.at(i, i) = tpoly<D>::one(ring);
        return m;
    }

    const ring_type* ring() const { return ring_; }
    int n() const { return n_; }

    tpoly<D>& at(int i, int j) { return a_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)]; }
    const tpoly<D>& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
    }

    friend bool operator==(const matrix& x, const matrix& y) {
        return x.n_ == y.n_ && x.ring_ == y.ring_ && x.a_ == y.a_;
    }
    friend bool operator!=(const matrix& x, const matrix& y) { return !(x == y); }

    matrix operator*(const matrix& o) const {
        if (o.n_ != n_ || o.ring_ != ring_) throw config_error("matrix: incompatible product");
        matrix r(ring_, n_);
        for (int i = 1; i <= n_; ++i)
            for (int k = 1; k <= n_; ++k) {
                const tpoly<D>& x = at(i, k);
                if (x.is_zero()) continue;
                for (int j = 1; j <= n_; ++j) {
                    if (o.at(k, j).is_zero()) continue;
                    r.at(i, j) = r.at(i, j) + x * o.at(k, j);
                }
            }
        return r;
    }

    bool is_identity() const {
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) {
                if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
            }
        return true;
    }

    std::string str() const {
        std::ostringstream os;
        for (int i = 1; i <= n_; ++i) {
            os << "[";
            for (int j = 1; j <= n_; ++j) {
                if (j > 1) os << ", ";
                os << at(i, j).str();
            }
            os << "]";
            if (i < n_) os << "\n";
        }
        return os.str();
    }

private:
    const ring_type* ring_;
    int n_;
    std::vector<tpoly<D>> a_;
};

// ---------------------------------------------------------------------------
// generators

// x_ij(g) = I + g E_ij
template <class D>
matrix<D> gen_x(const typename D::ring_type* ring, int n, int i, int j, const tpoly<D>& g) {
    if (i == j || i < 1 || j < 1 || i > n || j > n) throw domain_error("gen_x: bad indices");
    matrix<D> m = matrix<D>::identity(ring, n);
    m.at(i, j) = g;
    return m;
}

// payload polynomial of the affine generator x_{(beta,m)}(f):
// f t^m if beta positive, t^m f if beta negative
template <class D>
tpoly<D> affine_payload(const affine_root& r, const D& f) {
    return r.beta.positive() ? tpoly<D>::term(f, r.level) : tpoly<D>::term_right(r.level, f);
}

// reads the affine coefficient back from a one-term payload at level m
template <class D>
D affine_coeff_of(const affine_root& r, const tpoly<D>& payload) {
    if (payload.is_zero()) return payload.ring()->zero();
    if (!payload.is_unit() || payload.min_exp() != r.level)
        throw domain_error("affine_coeff_of: payload does not sit at the root level");
    return r.beta.positive() ? payload.coeff(r.level) : payload.coeff_right(r.level);
}

template <class D>
matrix<D> gen_x(const typename D::ring_type* ring, int n, const affine_root& r, const D& f) {
    return gen_x<D>(ring, n, r.beta.i, r.beta.j, affine_payload<D>(r, f));
}

// w_ij(u) = x_ij(u) x_ji(-u^-1) x_ij(u); u a unit of D_tau
template <class D>
matrix<D> gen_w(const typename D::ring_type* ring, int n, int i, int j, const tpoly<D>& u) {
    if (!u.is_unit()) throw domain_error("gen_w: payload must be a unit");
    matrix<D> a = gen_x<D>(ring, n, i, j, u);
    matrix<D> b = gen_x<D>(ring, n, j, i, -u.inverse());
    return a * b * a;
}

// h_ij(u) = w_ij(u) w_ij(-1)
template <class D>
matrix<D> gen_h(const typename D::ring_type* ring, int n, int i, int j, const tpoly<D>& u) {
    tpoly<D> minus_one = -tpoly<D>::one(ring);
    return gen_w<D>(ring, n, i, j, u) * gen_w<D>(ring, n, i, j, minus_one);
}

// affine forms: w_{(beta,m)}(s) and h_{(beta,m)}(s) = w_{(beta,m)}(s) w_beta(-1)
template <class D>
matrix<D> gen_w(const typename D::ring_type* ring, int n, const affine_root& r, const D& s) {
    if (s.is_zero()) throw domain_error("gen_w: zero payload");
    return gen_w<D>(ring, n, r.beta.i, r.beta.j, affine_payload<D>(r, s));
}

template <class D>
matrix<D> gen_h(const typename D::ring_type* ring, int n, const affine_root& r, const D& s) {
    tpoly<D> minus_one = -tpoly<D>::one(ring);
    return gen_w<D>(ring, n, r, s) * gen_w<D>(ring, n, r.beta.i, r.beta.j, minus_one);
}

// ---------------------------------------------------------------------------
// monomial matrices w = P_sigma diag(u_1,...,u_n); entry (sigma(i), i) = u_i

template <class D>
struct monomial_matrix {
    using ring_type = typename D::ring_type;

    const ring_type* ring;
    int n;
    std::vector<int> sigma;    // sigma[i] for i in 1..n; slot 0 unused
    std::vector<tunit<D>> units; // units[i-1] = u_i

    static monomial_matrix identity(const ring_type* ring, int n) {
        monomial_matrix m{ring, n, std::vector<int>(static_cast<std::size_t>(n) + 1), {}};
        for (int i = 0; i <= n; ++i) m.sigma[static_cast<std::size_t>(i)] = i;
        for (int i = 0; i < n; ++i) m.units.emplace_back(ring->one(), 0);
        return m;
    }

    const tunit<D>& unit(int i) const { return units[static_cast<std::size_t>(i - 1)]; }

    bool is_diagonal() const {
        for (int i = 1; i <= n; ++i)
            if (sigma[static_cast<std::size_t>(i)] != i) return false;
        return true;
    }

    matrix<D> to_matrix() const {
        matrix<D> m(ring, n);
        for (int i = 1; i <= n; ++i)
            m.at(sigma[static_cast<std::size_t>(i)], i) = unit(i).poly();
        return m;
    }

    friend bool operator==(const monomial_matrix& a, const monomial_matrix& b) {
        return a.n == b.n && a.sigma == b.sigma && a.units == b.units;
    }
    friend bool operator!=(const monomial_matrix& a, const monomial_matrix& b) {
        return !(a == b);
    }

    monomial_matrix operator*(const monomial_matrix& o) const {
        if (o.n != n || o.ring != ring) throw config_error("monomial: incompatible product");
        monomial_matrix r{ring, n, std::vector<int>(static_cast<std::size_t>(n) + 1), {}};
        r.sigma[0] = 0;
        for (int i = 1; i <= n; ++i)
            r.sigma[static_cast<std::size_t>(i)] =
                sigma[static_cast<std::size_t>(o.sigma[static_cast<std::size_t>(i)])];
        for (int i = 1; i <= n; ++i)
            r.units.push_back(unit(o.sigma[static_cast<std::size_t>(i)]) * o.unit(i));
        return r;
    }

    monomial_matrix inverse() const {
        monomial_matrix r{ring, n, std::vector<int>(static_cast<std::size_t>(n) + 1), {}};
        r.sigma[0] = 0;
        std::vector<int> inv_sigma(static_cast<std::size_t>(n) + 1);
        for (int i = 1; i <= n; ++i) inv_sigma[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = i;
        for (int i = 1; i <= n; ++i) r.sigma[static_cast<std::size_t>(i)] = inv_sigma[static_cast<std::size_t>(i)];
        for (int i = 1; i <= n; ++i) r.units.push_back(unit(inv_sigma[static_cast<std::size_t>(i)]).inverse());
        return r;
    }

    // d_w = deg(u_1^-1 u_2); n = 2 bookkeeping for the double-coset tables
    int d() const {
        if (n != 2) throw domain_error("monomial: d_w defined for n = 2");
        return (unit(1).inverse() * unit(2)).degree();
    }

    std::string str() const {
        std::ostringstream os;
        os << "sigma=(";
        for (int i = 1; i <= n; ++i) {
            if (i > 1) os << " ";
            os << sigma[static_cast<std::size_t>(i)];
        }
        os << "); units=(";
        for (int i = 1; i <= n; ++i) {
            if (i > 1) os << ", ";
            os << unit(i).str();
        }
        os << ")";
        return os.str();
    }
};

// extracts (sigma, u_1..u_n) from a monomial matrix
template <class D>
monomial_matrix<D> monomial_parts(const matrix<D>& m) {
    int n = m.n();
    monomial_matrix<D> out{m.ring(), n, std::vector<int>(static_cast<std::size_t>(n) + 1, 0), {}};
    std::vector<bool> row_used(static_cast<std::size_t>(n) + 1, false);
    for (int col = 1; col <= n; ++col) {
        int row = 0;
        for (int r = 1; r <= n; ++r) {
            if (!m.at(r, col).is_zero()) {
                if (row) throw domain_error("monomial_parts: two entries in a column");
                row = r;
            }
        }
        if (!row) throw domain_error("monomial_parts: zero column");
        if (row_used[static_cast<std::size_t>(row)])
            throw domain_error("monomial_parts: two entries in a row");
        row_used[static_cast<std::size_t>(row)] = true;
        if (!m.at(row, col).is_unit()) throw domain_error("monomial_parts: entry is not a unit");
        out.sigma[static_cast<std::size_t>(col)] = row;
        out.units.emplace_back(m.at(row, col));
    }
    return out;
}

template <class D>
bool is_monomial(const matrix<D>& m) {
    try {
        monomial_parts(m);
        return true;
    } catch (const domain_error&) {
        return false;
    }
}

// ---------------------------------------------------------------------------
// membership predicates (desk-scale characterizations, validated by tests):
// in_U: entries lie in D[t] and the matrix mod t is upper unitriangular.
// in_B: entries lie in D[t] and the matrix mod t is upper triangular with
// invertible diagonal (T_0 part allowed).

template <class D>
bool in_U(const matrix<D>& m) {
    int n = m.n();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const tpoly<D>& e = m.at(i, j);
            if (!e.is_zero() && e.min_exp() < 0) return false;
            D c0 = e.coeff(0);
            if (i == j && !c0.is_one()) return false;
            if (i > j && !c0.is_zero()) return false;
        }
    return true;
}

template <class D>
bool in_B(const matrix<D>& m) {
    int n = m.n();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const tpoly<D>& e = m.at(i, j);
            if (!e.is_zero() && e.min_exp() < 0) return false;
            D c0 = e.coeff(0);
            if (i == j && c0.is_zero()) return false;
            if (i > j && !c0.is_zero()) return false;
        }
    return true;
}

} // namespace twl

#endif
