#ifndef TWL_TPOLY_HPP
#define TWL_TPOLY_HPP

#include <map>
#include <sstream>
#include <string>

#include "twl/errors.hpp"
#include "twl/ring.hpp"

// Twisted Laurent polynomials D_tau = D[t,t^-1] with t*a = tau(a)*t.
// Stored in left-normal form: sum of c_m t^m with coefficients on the left.
// The conversion t^m f = tau^m(f) t^m is applied at construction, so equality
// is structural comparison of the term maps.

namespace twl {

template <class D>
class tpoly {
public:
    using scalar = D;
    using ring_type = typename D::ring_type;

    explicit tpoly(const ring_type* ring) : ring_(ring) {}
    tpoly(const ring_type* ring, std::map<int, D> terms) : ring_(ring), terms_(std::move(terms)) {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second.ring() != ring_) throw config_error("tpoly: mixed ring coefficients");
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
        }
    }

    static tpoly zero(const ring_type* ring) { return tpoly(ring); }
    static tpoly one(const ring_type* ring) { return term(ring->one(), 0); }
    // c * t^m
    static tpoly term(const D& c, int m) {
        tpoly r(c.ring());
        if (!c.is_zero()) r.terms_.emplace(m, c);
        return r;
    }
    // t^m * c, converted to left-normal form
    static tpoly term_right(int m, const D& c) { return term(c.tau(m), m); }
    static tpoly t_power(const ring_type* ring, int m) { return term(ring->one(), m); }

    const ring_type* ring() const { return ring_; }
    const std::map<int, D>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one(); }

    // coefficient of t^m in left-normal form
    D coeff(int m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? ring_->zero() : it->second;
    }
    // f restricted to the coefficient written on the right of t^m: t^m c
    D coeff_right(int m) const { return coeff(m).tau(-m); }

    friend bool operator==(const tpoly& a, const tpoly& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const tpoly& a, const tpoly& b) { return !(a == b); }

    tpoly operator+(const tpoly& o) const {
        check(o);
        tpoly r = *this;
        for (const auto& [m, c] : o.terms_) {
            auto it = r.terms_.find(m);
            if (it == r.terms_.end())
                r.terms_.emplace(m, c);
            else {
                it->second = it->second + c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        return r;
    }
    tpoly operator-() const {
        tpoly r(ring_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    tpoly operator-(const tpoly& o) const { return *this + (-o); }

    // (a t^m)(b t^n) = a tau^m(b) t^{m+n}
    tpoly operator*(const tpoly& o) const {
        check(o);
        tpoly r(ring_);
        for (const auto& [m, a] : terms_)
            for (const auto& [n, b] : o.terms_) {
                D c = a * b.tau(m);
                if (c.is_zero()) continue;
                auto it = r.terms_.find(m + n);
                if (it == r.terms_.end())
                    r.terms_.emplace(m + n, c);
                else {
                    it->second = it->second + c;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        return r;
    }

    // units of D_tau are exactly the single terms s t^k
    bool is_unit() const { return terms_.size() == 1; }

    tpoly inverse() const {
        if (!is_unit()) throw domain_error("tpoly: not a unit");
        const auto& [k, s] = *terms_.begin();
        return term(s.inverse().tau(-k), -k);
    }

    int min_exp() const {
        if (is_zero()) throw domain_error("tpoly: zero has no exponents");
        return terms_.begin()->first;
    }
    int max_exp() const {
        if (is_zero()) throw domain_error("tpoly: zero has no exponents");
        return terms_.rbegin()->first;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << "+";
            std::string cs = c.str();
            if (m == 0) {
                os << cs;
            } else {
                if (c.is_one()) {
                    os << "t";
                } else {
                    if (cs.find_first_of("+-*/^") != std::string::npos)
                        os << "(" << cs << ")*t";
                    else
                        os << cs << "*t";
                }
                if (m != 1) os << "^" << m;
            }
            first = false;
        }
        return os.str();
    }

private:
    void check(const tpoly& o) const {
        if (o.ring_ != ring_) throw config_error("tpoly: mixed ring operands");
    }

    const ring_type* ring_;
    std::map<int, D> terms_;
};

// A unit s t^k of D_tau, kept in split form.
template <class D>
class tunit {
public:
    using ring_type = typename D::ring_type;

    tunit(D s, int k) : s_(std::move(s)), k_(k) {
        if (s_.is_zero()) throw domain_error("tunit: zero coefficient");
    }
    explicit tunit(const tpoly<D>& p) {
        if (!p.is_unit()) throw domain_error("tunit: polynomial is not a unit");
        k_ = p.min_exp();
        s_ = p.coeff(k_);
    }

    const ring_type* ring() const { return s_.ring(); }
    const D& leading() const { return s_; }
    int degree() const { return k_; }

    tpoly<D> poly() const { return tpoly<D>::term(s_, k_); }

    friend bool operator==(const tunit& a, const tunit& b) { return a.k_ == b.k_ && a.s_ == b.s_; }
    friend bool operator!=(const tunit& a, const tunit& b) { return !(a == b); }

    // (s t^k)(s' t^k') = s tau^k(s') t^{k+k'}
    tunit operator*(const tunit& o) const { return tunit(s_ * o.s_.tau(k_), k_ + o.k_); }
    // (s t^k)^-1 = tau^{-k}(s^-1) t^{-k}
    tunit inverse() const { return tunit(s_.inverse().tau(-k_), -k_); }
    tunit operator-() const { return tunit(-s_, k_); }

    std::string str() const { return poly().str(); }

private:
    D s_;
    int k_;
};

// spec op names
template <class D>
tpoly<D> tl_mul(const tpoly<D>& f, const tpoly<D>& g) {
    return f * g;
}
template <class D>
tunit<D> tl_unit_inverse(const tunit<D>& u) {
    return u.inverse();
}
template <class D>
int tl_degree(const tunit<D>& u) {
    return u.degree();
}
template <class D>
int tl_degree(const tpoly<D>& u) {
    if (!u.is_unit()) throw domain_error("tl_degree: not a unit");
    return u.min_exp();
}

// commutator [u,v] = u v u^-1 v^-1
template <class D>
tunit<D> commutator(const tunit<D>& u, const tunit<D>& v) {
    return u * v * u.inverse() * v.inverse();
}

// ^u v = u v u^-1
template <class D>
tunit<D> conj_unit(const tunit<D>& u, const tunit<D>& v) {
    return u * v * u.inverse();
}

} // namespace twl

#endif
