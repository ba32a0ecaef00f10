#ifndef TWL_RING_HPP
#define TWL_RING_HPP

#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "twl/errors.hpp"
#include "twl/prng.hpp"

// Exact scalar arithmetic for the division rings D we ship: finite fields
// F_{p^k} with tau a Frobenius power, and rational quaternion algebras
// (a,b/Q) with tau an inner automorphism.  Every element carries a pointer
// to its (immutable) ring object; values are immutable after construction.

namespace twl {

using rat = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// finite field F_{p^k}, tau = Frobenius^tau_exp

class fq_field;

class fq_elem {
public:
    using ring_type = fq_field;

    fq_elem() : fld_(nullptr) {}
    fq_elem(const fq_field* fld, std::vector<std::uint64_t> c) : fld_(fld), c_(std::move(c)) {}

    const fq_field* ring() const { return fld_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    bool is_zero() const {
        for (auto v : c_)
            if (v) return false;
        return true;
    }
    bool is_one() const {
        if (c_.empty() || c_[0] != 1) return false;
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i]) return false;
        return true;
    }

    friend bool operator==(const fq_elem& a, const fq_elem& b) {
        return a.fld_ == b.fld_ && a.c_ == b.c_;
    }
    friend bool operator!=(const fq_elem& a, const fq_elem& b) { return !(a == b); }

    fq_elem operator+(const fq_elem& o) const;
    fq_elem operator-(const fq_elem& o) const;
    fq_elem operator-() const;
    fq_elem operator*(const fq_elem& o) const;
    fq_elem inverse() const;
    fq_elem tau(long j) const; // tau^j

    std::string str() const;

private:
    const fq_field* fld_;
    std::vector<std::uint64_t> c_; // length k, entries mod p
};

class fq_field {
public:
    fq_field(std::uint64_t p, unsigned k, long tau_exp)
        : p_(p), k_(k), tau_exp_(((tau_exp % static_cast<long>(k)) + k) % k) {
        if (p < 2 || !is_prime(p)) throw config_error("finite field: p must be prime");
        if (k == 0) throw config_error("finite field: k must be >= 1");
        modulus_ = find_modulus();
    }

    std::uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    long tau_exponent() const { return tau_exp_; }
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    bool commutative() const { return true; }
    bool tau_is_identity() const { return tau_exp_ == 0; }

    fq_elem zero() const { return fq_elem(this, std::vector<std::uint64_t>(k_, 0)); }
    fq_elem one() const { return from_int(1); }
    fq_elem from_int(long long v) const {
        std::vector<std::uint64_t> c(k_, 0);
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        c[0] = static_cast<std::uint64_t>(r);
        return fq_elem(this, std::move(c));
    }
    // residue class of x; the symbol `g` in literals
    fq_elem generator() const {
        if (k_ == 1) throw domain_error("fq: prime field has no generator symbol g");
        std::vector<std::uint64_t> c(k_, 0);
        c[1] = 1;
        return fq_elem(this, std::move(c));
    }

    fq_elem add(const fq_elem& a, const fq_elem& b) const {
        check(a, b);
        std::vector<std::uint64_t> c(k_);
        for (unsigned i = 0; i < k_; ++i) c[i] = (a.coeffs()[i] + b.coeffs()[i]) % p_;
        return fq_elem(this, std::move(c));
    }
    fq_elem neg(const fq_elem& a) const {
        check(a);
        std::vector<std::uint64_t> c(k_);
        for (unsigned i = 0; i < k_; ++i) c[i] = (p_ - a.coeffs()[i]) % p_;
        return fq_elem(this, std::move(c));
    }
    fq_elem mul(const fq_elem& a, const fq_elem& b) const {
        check(a, b);
        std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
        for (unsigned i = 0; i < k_; ++i) {
            if (!a.coeffs()[i]) continue;
            for (unsigned j = 0; j < k_; ++j)
                prod[i + j] = (prod[i + j] + a.coeffs()[i] * b.coeffs()[j]) % p_;
        }
        reduce(prod);
        prod.resize(k_);
        return fq_elem(this, std::move(prod));
    }
    fq_elem inv(const fq_elem& a) const {
        check(a);
        if (a.is_zero()) throw domain_error("fq: inverse of zero");
        // extended Euclid in F_p[x] against the modulus
        std::vector<std::uint64_t> r0 = full_modulus(), r1 = a.coeffs();
        trim(r1);
        std::vector<std::uint64_t> s0{}, s1{1};
        while (!r1.empty()) {
            auto [q, r] = poly_divmod(r0, r1);
            auto s = poly_sub(s0, poly_mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        // r0 = gcd = nonzero constant (modulus irreducible)
        std::uint64_t c = inv_mod_p(r0[0]);
        std::vector<std::uint64_t> out(k_, 0);
        for (std::size_t i = 0; i < s0.size() && i < k_; ++i) out[i] = (s0[i] * c) % p_;
        return fq_elem(this, std::move(out));
    }
    // tau^j(a) = a^{p^{(tau_exp*j) mod k}}
    fq_elem tau_pow(const fq_elem& a, long j) const {
        check(a);
        long e = static_cast<long>(((static_cast<long long>(tau_exp_) * j) % k_ + k_) % k_);
        fq_elem r = a;
        for (long i = 0; i < e; ++i) r = pow_u64(r, p_);
        return r;
    }

    fq_elem random(prng& rng) const {
        std::vector<std::uint64_t> c(k_);
        for (unsigned i = 0; i < k_; ++i) c[i] = rng.below(p_);
        return fq_elem(this, std::move(c));
    }
    fq_elem random_nonzero(prng& rng) const {
        for (;;) {
            fq_elem e = random(rng);
            if (!e.is_zero()) return e;
        }
    }

    std::string to_string(const fq_elem& a) const {
        check(a);
        std::ostringstream os;
        bool first = true;
        for (int i = static_cast<int>(k_) - 1; i >= 0; --i) {
            std::uint64_t c = a.coeffs()[static_cast<unsigned>(i)];
            if (!c) continue;
            if (!first) os << "+";
            if (i == 0)
                os << c;
            else {
                if (c != 1) os << c << "*";
                os << "g";
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

    std::string describe() const {
        std::ostringstream os;
        os << "finite_field p=" << p_ << " k=" << k_ << " tau_exponent=" << tau_exp_;
        return os.str();
    }

private:
    void check(const fq_elem& a) const {
        if (a.ring() != this) throw config_error("fq: element from a different ring");
    }
    void check(const fq_elem& a, const fq_elem& b) const {
        check(a);
        if (b.ring() != this) throw config_error("fq: mixed ring elements");
    }

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    std::uint64_t inv_mod_p(std::uint64_t a) const {
        // Fermat
        std::uint64_t r = 1, b = a % p_, e = p_ - 2;
        while (e) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return r;
    }

    fq_elem pow_u64(const fq_elem& a, std::uint64_t e) const {
        fq_elem r = one(), b = a;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    static void trim(std::vector<std::uint64_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    }

    std::vector<std::uint64_t> poly_mul(const std::vector<std::uint64_t>& a,
                                        const std::vector<std::uint64_t>& b) const {
        if (a.empty() || b.empty()) return {};
        std::vector<std::uint64_t> c(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p_;
        trim(c);
        return c;
    }
    std::vector<std::uint64_t> poly_sub(const std::vector<std::uint64_t>& a,
                                        const std::vector<std::uint64_t>& b) const {
        std::vector<std::uint64_t> c(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
            c[i] = (x + p_ - y) % p_;
        }
        trim(c);
        return c;
    }
    std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>
    poly_divmod(std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b) const {
        std::vector<std::uint64_t> q;
        if (b.empty()) throw internal_error("fq: division by zero polynomial");
        std::uint64_t lead_inv = inv_mod_p(b.back());
        if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
        while (a.size() >= b.size()) {
            std::uint64_t f = a.back() * lead_inv % p_;
            std::size_t shift = a.size() - b.size();
            q[shift] = f;
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = (a[shift + i] + p_ - f * b[i] % p_) % p_;
            trim(a);
        }
        trim(q);
        return {q, a};
    }

    std::vector<std::uint64_t> full_modulus() const {
        std::vector<std::uint64_t> m = modulus_;
        m.push_back(1);
        return m;
    }

    // x^{p^e} mod f, by repeated x^p
    std::vector<std::uint64_t> frob_x(const std::vector<std::uint64_t>& f, unsigned e) const {
        std::vector<std::uint64_t> x{0, 1};
        auto powmod = [&](std::vector<std::uint64_t> base, std::uint64_t exp) {
            std::vector<std::uint64_t> r{1};
            while (exp) {
                if (exp & 1) r = poly_divmod(poly_mul(r, base), f).second;
                base = poly_divmod(poly_mul(base, base), f).second;
                exp >>= 1;
            }
            return r;
        };
        std::vector<std::uint64_t> r = x;
        for (unsigned i = 0; i < e; ++i) r = powmod(r, p_);
        return r;
    }

    std::vector<std::uint64_t> poly_gcd(std::vector<std::uint64_t> a,
                                        std::vector<std::uint64_t> b) const {
        trim(a);
        trim(b);
        while (!b.empty()) {
            auto r = poly_divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    bool irreducible(const std::vector<std::uint64_t>& f) const {
        // f monic of degree k: irreducible iff x^{p^k} = x mod f and
        // gcd(x^{p^{k/q}} - x, f) = 1 for each prime q | k
        unsigned k = static_cast<unsigned>(f.size() - 1);
        std::vector<std::uint64_t> x{0, 1};
        if (poly_sub(frob_x(f, k), x) != std::vector<std::uint64_t>{}) return false;
        for (unsigned q = 2; q <= k; ++q) {
            if (k % q != 0) continue;
            bool qprime = true;
            for (unsigned d = 2; d * d <= q; ++d)
                if (q % d == 0) qprime = false;
            if (!qprime) continue;
            auto g = poly_gcd(poly_sub(frob_x(f, k / q), x), f);
            if (g.size() != 1) return false;
        }
        return true;
    }

    // deterministic: smallest coefficient vector, read as a base-p integer,
    // giving an irreducible monic polynomial of degree k
    std::vector<std::uint64_t> find_modulus() {
        if (k_ == 1) return {};
        std::uint64_t total = 1;
        for (unsigned i = 0; i < k_; ++i) {
            if (total > (1ULL << 40) / p_) throw config_error("finite field too large");
            total *= p_;
        }
        for (std::uint64_t v = 0; v < total; ++v) {
            std::vector<std::uint64_t> f(k_ + 1, 0);
            std::uint64_t t = v;
            for (unsigned i = 0; i < k_; ++i) {
                f[i] = t % p_;
                t /= p_;
            }
            f[k_] = 1;
            if (irreducible(f)) {
                f.pop_back();
                return f;
            }
        }
        throw internal_error("fq: no irreducible polynomial found");
    }

    void reduce(std::vector<std::uint64_t>& prod) const {
        // reduce degrees >= k using x^k = -modulus_
        for (std::size_t d = prod.size(); d-- > k_;) {
            std::uint64_t c = prod[d];
            if (!c) continue;
            prod[d] = 0;
            for (unsigned i = 0; i < k_; ++i)
                prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - modulus_[i] % p_) % p_ * c) % p_;
        }
        prod.resize(k_, 0);
    }

    std::uint64_t p_;
    unsigned k_;
    long tau_exp_;
    std::vector<std::uint64_t> modulus_; // lower k coefficients of the monic modulus
};

inline fq_elem fq_elem::operator+(const fq_elem& o) const { return fld_->add(*this, o); }
inline fq_elem fq_elem::operator-(const fq_elem& o) const { return fld_->add(*this, fld_->neg(o)); }
inline fq_elem fq_elem::operator-() const { return fld_->neg(*this); }
inline fq_elem fq_elem::operator*(const fq_elem& o) const { return fld_->mul(*this, o); }
inline fq_elem fq_elem::inverse() const { return fld_->inv(*this); }
inline fq_elem fq_elem::tau(long j) const { return fld_->tau_pow(*this, j); }
inline std::string fq_elem::str() const { return fld_->to_string(*this); }

// ---------------------------------------------------------------------------
// rational quaternion algebra (a,b / Q): i^2 = a, j^2 = b, ij = k = -ji.
// tau = conjugation by a fixed unit q0 (inner; every automorphism fixing the
// center is of this form).

class quat_algebra;

class quat_elem {
public:
    using ring_type = quat_algebra;

    quat_elem() : alg_(nullptr) {}
    quat_elem(const quat_algebra* alg, rat w, rat x, rat y, rat z)
        : alg_(alg), w_(std::move(w)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

    const quat_algebra* ring() const { return alg_; }
    const rat& w() const { return w_; }
    const rat& x() const { return x_; }
    const rat& y() const { return y_; }
    const rat& z() const { return z_; }

    bool is_zero() const { return w_ == 0 && x_ == 0 && y_ == 0 && z_ == 0; }
    bool is_one() const { return w_ == 1 && x_ == 0 && y_ == 0 && z_ == 0; }

    friend bool operator==(const quat_elem& a, const quat_elem& b) {
        return a.alg_ == b.alg_ && a.w_ == b.w_ && a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_;
    }
    friend bool operator!=(const quat_elem& a, const quat_elem& b) { return !(a == b); }

    quat_elem operator+(const quat_elem& o) const;
    quat_elem operator-(const quat_elem& o) const;
    quat_elem operator-() const;
    quat_elem operator*(const quat_elem& o) const;
    quat_elem inverse() const;
    quat_elem tau(long j) const;

    std::string str() const;

private:
    const quat_algebra* alg_;
    rat w_, x_, y_, z_;
};

class quat_algebra {
public:
    quat_algebra(rat a, rat b, rat q0w, rat q0x, rat q0y, rat q0z)
        : a_(std::move(a)), b_(std::move(b)), q0_{q0w, q0x, q0y, q0z} {
        if (a_ >= 0 || b_ >= 0)
            throw config_error("quaternion algebra: need a<0 and b<0 for a division ring over Q");
        if (q0w == 0 && q0x == 0 && q0y == 0 && q0z == 0)
            throw config_error("quaternion algebra: q0 must be a unit");
    }

    const rat& a() const { return a_; }
    const rat& b() const { return b_; }
    quat_elem q0() const { return quat_elem(this, q0_[0], q0_[1], q0_[2], q0_[3]); }

    bool commutative() const { return false; }
    bool tau_is_identity() const {
        // q0 central iff purely scalar
        return q0_[1] == 0 && q0_[2] == 0 && q0_[3] == 0;
    }

    quat_elem zero() const { return quat_elem(this, 0, 0, 0, 0); }
    quat_elem one() const { return quat_elem(this, 1, 0, 0, 0); }
    quat_elem from_int(long long v) const { return quat_elem(this, rat(v), 0, 0, 0); }
    quat_elem from_rat(const rat& v) const { return quat_elem(this, v, 0, 0, 0); }
    quat_elem unit_i() const { return quat_elem(this, 0, 1, 0, 0); }
    quat_elem unit_j() const { return quat_elem(this, 0, 0, 1, 0); }
    quat_elem unit_k() const { return quat_elem(this, 0, 0, 0, 1); }

    quat_elem add(const quat_elem& p, const quat_elem& q) const {
        check(p, q);
        return quat_elem(this, p.w() + q.w(), p.x() + q.x(), p.y() + q.y(), p.z() + q.z());
    }
    quat_elem neg(const quat_elem& p) const {
        check(p);
        return quat_elem(this, -p.w(), -p.x(), -p.y(), -p.z());
    }
    quat_elem mul(const quat_elem& p, const quat_elem& q) const {
        check(p, q);
        const rat &w1 = p.w(), &x1 = p.x(), &y1 = p.y(), &z1 = p.z();
        const rat &w2 = q.w(), &x2 = q.x(), &y2 = q.y(), &z2 = q.z();
        return quat_elem(this,
                         w1 * w2 + a_ * x1 * x2 + b_ * y1 * y2 - a_ * b_ * z1 * z2,
                         w1 * x2 + x1 * w2 - b_ * y1 * z2 + b_ * z1 * y2,
                         w1 * y2 + y1 * w2 + a_ * x1 * z2 - a_ * z1 * x2,
                         w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2);
    }
    quat_elem conjugate(const quat_elem& p) const {
        check(p);
        return quat_elem(this, p.w(), -p.x(), -p.y(), -p.z());
    }
    rat norm(const quat_elem& p) const {
        return p.w() * p.w() - a_ * p.x() * p.x() - b_ * p.y() * p.y() + a_ * b_ * p.z() * p.z();
    }
    quat_elem inv(const quat_elem& p) const {
        check(p);
        if (p.is_zero()) throw domain_error("quat: inverse of zero");
        rat n = norm(p);
        if (n == 0) throw internal_error("quat: zero norm on nonzero element");
        quat_elem c = conjugate(p);
        return quat_elem(this, c.w() / n, c.x() / n, c.y() / n, c.z() / n);
    }
    quat_elem tau_pow(const quat_elem& p, long j) const {
        check(p);
        if (j == 0 || tau_is_identity()) return p;
        quat_elem t = q0();
        if (j < 0) {
            t = inv(t);
            j = -j;
        }
        quat_elem c = one();
        for (long i = 0; i < j; ++i) c = mul(c, t);
        return mul(mul(c, p), inv(c));
    }

    quat_elem random(prng& rng) const {
        auto small = [&]() { return rat(rng.range(-2, 2), 1 + static_cast<long long>(rng.below(2))); };
        return quat_elem(this, small(), small(), small(), small());
    }
    quat_elem random_nonzero(prng& rng) const {
        for (;;) {
            quat_elem q = random(rng);
            if (!q.is_zero()) return q;
        }
    }

    std::string to_string(const quat_elem& p) const {
        check(p);
        std::ostringstream os;
        bool first = true;
        const rat* parts[4] = {&p.w(), &p.x(), &p.y(), &p.z()};
        const char* names[4] = {"", "i", "j", "k"};
        for (int c = 0; c < 4; ++c) {
            const rat& v = *parts[c];
            if (v == 0) continue;
            rat av = v < 0 ? rat(-v) : v;
            if (first)
                os << (v < 0 ? "-" : "");
            else
                os << (v < 0 ? "-" : "+");
            if (c == 0)
                os << av.str();
            else {
                if (av != 1) os << av.str() << "*";
                os << names[c];
            }
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

    std::string describe() const {
        std::ostringstream os;
        os << "rational_quaternion a=" << a_.str() << " b=" << b_.str()
           << " q0=" << to_string(q0());
        return os.str();
    }

private:
    void check(const quat_elem& p) const {
        if (p.ring() != this) throw config_error("quat: element from a different ring");
    }
    void check(const quat_elem& p, const quat_elem& q) const {
        check(p);
        if (q.ring() != this) throw config_error("quat: mixed ring elements");
    }

    rat a_, b_;
    rat q0_[4];
};

inline quat_elem quat_elem::operator+(const quat_elem& o) const { return alg_->add(*this, o); }
inline quat_elem quat_elem::operator-(const quat_elem& o) const {
    return alg_->add(*this, alg_->neg(o));
}
inline quat_elem quat_elem::operator-() const { return alg_->neg(*this); }
inline quat_elem quat_elem::operator*(const quat_elem& o) const { return alg_->mul(*this, o); }
inline quat_elem quat_elem::inverse() const { return alg_->inv(*this); }
inline quat_elem quat_elem::tau(long j) const { return alg_->tau_pow(*this, j); }
inline std::string quat_elem::str() const { return alg_->to_string(*this); }

// spec op name
template <class D>
D tau_pow(const D& a, long j) {
    return a.tau(j);
}

} // namespace twl

#endif
