#ifndef TWL_AUDIT_HPP
#define TWL_AUDIT_HPP

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "twl/prng.hpp"
#include "twl/tpoly.hpp"

namespace twl {

template <class R>
using elem_t = decltype(std::declval<const R&>().zero());

// Seeded, degree-capped random inputs for the relation audits.
template <class R>
struct sampler {
    using D = elem_t<R>;

    const R* ring;
    int degree_cap = 3;

    D scalar(prng& rng) const { return ring->random(rng); }
    D nonzero(prng& rng) const { return ring->random_nonzero(rng); }

    tunit<D> unit(prng& rng) const {
        return tunit<D>(ring->random_nonzero(rng),
                        static_cast<int>(rng.range(-degree_cap, degree_cap)));
    }
    tpoly<D> unit_poly(prng& rng) const { return unit(rng).poly(); }

    // 1..3 terms, exponents within the cap; may be zero if terms cancel out
    tpoly<D> poly(prng& rng) const {
        tpoly<D> p(ring);
        int terms = static_cast<int>(rng.range(1, 3));
        for (int i = 0; i < terms; ++i)
            p = p + tpoly<D>::term(ring->random(rng),
                                   static_cast<int>(rng.range(-degree_cap, degree_cap)));
        return p;
    }
    tpoly<D> nonzero_poly(prng& rng) const {
        for (;;) {
            tpoly<D> p = poly(rng);
            if (!p.is_zero()) return p;
        }
    }
};

// three distinct indices in 1..n
inline std::array<int, 3> detail_pick3(prng& rng, int n) {
    std::array<int, 3> out{0, 0, 0};
    for (int c = 0; c < 3;) {
        int v = static_cast<int>(rng.range(1, n));
        bool dup = false;
        for (int i = 0; i < c; ++i)
            if (out[static_cast<std::size_t>(i)] == v) dup = true;
        if (!dup) out[static_cast<std::size_t>(c++)] = v;
    }
    return out;
}

struct branch_row {
    std::string branch;
    long samples = 0;
    long failures = 0;
    std::string first_failure; // replay data for the first failing instance
};

struct audit_report {
    std::string family;
    std::string ring_desc;
    int n = 0;
    std::uint64_t seed = 0;
    int degree_cap = 0;
    long requested_samples = 0;
    std::vector<branch_row> rows;

    bool passed() const {
        for (const auto& r : rows)
            if (r.failures) return false;
        return true;
    }

    long total_samples() const {
        long t = 0;
        for (const auto& r : rows) t += r.samples;
        return t;
    }

    branch_row& row(const std::string& name) {
        for (auto& r : rows)
            if (r.branch == name) return r;
        rows.push_back(branch_row{name, 0, 0, {}});
        return rows.back();
    }

    void record(const std::string& branch, bool ok, const std::string& instance) {
        branch_row& r = row(branch);
        ++r.samples;
        if (!ok) {
            if (!r.failures) r.first_failure = instance;
            ++r.failures;
        }
    }

    // Deterministic text: identical configuration -> identical bytes.
    std::string to_text() const {
        std::ostringstream os;
        os << "family: " << family << "\n";
        os << "ring: " << ring_desc << "\n";
        os << "n: " << n << "\n";
        os << "samples: " << requested_samples << "\n";
        os << "seed: " << seed << "\n";
        os << "degree_cap: " << degree_cap << "\n";
        os << "branch,samples,failures\n";
        for (const auto& r : rows) {
            os << r.branch << "," << r.samples << "," << r.failures << "\n";
            if (r.failures) os << "  first_failure: " << r.first_failure << "\n";
        }
        os << "status: " << (passed() ? "PASS" : "FAIL") << "\n";
        return os.str();
    }
};

} // namespace twl

#endif
