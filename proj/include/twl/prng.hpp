#ifndef TWL_PRNG_HPP
#define TWL_PRNG_HPP

#include <cstdint>

namespace twl {

// splitmix64. Audits must be byte-reproducible across platforms, so we do
// not rely on std::uniform_int_distribution (implementation-defined).
class prng {
public:
    explicit prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n); n > 0.  Modulo bias is irrelevant here (n tiny) and
    // keeps the stream platform-stable.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // uniform in [lo, hi] inclusive
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1u) != 0; }

private:
    std::uint64_t state_;
};

// Derive a stream for sample #index of a named audit branch, independent of
// evaluation order.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t family, std::uint64_t index) {
    std::uint64_t z = seed ^ (family * 0x9e3779b97f4a7c15ULL) ^ (index + 0x165667b19e3779f9ULL);
    prng p(z);
    p.next();
    return p.next();
}

inline std::uint64_t hash_str(const char* s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (; *s; ++s) h = (h ^ static_cast<unsigned char>(*s)) * 1099511628211ULL;
    return h;
}

} // namespace twl

#endif
