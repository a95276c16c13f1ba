#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace symq {

/// splitmix64 finalizer; used to derive independent stream seeds from
/// (master seed, tag) so trial-level parallelism cannot change results.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic random stream. mt19937_64 has a bit-exact standardized
/// sequence; the bounded/real draws below avoid std::*_distribution, whose
/// output is implementation-defined.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    /// Independent stream for (master, tag); tags are e.g. trial indices.
    static Rng stream(uint64_t master, uint64_t tag) {
        return Rng(mix64(master ^ mix64(tag + 0x51ed2701)));
    }

    uint64_t next_u64() { return eng_(); }

    /// Uniform integer in [lo, hi] by rejection sampling (unbiased).
    long long uniform_int(long long lo, long long hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        uint64_t r;
        do { r = eng_(); } while (r >= limit);
        return lo + static_cast<long long>(r % span);
    }

    int bit() { return static_cast<int>(eng_() >> 63); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do { u1 = uniform(); } while (u1 <= 0.0);
        u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(6.283185307179586476925 * u2);
        have_spare_ = true;
        return r * std::cos(6.283185307179586476925 * u2);
    }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace symq
