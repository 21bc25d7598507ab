#pragma once

// Deterministic random streams. The engine is xoshiro256++ seeded through
// SplitMix64, so draws are reproducible bit-for-bit across platforms and
// independent substreams can be derived from a master seed by index:
//
//   substream(seed, i) seeds SplitMix64 with  seed + (i+1) * 0x9E3779B97F4A7C15
//
// and fills the four xoshiro words from it. Batch runs derive one substream
// per draw index, which makes results independent of chunking and thread
// schedule. All samplers are hand-rolled (not std:: distributions) so that
// a (seed, index) pair pins the output everywhere.

#include <cmath>
#include <cstdint>

namespace kac {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_)
            w = splitmix64_next(sm);
    }

    static RandomStream substream(std::uint64_t master_seed, std::uint64_t index) {
        return RandomStream(master_seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform on [0,1), 53-bit resolution
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform on (0,1), never returns an endpoint (safe under log)
    double uniform01_open() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    bool coin() { return (next_u64() >> 63) != 0; }

    // uniform integer on {1, ..., n}
    std::uint64_t uniform_index1(std::uint64_t n) {
        // multiply-shift rejection-free mapping is fine here: n is far below 2^53
        return 1 + static_cast<std::uint64_t>(uniform01() * static_cast<double>(n));
    }

    // standard normal, Marsaglia polar method with one cached value
    double gaussian() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u, v, w;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            w = u * u + v * v;
        } while (w >= 1.0 || w == 0.0);
        const double m = std::sqrt(-2.0 * std::log(w) / w);
        cached_ = v * m;
        has_cached_ = true;
        return u * m;
    }

    double exponential() { return -std::log(uniform01_open()); }

    double cauchy(double scale) { return scale * std::tan(M_PI * (uniform01_open() - 0.5)); }

    double laplace(double scale) {
        const double u = uniform01_open() - 0.5;
        return -scale * (u < 0 ? -1.0 : 1.0) * std::log1p(-2.0 * std::fabs(u));
    }

    // Student-t by Bailey's polar method (Bailey 1994).
    double student_t(double nu) {
        double u, v, w;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            w = u * u + v * v;
        } while (w >= 1.0 || w == 0.0);
        return u * std::sqrt(nu * (std::pow(w, -2.0 / nu) - 1.0) / w);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
    double cached_ = 0.0;
    bool has_cached_ = false;
};

} // namespace kac
