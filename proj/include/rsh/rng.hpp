#ifndef RSH_RNG_HPP
#define RSH_RNG_HPP

#include <cstdint>

namespace rsh {

// Counter-based 64-bit generator (SplitMix64). The whole repository draws
// randomness through this type only, so two runs with the same
// (master_seed, stream_id) replay bit-exactly on any platform.
//
// Stream derivation: the starting counter is
//   mix(mix(master_seed) ^ (0x9E3779B97F4A7C15 * (stream_id + 1)))
// where mix() is the SplitMix64 finalizer (shift-xor-multiply avalanche).
class RngStream {
public:
    RngStream() : RngStream(0, 0) {}
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
        : stream_id_(stream_id),
          state_(mix(mix(master_seed) ^ (kGamma * (stream_id + 1)))) {}

    std::uint64_t stream_id() const { return stream_id_; }

    std::uint64_t next_u64() {
        state_ += kGamma;
        return mix(state_);
    }

    // uniform in [0, 1) with 53 random bits
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // unbiased uniform integer in [0, n), n >= 1; rejection sampling
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    int next_int(int lo, int hi_exclusive) {
        return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi_exclusive - lo)));
    }

    bool bernoulli(double p) { return next_double() < p; }

    // Poisson(1) by cdf inversion with ascending summation order. The mean
    // is 1 so the expected number of terms is ~2; the fixed order makes the
    // draw reproducible across platforms.
    int poisson1() {
        const double u = next_double();
        double pmf = 0x1.5fc21041027acp-2; // exp(-1)
        double cdf = pmf;
        int k = 0;
        while (u >= cdf && k < 64) {
            ++k;
            pmf /= static_cast<double>(k);
            cdf += pmf;
        }
        return k;
    }

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    std::uint64_t stream_id_;
    std::uint64_t state_;
};

// s + 1 with s ~ Poisson(1); the number of basic mutation operations used
// by all Poisson-mutation operators in this repository.
int poisson_plus_one(RngStream& rng);

} // namespace rsh

#endif
