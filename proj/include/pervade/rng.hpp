#ifndef PERVADE_RNG_HPP
#define PERVADE_RNG_HPP

#include <cstdint>

namespace pervade {

// SplitMix64. Every random choice in the project flows through this
// generator so that runs are reproducible from a single 64-bit seed,
// independently of platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), unbiased by rejection
    std::uint64_t next_below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    int next_int(int lo, int hi) { // inclusive range
        return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Bernoulli with probability p quantized to multiples of 2^-64.
    bool next_bool(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        long double t = static_cast<long double>(p) * 18446744073709551616.0L;
        std::uint64_t threshold =
            t >= 18446744073709551615.0L ? UINT64_MAX : static_cast<std::uint64_t>(t);
        return next_u64() < threshold;
    }

    // derive an independent stream, e.g. one per task
    Rng fork(std::uint64_t stream) {
        Rng r(state_ ^ (0x6a09e667f3bcc909ULL * (stream + 1)));
        r.next_u64();
        return r;
    }

private:
    std::uint64_t state_;
};

} // namespace pervade

#endif
