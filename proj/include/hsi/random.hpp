#pragma once

#include <cstdint>
#include <random>

namespace hsi {

/// SplitMix64 finalizer; used to turn (seed ^ stream id) into a well mixed
/// generator seed.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Reproducible random stream.
///
/// The engine is std::mt19937_64, whose state transition and seeding are
/// fixed by the C++ standard, so identical seeds give identical raw output on
/// every conforming platform. Standard distributions are not used because
/// their algorithms are implementation-defined; the conversions below are
/// spelled out instead.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    /// Independent stream for a purpose/trial: seed ^ stream_id.
    static Rng stream(std::uint64_t master_seed, std::uint64_t stream_id) {
        return Rng(master_seed ^ stream_id);
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1].
    double uniform_open_zero() { return 1.0 - uniform(); }

    /// Uniform integer in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x = engine_();
        while (x >= limit) x = engine_();
        return x % bound;
    }

    /// Fisher-Yates shuffle of a random-access range.
    template <typename Range>
    void shuffle(Range& range) {
        const auto size = static_cast<std::uint64_t>(range.size());
        for (std::uint64_t i = size; i > 1; --i) {
            const std::uint64_t j = below(i);
            using std::swap;
            swap(range[i - 1], range[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace hsi
