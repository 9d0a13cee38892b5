#pragma once

#include <cstdint>

namespace collapse {

/// Stateless 64-bit counter-based generator. Every variate is a pure function of
/// (seed, counter, lane), so a sample budget can be sharded across any number of
/// workers and still produce the same stream: worker w just evaluates the counters
/// assigned to it. Two rounds of the splitmix64 finalizer mix the inputs.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t bits(std::uint64_t counter, std::uint64_t lane = 0) const {
        std::uint64_t x = seed_;
        x ^= mix(counter + 0x9e3779b97f4a7c15ULL);
        x = mix(x + lane * 0xbf58476d1ce4e5b9ULL);
        return mix(x);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform(std::uint64_t counter, std::uint64_t lane = 0) const {
        return static_cast<double>(bits(counter, lane) >> 11) * 0x1.0p-53;
    }

    /// Uniform double in the open interval (0, 1); safe as a log() argument.
    double uniform_open(std::uint64_t counter, std::uint64_t lane = 0) const {
        return (static_cast<double>(bits(counter, lane) >> 11) + 0.5) * 0x1.0p-53;
    }

    std::uint64_t seed() const { return seed_; }

    /// Derives an independent stream seed, e.g. one per sequence index.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        return mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL));
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
};

}  // namespace collapse
