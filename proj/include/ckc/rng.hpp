#pragma once

#include <cstdint>
#include <random>

namespace ckc {

/// SplitMix64 mixing step, used to derive decorrelated engine seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Random stream for one work item of a batch. The state depends only on
/// (seed, index), so batch results are identical no matter how the items
/// are scheduled across threads.
///
/// Doubles are produced from raw engine bits; std::uniform_real_distribution
/// is avoided because its output is implementation-defined.
class substream {
public:
    substream(std::uint64_t seed, std::uint64_t index)
        : eng_(splitmix64(splitmix64(seed) + 0x9e3779b97f4a7c15ULL * (index + 1))) {}

    /// Uniform in [0, 1), from the top 53 bits of one engine step.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform in [-1, 1).
    double uniform_pm1() { return 2.0 * uniform01() - 1.0; }

    /// Uniform bit.
    int bit() { return static_cast<int>(eng_() >> 63); }

private:
    std::mt19937_64 eng_;
};

}  // namespace ckc
