#pragma once

#include <cstdint>
#include <random>

namespace hddlogic {

/**
 * Reproducible generator for particle ensembles.
 *
 * The raw stream is std::mt19937_64, whose output sequence is fixed by the
 * standard. Doubles are built from the top 53 bits of each draw instead of
 * going through std::uniform_real_distribution (which is implementation
 * defined), so a given seed yields the same ensemble on every toolchain.
 */
class ParticleRng {
public:
    explicit ParticleRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// splitmix64 finalizer; used to derive independent per-cell seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept {
    return mix_seed(base ^ mix_seed(stream));
}

}  // namespace hddlogic
