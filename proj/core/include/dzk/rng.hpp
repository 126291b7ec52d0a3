#ifndef DZK_RNG_HPP
#define DZK_RNG_HPP

#include <cstdint>

namespace dzk {

// Counter-based splitmix64. Draw i is the (i+1)-th output of the standard
// splitmix64 stream: output(i) = finalize(seed + (i+1) * 0x9E3779B97F4A7C15),
// with the usual xor-shift-multiply finalizer. Counter addressing (rather
// than sequential state) keeps draws independent of evaluation order, so
// sweeps give identical results at any thread count, and the algorithm is
// small enough to restate for other implementations (see README).
struct CounterRng {
    std::uint64_t seed = 0;

    static std::uint64_t finalize(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t raw(std::uint64_t counter) const {
        return finalize(seed + (counter + 1) * 0x9E3779B97F4A7C15ULL);
    }

    // Uniform in [0, 1): top 53 bits of the draw.
    double uniform01(std::uint64_t counter) const {
        return static_cast<double>(raw(counter) >> 11) * 0x1.0p-53;
    }

    // Uniform in [-1, 1).
    double symmetric(std::uint64_t counter) const { return 2.0 * uniform01(counter) - 1.0; }

    // Stable counter for a signed Fourier mode and a per-mode component
    // index, so the same mode draws the same value on any grid.
    static std::uint64_t mode_counter(int m_signed, int n_signed, unsigned component = 0) {
        auto lo = static_cast<std::uint64_t>(static_cast<std::uint32_t>(n_signed));
        auto hi = static_cast<std::uint64_t>(static_cast<std::uint32_t>(m_signed));
        return ((hi << 32) | lo) * 4ULL + component;
    }
};

} // namespace dzk

#endif
