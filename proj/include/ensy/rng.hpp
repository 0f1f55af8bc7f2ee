#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace ensy {

/// SplitMix64 finalizer; used to derive well-mixed child seeds from a master seed.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t hash_bytes(std::string_view s) {
    // FNV-1a
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t combine_seed(std::uint64_t seed, std::uint64_t part) {
    return mix64(seed ^ mix64(part));
}

inline std::uint64_t combine_seed(std::uint64_t seed, std::string_view part) {
    return combine_seed(seed, hash_bytes(part));
}

/// derive_seed(master, a, b, ...) folds each key part into the master seed.
/// Streams keyed this way are independent of the order other streams are drawn in.
template <typename T, typename... Rest>
std::uint64_t derive_seed(std::uint64_t seed, T&& part, Rest&&... rest) {
    std::uint64_t s = combine_seed(seed, std::forward<T>(part));
    if constexpr (sizeof...(rest) == 0) {
        return s;
    } else {
        return derive_seed(s, std::forward<Rest>(rest)...);
    }
}

/// Deterministic random stream. Transforms are implemented by hand so draws do
/// not depend on the standard library's distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    /// Standard normal draw via Box-Muller; consumes exactly two words.
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        // 1 - u1 is in (0, 1], keeping the log argument positive
        return std::sqrt(-2.0 * std::log(1.0 - u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    double normal(double mean, double stddev) {
        return mean + stddev * normal();
    }

    /// Unbiased uniform index in [0, n); n must be positive.
    std::size_t uniform_index(std::size_t n) {
        const std::uint64_t bound = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x = next_u64();
        while (x >= limit) {
            x = next_u64();
        }
        return static_cast<std::size_t>(x % bound);
    }

    /// Fisher-Yates shuffle of an index-like container.
    template <typename Container>
    void shuffle(Container& c) {
        for (std::size_t i = c.size(); i > 1; --i) {
            std::size_t j = uniform_index(i);
            std::swap(c[i - 1], c[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace ensy
