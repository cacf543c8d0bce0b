#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>

namespace qgx {

/// Counter-based random stream.
///
/// Every value is a pure function of (seed, stream, counter): the n-th draw of
/// stream s under seed k is mix(k, s, n). Two Rng objects constructed with the
/// same (seed, stream) produce the same sequence regardless of what other
/// streams have been consumed, which is what lets the GA assign one stream per
/// individual per generation and still run replicas concurrently.
///
/// Satisfies UniformRandomBitGenerator, but the helpers below should be
/// preferred over <random> distributions: their output is identical across
/// standard library implementations.
class Rng {
public:
    using result_type = std::uint64_t;

    constexpr Rng() = default;
    constexpr explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
        : key_(mix(seed ^ 0x6a09e667f3bcc909ULL)), stream_(mix(stream + 0xbb67ae8584caa73bULL)) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()() noexcept {
        return mix(key_ ^ mix(stream_ + counter_++ * 0x9e3779b97f4a7c15ULL));
    }

    /// Uniform integer in [0, bound). bound must be positive.
    constexpr std::uint64_t below(std::uint64_t bound) noexcept {
        // Rejection on the top of the range keeps the draw exactly uniform.
        const std::uint64_t limit = max() - max() % bound;
        std::uint64_t x = (*this)();
        while (x >= limit) x = (*this)();
        return x % bound;
    }

    /// Uniform integer in [lo, hi].
    constexpr std::int64_t between(std::int64_t lo, std::int64_t hi) noexcept {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// Uniform double in [0, 1) with 53 random bits.
    constexpr double uniform() noexcept {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

    constexpr bool chance(double p) noexcept { return uniform() < p; }
    constexpr bool coin() noexcept { return ((*this)() >> 63) != 0; }

    template <typename T>
    constexpr void shuffle(std::span<T> items) noexcept {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[below(i)]);
        }
    }

    constexpr std::uint64_t draws() const noexcept { return counter_; }

private:
    // splitmix64 finalizer
    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_ = 0;
    std::uint64_t stream_ = 0;
    std::uint64_t counter_ = 0;
};

}  // namespace qgx
