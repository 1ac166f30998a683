#pragma once

#include <cstdint>
#include <string_view>

namespace bnsl {

/// Deterministic pseudo-random stream. All randomness in the library flows
/// from one user seed through named sub-streams, so results do not depend on
/// evaluation order or thread count.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {
        // Warm up so nearby seeds decorrelate.
        next_u64();
        next_u64();
    }

    std::uint64_t next_u64() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform on [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Uniform integer in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

    bool next_bool() { return (next_u64() & 1u) != 0; }

    /// Standard normal via Box-Muller.
    double next_gaussian();

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Stable 64-bit hash of a stream name plus two indices, for deriving
/// independent sub-streams from one seed.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream, std::uint64_t a = 0,
                          std::uint64_t b = 0);

inline Rng make_stream(std::uint64_t seed, std::string_view stream, std::uint64_t a = 0,
                       std::uint64_t b = 0) {
    return Rng(derive_seed(seed, stream, a, b));
}

}  // namespace bnsl
