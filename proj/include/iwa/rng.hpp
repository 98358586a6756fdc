#pragma once

#include <cstdint>

namespace iwa {

/// Deterministic splitmix64 stream. Outputs are identical across platforms
/// for a given seed, which keeps every generated artifact reproducible;
/// std::uniform_int_distribution is avoided on purpose (its mapping is
/// implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound) via the fixed-point multiply map.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    /// Derive an independent substream (e.g. one per level or fiber).
    Rng fork(std::uint64_t stream_id) {
        Rng r(state_ ^ (0x6a09e667f3bcc909ULL + stream_id * 0x9e3779b97f4a7c15ULL));
        r.next();
        return r;
    }

private:
    std::uint64_t state_;
};

}  // namespace iwa
