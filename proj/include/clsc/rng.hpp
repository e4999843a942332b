#ifndef CLSC_RNG_HPP
#define CLSC_RNG_HPP

#include <cstdint>

namespace clsc {

// SplitMix64 finalizer; used for seeding and for deriving stream ids.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seedable, splittable stream of uniforms (PCG64 XSL-RR).
///
/// Identical (master_seed, stream_id) pairs yield the identical sequence;
/// distinct stream_ids select distinct PCG increments, giving streams of
/// independent quality. All Monte Carlo in this project draws through this
/// class so that replication-level determinism holds under any scheduling.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
        : master_(master_seed), id_(stream_id) {
        const std::uint64_t seq = splitmix64(stream_id ^ 0xDA3E39CB94B95BDBULL);
        inc_ = ((static_cast<u128>(seq) << 64 | splitmix64(seq)) << 1) | 1u;
        state_ = 0;
        step();
        state_ += static_cast<u128>(splitmix64(master_seed)) << 64 |
                  splitmix64(master_seed ^ stream_id);
        step();
    }

    std::uint64_t master_seed() const { return master_; }
    std::uint64_t stream_id() const { return id_; }

    /// Child stream; derivation is a 64-bit hash so nested splits stay disjoint.
    RngStream derived(std::uint64_t k) const {
        return RngStream(master_, splitmix64(splitmix64(id_) + k));
    }

    std::uint64_t next_u64() {
        const u128 old = state_;
        step();
        const std::uint64_t xored =
            static_cast<std::uint64_t>(old >> 64) ^ static_cast<std::uint64_t>(old);
        const unsigned rot = static_cast<unsigned>(old >> 122);
        return (xored >> rot) | (xored << ((-rot) & 63u));
    }

    /// Uniform draw strictly inside (0,1), 53-bit resolution.
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    using u128 = unsigned __int128;

    void step() { state_ = state_ * kMultiplier + inc_; }

    static constexpr u128 kMultiplier =
        (static_cast<u128>(0x2360ED051FC65DA4ULL) << 64) | 0x4385DF649FCCF645ULL;

    u128 state_{};
    u128 inc_{};
    std::uint64_t master_;
    std::uint64_t id_;
};

} // namespace clsc

#endif // CLSC_RNG_HPP
