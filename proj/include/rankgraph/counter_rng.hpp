#ifndef rankgraph_counter_rng_hpp
#define rankgraph_counter_rng_hpp

#include <cstdint>

namespace rankgraph {

/*
 * Stateless counter-based randomness. A draw is a pure function of
 * (key, counters), so results do not depend on evaluation order or on how
 * work is split across threads.
 */
namespace counter_rng {

// SplitMix64 finalizer
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t hash(std::uint64_t key, std::uint64_t c0) {
    return mix64(mix64(key ^ 0x5851f42d4c957f2dULL) ^ c0);
}

constexpr std::uint64_t hash(std::uint64_t key, std::uint64_t c0, std::uint64_t c1) {
    return mix64(hash(key, c0) ^ mix64(c1 + 0x2545f4914f6cdd1dULL));
}

constexpr std::uint64_t hash(std::uint64_t key, std::uint64_t c0, std::uint64_t c1, std::uint64_t c2) {
    return mix64(hash(key, c0, c1) ^ mix64(c2 + 0x14057b7ef767814fULL));
}

/// Uniform double in [0, 1) from the top 53 bits.
constexpr double to_unit(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Domain-separation tags so that e.g. tie-break keys and positions drawn from
// the same user seed are unrelated streams.
enum Stream : std::uint64_t {
    TieBreak = 0x7469650000000001ULL,
    EdgeDraw = 0x6564676500000002ULL,
    Position = 0x706f730000000003ULL,
    RunSeed  = 0x72756e0000000004ULL,
    Permute  = 0x7065726d00000005ULL,
};

constexpr std::uint64_t stream_key(Stream stream, std::uint64_t seed) {
    return mix64(seed ^ static_cast<std::uint64_t>(stream));
}

}
}

#endif /* rankgraph_counter_rng_hpp */
