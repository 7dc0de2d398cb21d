#pragma once

#include <cstdint>
#include <span>

namespace cartlabel {

// 64-bit finalizer (splitmix64). Full avalanche, invertible.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Keyed pseudorandom function over up to three 64-bit inputs.
// Same (key, a, b, c) always yields the same output word.
inline uint64_t prf(uint64_t key, uint64_t a = 0, uint64_t b = 0, uint64_t c = 0) {
    uint64_t h = mix64(key ^ 0x1610923559a3e6f3ULL);
    h = mix64(h ^ a);
    h = mix64(h ^ b);
    h = mix64(h ^ c);
    return h;
}

// Absorb a word sequence into a single key (used to key the PRF by a bit
// string's content, e.g. the XOR-lift input label).
inline uint64_t prf_absorb(uint64_t key, std::span<const uint64_t> words) {
    uint64_t h = mix64(key ^ 0x7b2f0a4c9d81e5a7ULL);
    for (uint64_t w : words) h = mix64(h ^ w);
    return h;
}

// Domain-separation tags for deriving all phase seeds from one master seed.
namespace subkey {
inline constexpr uint64_t Phase1 = 0x01;
inline constexpr uint64_t Lift = 0x02;
inline constexpr uint64_t Mphf = 0x03;
inline constexpr uint64_t Partition = 0x04;
inline constexpr uint64_t SymbolBit = 0x05;
} // namespace subkey

inline uint64_t derive_seed(uint64_t master, uint64_t tag, uint64_t attempt = 0) {
    return prf(master, tag, attempt);
}

} // namespace cartlabel
