#pragma once

#include <cstdint>
#include <vector>

#include "cartlabel/bits.hpp"

namespace cartlabel {

// Phase 1: labels certifying that two tuples are at Hamming distance
// exactly 1, built from q independent 4-bit parity sketches plus a unique
// id field, verified exhaustively and redrawn on failure.

using Tuple = std::vector<uint32_t>;

struct DistanceOneParams {
    uint32_t n = 0;          // element count
    uint32_t q = 0;          // number of 4-bit copies
    unsigned id_bits = 0;    // ceil(log2 n)
    uint32_t max_retries = 64;

    size_t label_bits() const { return 4 * size_t(q) + id_bits; }

    // q = ceil( (2 / log2(16/15)) * log2 n )
    static uint32_t paper_q(uint32_t n);
    // starting point for the adaptive schedule: ceil(4 * log2 n)
    static uint32_t adaptive_q0(uint32_t n);
    static DistanceOneParams paper(uint32_t n);
};

// One 4-bit sketch of each binary tuple under an explicit partition map
// p : [d] -> [4]: output bit i is the XOR of the tuple over p^{-1}(i).
std::vector<uint8_t> binary_copy_with_partition(const std::vector<Tuple>& tuples,
                                                const std::vector<uint8_t>& p);

// Same, with the partition drawn from the PRF for (seed, copy_index).
std::vector<uint8_t> binary_copy(const std::vector<Tuple>& tuples, uint64_t seed,
                                 uint32_t copy_index);

// General alphabets: each coordinate symbol is first reduced to one PRF
// bit, then the binary sketch is applied. Per-copy acceptance is
// "4-bit Hamming distance <= 1".
std::vector<uint8_t> alphabet_copy(const std::vector<Tuple>& tuples, uint64_t seed,
                                   uint32_t copy_index);

inline bool copy_accepts(uint8_t a, uint8_t b) {
    return std::popcount(uint8_t((a ^ b) & 0xf)) <= 1;
}

struct DistanceOneLabeling {
    DistanceOneParams params;
    uint64_t sketch_seed = 0;  // the seed that verified
    uint32_t attempts = 0;     // total build attempts, successful one included
    std::vector<BitString> labels;
};

// Las Vegas build: draw q copies, append id bits, verify every pair
// against the true Hamming distance, redraw the seed on any failure.
// Above `verify_cap` elements verification is sampled (1e6 random pairs).
DistanceOneLabeling build_distance_one(const std::vector<Tuple>& tuples,
                                       const DistanceOneParams& params, uint64_t seed,
                                       uint32_t verify_cap = 1u << 13);

// Adaptive q: start at adaptive_q0 and double until a build verifies,
// capped at the paper default.
DistanceOneLabeling build_distance_one_adaptive(const std::vector<Tuple>& tuples,
                                                uint64_t seed,
                                                uint32_t verify_cap = 1u << 13);

// Stateless: AND over the q copies of "4-bit distance <= 1", and the id
// fields differ.
bool decode_distance_one(const DistanceOneParams& params, const BitString& a,
                         const BitString& b);

// Internal fast path, shared with the product decoder: all nibbles of
// x ^ y over the first `nibbles` 4-bit blocks have popcount <= 1.
bool nibbles_within_one(const BitString& x, const BitString& y, size_t nibbles);

} // namespace cartlabel
