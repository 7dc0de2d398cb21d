#pragma once

#include <cstdint>
#include <vector>

#include "cartlabel/bits.hpp"

namespace cartlabel {

// Minimal perfect hash: a bijection from a fixed key set of size k onto
// {0,...,k-1}, serializable into a self-delimiting bit format
// [k: 32 bits][tag: 2 bits][payload]. Evaluation on a key outside the
// build set returns an arbitrary value in [k], never an error.
class Mphf {
public:
    Mphf() = default;

    // keys: distinct values in [m]. Retries internally until the encoding
    // fits its size budget (4k+64 bits for k >= 64).
    static Mphf build(const std::vector<uint32_t>& keys, uint32_t m, uint64_t seed);

    uint32_t key_count() const { return k_; }
    uint32_t eval(uint32_t key) const;
    size_t bit_size() const;

    BitString serialize() const;
    static Mphf deserialize(const BitString& bits);
    // Parses one embedded function starting at `pos`, advancing it.
    static Mphf parse(const BitString& bits, size_t& pos);

private:
    enum class Tag : uint8_t { SortedTable = 0, LevelBitmaps = 1 };

    static Mphf build_table(const std::vector<uint32_t>& keys);
    static bool try_build_levels(const std::vector<uint32_t>& keys, uint64_t seed,
                                 size_t budget_bits, Mphf& out);

    uint32_t k_ = 0;
    Tag tag_ = Tag::SortedTable;
    // SortedTable
    unsigned key_width_ = 0;
    std::vector<uint32_t> sorted_keys_;
    // LevelBitmaps
    uint64_t level_seed_ = 0;
    uint32_t num_levels_ = 0;
    BitString bitmaps_; // levels concatenated, deterministic size schedule
    std::vector<uint32_t> word_rank_; // set bits before each 64-bit word; not serialized

    void rebuild_rank();
    uint32_t rank(size_t i) const;
};

// The level-size schedule shared by build and parse: geometric decay by
// about 0.65 per level, floored at 1.
uint64_t mphf_level_size(uint32_t k, uint32_t level);

} // namespace cartlabel
