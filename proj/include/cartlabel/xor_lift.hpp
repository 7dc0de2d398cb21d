#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cartlabel/base_scheme.hpp"
#include "cartlabel/bits.hpp"

namespace cartlabel {

// Phase 2: a seed-keyed map phi from s-bit base labels to 4s-bit strings
// such that phi(z1) ^ phi(z2) identifies the unordered pair {z1, z2}.
// Built over the set Z of base labels actually used by one encoding and
// verified pairwise; a collision redraws the seed.
class XorLift {
public:
    XorLift() = default; // empty shell; usable only after assignment from build()

    static XorLift build(std::vector<BitString> z, uint64_t seed,
                         uint32_t max_retries = 64);

    size_t base_bits() const { return base_bits_; }
    size_t lifted_bits() const { return 4 * base_bits_; }
    uint64_t lift_seed() const { return lift_seed_; }
    uint32_t attempts() const { return attempts_; }
    const std::vector<BitString>& z_set() const { return z_; }

    // phi(z); z must be one of the build labels.
    const BitString& lift(const BitString& z) const;

    // Recovers the unordered pair with phi(z1) ^ phi(z2) == w. Throws a
    // format error for any w outside the image (including w == 0).
    const std::pair<uint32_t, uint32_t>& invert(const BitString& w) const;

    const BitString& z_at(uint32_t i) const { return z_[i]; }

private:
    size_t base_bits_ = 0;
    uint64_t lift_seed_ = 0;
    uint32_t attempts_ = 0;
    std::vector<BitString> z_;
    std::vector<BitString> phi_;                                   // by z index
    std::unordered_map<BitString, uint32_t, BitStringHash> z_pos_; // label -> index
    std::unordered_map<BitString, std::pair<uint32_t, uint32_t>, BitStringHash> inverse_;
};

// The function phi itself: 4s PRF bits keyed by (seed, z's content).
BitString lift_image(uint64_t lift_seed, const BitString& z);

// Inverts the XOR of two lifted labels and applies the base decoder.
bool xor_decode(const XorLift& lift, const BaseGeometry& geom, const BitString& w);

} // namespace cartlabel
