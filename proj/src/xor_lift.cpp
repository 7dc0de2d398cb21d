#include "cartlabel/xor_lift.hpp"

#include <algorithm>

#include "cartlabel/error.hpp"
#include "cartlabel/prf.hpp"

namespace cartlabel {

BitString lift_image(uint64_t lift_seed, const BitString& z) {
    uint64_t key = prf_absorb(prf(lift_seed, z.size()), z.words());
    size_t out_bits = 4 * z.size();
    BitString out;
    size_t t = 0;
    while (out.size() < out_bits) {
        unsigned take = unsigned(std::min<size_t>(64, out_bits - out.size()));
        out.append_bits(prf(key, t++) >> (64 - take), take);
    }
    return out;
}

XorLift XorLift::build(std::vector<BitString> z, uint64_t seed, uint32_t max_retries) {
    if (z.empty()) throw_validation("xor-lift: empty base label set");
    size_t s = z[0].size();
    for (const auto& l : z)
        if (l.size() != s) throw_validation("xor-lift: base labels of unequal width");
    std::sort(z.begin(), z.end(), [](const BitString& a, const BitString& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        auto aw = a.words(), bw = b.words();
        return std::lexicographical_compare(aw.begin(), aw.end(), bw.begin(), bw.end());
    });
    if (std::adjacent_find(z.begin(), z.end()) != z.end())
        throw_validation("xor-lift: duplicate base labels");

    XorLift lift;
    lift.base_bits_ = s;
    lift.z_ = std::move(z);
    for (uint32_t i = 0; i < lift.z_.size(); ++i) lift.z_pos_[lift.z_[i]] = i;

    uint32_t nz = uint32_t(lift.z_.size());
    for (uint32_t attempt = 0; attempt < max_retries; ++attempt) {
        uint64_t lift_seed = prf(seed, attempt);
        std::vector<BitString> phi;
        phi.reserve(nz);
        for (const auto& l : lift.z_) phi.push_back(lift_image(lift_seed, l));

        std::unordered_map<BitString, std::pair<uint32_t, uint32_t>, BitStringHash> inv;
        inv.reserve(size_t(nz) * (nz - 1) / 2);
        bool ok = true;
        for (uint32_t i = 0; i < nz && ok; ++i) {
            for (uint32_t j = i + 1; j < nz; ++j) {
                BitString w = phi[i] ^ phi[j];
                if (w.is_zero() || !inv.emplace(std::move(w), std::make_pair(i, j)).second) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            lift.lift_seed_ = lift_seed;
            lift.attempts_ = attempt + 1;
            lift.phi_ = std::move(phi);
            lift.inverse_ = std::move(inv);
            return lift;
        }
    }
    throw_build("xor-lift build failed after " + std::to_string(max_retries) + " attempts");
}

const BitString& XorLift::lift(const BitString& z) const {
    auto it = z_pos_.find(z);
    if (it == z_pos_.end()) throw_validation("xor-lift: unknown base label");
    return phi_[it->second];
}

const std::pair<uint32_t, uint32_t>& XorLift::invert(const BitString& w) const {
    auto it = inverse_.find(w);
    if (it == inverse_.end())
        throw_format("undecodable XOR value (corrupt or cross-encoding labels)");
    return it->second;
}

bool xor_decode(const XorLift& lift, const BaseGeometry& geom, const BitString& w) {
    if (w.size() != lift.lifted_bits()) throw_format("xor-decode: width mismatch");
    const auto& [i, j] = lift.invert(w);
    return decode_base(geom, lift.z_at(i), lift.z_at(j));
}

} // namespace cartlabel
