#include "cartlabel/mphf.hpp"

#include <algorithm>

#include "cartlabel/error.hpp"
#include "cartlabel/prf.hpp"

namespace cartlabel {

namespace {
constexpr uint32_t kMaxLevels = 48;
constexpr uint32_t kMaxAttempts = 128;
} // namespace

void Mphf::rebuild_rank() {
    word_rank_.clear();
    uint32_t c = 0;
    for (uint64_t w : bitmaps_.words()) {
        word_rank_.push_back(c);
        c += uint32_t(std::popcount(w));
    }
}

uint32_t Mphf::rank(size_t i) const {
    uint32_t r = word_rank_[i / 64];
    unsigned head = unsigned(i % 64);
    if (head) r += uint32_t(std::popcount(bitmaps_.words()[i / 64] >> (64 - head)));
    return r;
}

uint64_t mphf_level_size(uint32_t k, uint32_t level) {
    uint64_t s = k;
    for (uint32_t l = 0; l < level; ++l) s = std::max<uint64_t>(1, (s * 13 + 19) / 20);
    return std::max<uint64_t>(1, s);
}

Mphf Mphf::build_table(const std::vector<uint32_t>& keys) {
    Mphf h;
    h.k_ = uint32_t(keys.size());
    h.tag_ = Tag::SortedTable;
    h.sorted_keys_ = keys;
    std::sort(h.sorted_keys_.begin(), h.sorted_keys_.end());
    uint32_t maxkey = h.sorted_keys_.empty() ? 0 : h.sorted_keys_.back();
    h.key_width_ = std::max(1u, bits_for_count(uint64_t(maxkey) + 1));
    return h;
}

bool Mphf::try_build_levels(const std::vector<uint32_t>& keys, uint64_t seed,
                            size_t budget_bits, Mphf& out) {
    uint32_t k = uint32_t(keys.size());
    std::vector<uint32_t> remaining = keys;
    std::vector<bool> bits;
    std::vector<uint8_t> slot_count;
    uint32_t level = 0;
    for (; level < kMaxLevels && !remaining.empty(); ++level) {
        uint64_t size = mphf_level_size(k, level);
        slot_count.assign(size, 0);
        std::vector<uint64_t> pos(remaining.size());
        for (size_t i = 0; i < remaining.size(); ++i) {
            pos[i] = prf(seed, level, remaining[i]) % size;
            if (slot_count[pos[i]] < 2) ++slot_count[pos[i]];
        }
        size_t base = bits.size();
        bits.resize(base + size, false);
        std::vector<uint32_t> next;
        for (size_t i = 0; i < remaining.size(); ++i) {
            if (slot_count[pos[i]] == 1)
                bits[base + pos[i]] = true;
            else
                next.push_back(remaining[i]);
        }
        remaining = std::move(next);
    }
    if (!remaining.empty()) return false;
    if (32 + 2 + 64 + 8 + bits.size() > budget_bits) return false;

    out.k_ = k;
    out.tag_ = Tag::LevelBitmaps;
    out.level_seed_ = seed;
    out.num_levels_ = level;
    out.bitmaps_ = BitString();
    for (bool b : bits) out.bitmaps_.push_back(b);
    out.rebuild_rank();
    return true;
}

Mphf Mphf::build(const std::vector<uint32_t>& keys, uint32_t m, uint64_t seed) {
    {
        auto sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw_validation("mphf: duplicate keys");
        if (!sorted.empty() && sorted.back() >= m)
            throw_validation("mphf: key outside universe [m]");
    }
    uint32_t k = uint32_t(keys.size());
    // Size budget: the documented bound for k >= 64, a looser additive
    // allowance below it.
    size_t budget = 4 * size_t(k) + (k >= 64 ? 64 : 98);

    Mphf table = build_table(keys);
    bool table_fits = table.bit_size() <= budget;

    Mphf levels;
    bool have_levels = false;
    if (k >= 2) {
        for (uint32_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
            if (try_build_levels(keys, prf(seed, attempt), budget, levels)) {
                have_levels = true;
                break;
            }
        }
    }
    if (have_levels && (!table_fits || levels.bit_size() < table.bit_size()))
        return levels;
    if (table_fits) return table;
    throw_build("mphf: no encoding fits " + std::to_string(budget) + " bits for k=" +
                std::to_string(k));
}

uint32_t Mphf::eval(uint32_t key) const {
    if (k_ == 0) return 0;
    if (tag_ == Tag::SortedTable) {
        auto it = std::lower_bound(sorted_keys_.begin(), sorted_keys_.end(), key);
        size_t r = size_t(it - sorted_keys_.begin());
        return uint32_t(std::min<size_t>(r, k_ - 1)); // foreign keys clamp
    }
    size_t offset = 0;
    for (uint32_t level = 0; level < num_levels_; ++level) {
        uint64_t size = mphf_level_size(k_, level);
        uint64_t pos = prf(level_seed_, level, key) % size;
        if (bitmaps_.get_bit(offset + pos)) {
            // rank of the slot among all set bits = the hash value
            return rank(offset + pos);
        }
        offset += size;
    }
    return 0; // foreign key that hit no level
}

size_t Mphf::bit_size() const {
    size_t s = 32 + 2;
    if (tag_ == Tag::SortedTable) return s + 6 + size_t(k_) * key_width_;
    return s + 64 + 8 + bitmaps_.size();
}

BitString Mphf::serialize() const {
    BitString out;
    out.append_bits(k_, 32);
    out.append_bits(uint64_t(tag_), 2);
    if (tag_ == Tag::SortedTable) {
        out.append_bits(key_width_, 6);
        for (uint32_t key : sorted_keys_) out.append_bits(key, key_width_);
    } else {
        out.append_bits(level_seed_, 64);
        out.append_bits(num_levels_, 8);
        out.append(bitmaps_);
    }
    return out;
}

Mphf Mphf::parse(const BitString& bits, size_t& pos) {
    auto need = [&](size_t n) {
        if (pos + n > bits.size()) throw_format("mphf: truncated input");
    };
    Mphf h;
    need(34);
    h.k_ = uint32_t(bits.get_bits(pos, 32));
    pos += 32;
    uint64_t tag = bits.get_bits(pos, 2);
    pos += 2;
    if (tag > 1) throw_format("mphf: unknown format tag");
    h.tag_ = Tag(tag);
    if (h.tag_ == Tag::SortedTable) {
        need(6);
        h.key_width_ = unsigned(bits.get_bits(pos, 6));
        pos += 6;
        if (h.k_ > 0 && h.key_width_ == 0) throw_format("mphf: zero key width");
        need(size_t(h.k_) * h.key_width_);
        h.sorted_keys_.reserve(h.k_);
        for (uint32_t i = 0; i < h.k_; ++i) {
            h.sorted_keys_.push_back(uint32_t(bits.get_bits(pos, h.key_width_)));
            pos += h.key_width_;
        }
        if (!std::is_sorted(h.sorted_keys_.begin(), h.sorted_keys_.end()))
            throw_format("mphf: key table not sorted");
    } else {
        need(72);
        h.level_seed_ = bits.get_bits(pos, 64);
        pos += 64;
        h.num_levels_ = uint32_t(bits.get_bits(pos, 8));
        pos += 8;
        size_t total = 0;
        for (uint32_t l = 0; l < h.num_levels_; ++l) total += mphf_level_size(h.k_, l);
        need(total);
        h.bitmaps_ = bits.slice(pos, total);
        pos += total;
        h.rebuild_rank();
    }
    return h;
}

Mphf Mphf::deserialize(const BitString& bits) {
    size_t pos = 0;
    Mphf h = parse(bits, pos);
    if (pos != bits.size()) throw_format("mphf: trailing bits");
    return h;
}

} // namespace cartlabel
