#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cartlabel/error.hpp"
#include "cartlabel/prf.hpp"

namespace cartlabel {

// Immutable-after-build bit string. Bit 0 is the most significant bit:
// logical bit i lives in word i/64 at position 63 - (i % 64), so word-wise
// XOR and popcount agree with the logical bit order.
class BitString {
public:
    BitString() = default;

    explicit BitString(size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    size_t size() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }
    std::span<const uint64_t> words() const { return words_; }

    bool get_bit(size_t i) const {
        return (words_[i / 64] >> (63 - (i % 64))) & 1ULL;
    }

    void set_bit(size_t i, bool v) {
        uint64_t m = 1ULL << (63 - (i % 64));
        if (v) words_[i / 64] |= m; else words_[i / 64] &= ~m;
    }

    // Appends the low `width` bits of value, most significant first.
    void append_bits(uint64_t value, unsigned width) {
        for (unsigned j = 0; j < width; ++j) {
            bool bit = (value >> (width - 1 - j)) & 1ULL;
            push_back(bit);
        }
    }

    void append(const BitString& other) {
        for (size_t i = 0; i < other.nbits_; ++i) push_back(other.get_bit(i));
    }

    void push_back(bool bit) {
        if (nbits_ % 64 == 0) words_.push_back(0);
        ++nbits_;
        set_bit(nbits_ - 1, bit);
    }

    // Reads `width` <= 64 bits starting at `pos`, returned right-aligned.
    uint64_t get_bits(size_t pos, unsigned width) const {
        uint64_t v = 0;
        for (unsigned j = 0; j < width; ++j) v = (v << 1) | (get_bit(pos + j) ? 1 : 0);
        return v;
    }

    BitString slice(size_t pos, size_t len) const {
        BitString out;
        out.words_.reserve((len + 63) / 64);
        for (size_t i = 0; i < len; ++i) out.push_back(get_bit(pos + i));
        return out;
    }

    BitString operator^(const BitString& other) const {
        if (nbits_ != other.nbits_) throw_format("BitString XOR: length mismatch");
        BitString out = *this;
        for (size_t i = 0; i < words_.size(); ++i) out.words_[i] ^= other.words_[i];
        return out;
    }

    bool operator==(const BitString& other) const {
        return nbits_ == other.nbits_ && words_ == other.words_;
    }

    bool is_zero() const {
        for (uint64_t w : words_) if (w) return false;
        return true;
    }

    size_t popcount() const {
        size_t c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    uint64_t hash() const {
        return prf_absorb(nbits_, words_);
    }

    // Hex rendering of the bits read as a big-endian integer, padded to
    // ceil(nbits/4) digits. Round-trips exactly given the bit length.
    std::string to_hex() const {
        size_t ndigits = (nbits_ + 3) / 4;
        std::string out(ndigits, '0');
        size_t head = nbits_ % 4; // bits in the first digit (0 means 4)
        size_t pos = 0;
        for (size_t d = 0; d < ndigits; ++d) {
            unsigned w = (d == 0 && head != 0) ? unsigned(head) : 4u;
            uint64_t v = get_bits(pos, w);
            pos += w;
            out[d] = "0123456789abcdef"[v];
        }
        return out;
    }

    static BitString from_hex(const std::string& hex, size_t nbits) {
        size_t ndigits = (nbits + 3) / 4;
        if (hex.size() != ndigits)
            throw_format("hex payload has " + std::to_string(hex.size()) +
                         " digits, expected " + std::to_string(ndigits));
        BitString out;
        size_t head = nbits % 4;
        for (size_t d = 0; d < ndigits; ++d) {
            char c = hex[d];
            uint64_t v;
            if (c >= '0' && c <= '9') v = uint64_t(c - '0');
            else if (c >= 'a' && c <= 'f') v = uint64_t(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F') v = uint64_t(c - 'A' + 10);
            else throw_format(std::string("bad hex digit '") + c + "'");
            unsigned w = (d == 0 && head != 0) ? unsigned(head) : 4u;
            if (d == 0 && head != 0 && (v >> head) != 0)
                throw_format("hex payload wider than declared bit length");
            out.append_bits(v, w);
        }
        return out;
    }

private:
    size_t nbits_ = 0;
    std::vector<uint64_t> words_;
};

struct BitStringHash {
    size_t operator()(const BitString& b) const { return size_t(b.hash()); }
};

inline unsigned bits_for_count(uint64_t n) {
    // ceil(log2 n); 0 for n <= 1.
    unsigned b = 0;
    while ((uint64_t(1) << b) < n) ++b;
    return b;
}

} // namespace cartlabel
