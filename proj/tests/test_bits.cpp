#include "doctest.h"

#include "cartlabel/bits.hpp"
#include "cartlabel/prf.hpp"

using namespace cartlabel;

TEST_CASE("append and read back fields") {
    BitString b;
    b.append_bits(0b101, 3);
    b.append_bits(0xcafe, 16);
    b.append_bits(1, 1);
    CHECK(b.size() == 20);
    CHECK(b.get_bits(0, 3) == 0b101);
    CHECK(b.get_bits(3, 16) == 0xcafe);
    CHECK(b.get_bit(19));
}

TEST_CASE("hex round trip at awkward lengths") {
    for (size_t nbits : {0u, 1u, 3u, 4u, 5u, 63u, 64u, 65u, 130u, 870u}) {
        BitString b;
        uint64_t seed = prf(nbits, 7);
        for (size_t i = 0; i < nbits; ++i) b.push_back(prf(seed, i) & 1);
        BitString back = BitString::from_hex(b.to_hex(), nbits);
        CHECK(back == b);
        CHECK(back.to_hex() == b.to_hex());
    }
}

TEST_CASE("hex rejects malformed input") {
    CHECK_THROWS_AS(BitString::from_hex("ff", 9), Error);   // wrong digit count
    CHECK_THROWS_AS(BitString::from_hex("fff", 9), Error);  // top digit overflows 1 bit
    CHECK_THROWS_AS(BitString::from_hex("zz", 8), Error);
}

TEST_CASE("xor and popcount agree with bitwise definition") {
    uint64_t seed = 42;
    BitString a, b;
    for (size_t i = 0; i < 200; ++i) {
        a.push_back(prf(seed, i, 0) & 1);
        b.push_back(prf(seed, i, 1) & 1);
    }
    BitString w = a ^ b;
    size_t expect = 0;
    for (size_t i = 0; i < 200; ++i) {
        bool x = a.get_bit(i) != b.get_bit(i);
        CHECK(w.get_bit(i) == x);
        expect += x;
    }
    CHECK(w.popcount() == expect);
    CHECK((a ^ a).is_zero());
}

TEST_CASE("slice preserves content") {
    BitString b;
    b.append_bits(0xdeadbeefcafef00dULL, 64);
    b.append_bits(0x3, 2);
    BitString s = b.slice(4, 32);
    CHECK(s.size() == 32);
    CHECK(s.get_bits(0, 32) == b.get_bits(4, 32));
}

TEST_CASE("bits_for_count") {
    CHECK(bits_for_count(1) == 0);
    CHECK(bits_for_count(2) == 1);
    CHECK(bits_for_count(3) == 2);
    CHECK(bits_for_count(1024) == 10);
    CHECK(bits_for_count(1025) == 11);
}
