#include "doctest.h"

#include <algorithm>
#include <vector>

#include "cartlabel/error.hpp"
#include "cartlabel/mphf.hpp"
#include "cartlabel/prf.hpp"

using namespace cartlabel;

namespace {
// Deterministic distinct keys in [m].
std::vector<uint32_t> draw_keys(uint64_t seed, uint32_t k, uint32_t m) {
    std::vector<uint32_t> keys;
    keys.reserve(k);
    uint64_t t = 0;
    while (keys.size() < k) {
        uint32_t v = uint32_t(prf(seed, t++) % m);
        if (std::find(keys.begin(), keys.end(), v) == keys.end()) keys.push_back(v);
    }
    return keys;
}

void check_bijective(const Mphf& h, const std::vector<uint32_t>& keys) {
    std::vector<bool> hit(keys.size(), false);
    for (uint32_t key : keys) {
        uint32_t v = h.eval(key);
        REQUIRE(v < keys.size());
        REQUIRE_FALSE(hit[v]);
        hit[v] = true;
    }
}
} // namespace

TEST_CASE("empty and singleton key sets") {
    Mphf empty = Mphf::build({}, 10, 1);
    CHECK(empty.key_count() == 0);
    CHECK(empty.eval(3) == 0);
    Mphf one = Mphf::build({7}, 10, 1);
    CHECK(one.eval(7) == 0);
    CHECK(Mphf::deserialize(one.serialize()).eval(7) == 0);
}

TEST_CASE("bijective on randomized key sets") {
    for (uint64_t trial = 0; trial < 60; ++trial) {
        uint32_t k = 1 + uint32_t(prf(trial, 0) % 300);
        uint32_t m = k + uint32_t(prf(trial, 1) % (1u << 16));
        auto keys = draw_keys(prf(trial, 2), k, m);
        Mphf h = Mphf::build(keys, m, prf(trial, 3));
        check_bijective(h, keys);
    }
}

TEST_CASE("size budget holds") {
    for (uint64_t trial = 0; trial < 30; ++trial) {
        uint32_t k = 1 + uint32_t(prf(101, trial) % 512);
        uint32_t m = k + uint32_t(prf(102, trial) % (1u << 18));
        auto keys = draw_keys(prf(103, trial), k, m);
        Mphf h = Mphf::build(keys, m, prf(104, trial));
        size_t budget = 4 * size_t(k) + (k >= 64 ? 64 : 98);
        CHECK(h.bit_size() <= budget);
        CHECK(h.serialize().size() == h.bit_size());
    }
}

TEST_CASE("serialization round trip is bit-exact") {
    auto keys = draw_keys(42, 200, 1u << 15);
    Mphf h = Mphf::build(keys, 1u << 15, 9);
    BitString bits = h.serialize();
    Mphf back = Mphf::deserialize(bits);
    CHECK(back.serialize() == bits);
    check_bijective(back, keys);
}

TEST_CASE("parse advances past one embedded function") {
    auto keys = draw_keys(5, 33, 1000);
    Mphf h = Mphf::build(keys, 1000, 77);
    BitString stream;
    stream.append_bits(0b101, 3);
    stream.append(h.serialize());
    stream.append_bits(0b0110, 4);
    size_t pos = 3;
    Mphf back = Mphf::parse(stream, pos);
    CHECK(pos == 3 + h.bit_size());
    check_bijective(back, keys);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(Mphf::build({1, 1, 2}, 10, 0), Error);
    CHECK_THROWS_AS(Mphf::build({0, 10}, 10, 0), Error);
}

TEST_CASE("malformed serializations are rejected") {
    auto keys = draw_keys(8, 100, 5000);
    BitString bits = Mphf::build(keys, 5000, 3).serialize();
    CHECK_THROWS_AS(Mphf::deserialize(bits.slice(0, bits.size() - 8)), Error);
    BitString padded = bits;
    padded.push_back(false);
    CHECK_THROWS_AS(Mphf::deserialize(padded), Error);
    CHECK_THROWS_AS(Mphf::deserialize(BitString(12)), Error);
}

TEST_CASE("level size schedule is nonincreasing with a small fixpoint") {
    CHECK(mphf_level_size(100, 0) == 100);
    uint64_t prev = mphf_level_size(1000, 0);
    for (uint32_t l = 1; l < 48; ++l) {
        uint64_t s = mphf_level_size(1000, l);
        CHECK(s >= 1);
        CHECK(s <= prev);
        prev = s;
    }
    CHECK(mphf_level_size(1000, 47) <= 2);
}

TEST_CASE("foreign keys evaluate in range without throwing") {
    auto keys = draw_keys(13, 128, 4096);
    Mphf h = Mphf::build(keys, 4096, 21);
    for (uint32_t probe = 0; probe < 4096; probe += 37) CHECK(h.eval(probe) < 128);
}
