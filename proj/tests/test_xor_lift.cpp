#include "doctest.h"

#include <algorithm>

#include "cartlabel/error.hpp"
#include "cartlabel/prf.hpp"
#include "cartlabel/xor_lift.hpp"

using namespace cartlabel;

namespace {
std::vector<BitString> all_width(unsigned s) {
    std::vector<BitString> z;
    for (uint64_t v = 0; v < (uint64_t(1) << s); ++v) {
        BitString b;
        b.append_bits(v, s);
        z.push_back(b);
    }
    return z;
}
} // namespace

TEST_CASE("two-element set lifts on the first good seed") {
    auto z = all_width(1);
    XorLift lift = XorLift::build(z, 5);
    CHECK(lift.lifted_bits() == 4);
    CHECK_FALSE(lift.lift(z[0]) == lift.lift(z[1]));
}

TEST_CASE("full 4-bit domain: injectivity over all pairs, modest retries") {
    std::vector<uint32_t> attempts;
    for (uint64_t seed = 0; seed < 100; ++seed) {
        XorLift lift = XorLift::build(all_width(4), seed);
        attempts.push_back(lift.attempts());
    }
    std::sort(attempts.begin(), attempts.end());
    CHECK(attempts[attempts.size() / 2] <= 2); // median
}

TEST_CASE("lift over KNR labels of Q3 is injective on pairs") {
    Graph q3 = cartesian_product({Graph::complete(2), Graph::complete(2), Graph::complete(2)});
    BaseGeometry geom = own_geometry(SchemeId::KnrDegeneracy, q3);
    auto labels = encode_base(geom, q3);
    XorLift lift = XorLift::build(labels, 11);
    // explicit collision check over the 28 pairs
    std::vector<BitString> xors;
    for (size_t i = 0; i < labels.size(); ++i)
        for (size_t j = i + 1; j < labels.size(); ++j)
            xors.push_back(lift.lift(labels[i]) ^ lift.lift(labels[j]));
    for (size_t i = 0; i < xors.size(); ++i) {
        CHECK_FALSE(xors[i].is_zero());
        for (size_t j = i + 1; j < xors.size(); ++j) CHECK_FALSE(xors[i] == xors[j]);
    }
}

TEST_CASE("xor_decode equals the base decoder on every pair") {
    Graph p3 = Graph::path(3);
    BaseGeometry geom = own_geometry(SchemeId::Path, p3);
    auto labels = encode_base(geom, p3);
    XorLift lift = XorLift::build(labels, 17);
    for (uint32_t i = 0; i < 3; ++i) {
        for (uint32_t j = i + 1; j < 3; ++j) {
            BitString w = lift.lift(labels[i]) ^ lift.lift(labels[j]);
            CHECK(xor_decode(lift, geom, w) == decode_base(geom, labels[i], labels[j]));
            CHECK(xor_decode(lift, geom, w) == p3.adjacent(i, j));
        }
    }
}

TEST_CASE("zero XOR word is undecodable") {
    auto z = all_width(2);
    XorLift lift = XorLift::build(z, 3);
    BaseGeometry geom = own_geometry(SchemeId::Clique, Graph::complete(4));
    CHECK_THROWS_AS(xor_decode(lift, geom, BitString(8)), Error);
}

TEST_CASE("deterministic rebuild from the same seed") {
    auto z = all_width(3);
    XorLift a = XorLift::build(z, 99);
    XorLift b = XorLift::build(z, 99);
    CHECK(a.lift_seed() == b.lift_seed());
    for (const auto& l : z) CHECK(a.lift(l) == b.lift(l));
}

TEST_CASE("lift width is exactly 4x base width") {
    for (unsigned s : {1u, 3u, 7u}) {
        auto z = all_width(std::min(s, 5u));
        XorLift lift = XorLift::build(z, s);
        CHECK(lift.lifted_bits() == 4 * lift.base_bits());
        CHECK(lift.lift(z[0]).size() == lift.lifted_bits());
    }
}

TEST_CASE("unknown base label is rejected") {
    auto z = all_width(2);
    XorLift lift = XorLift::build(z, 1);
    BitString foreign;
    foreign.append_bits(0, 3); // wrong width
    CHECK_THROWS_AS(lift.lift(foreign), Error);
}
