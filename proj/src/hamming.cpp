#include "cartlabel/hamming.hpp"

#include <cmath>

#include "cartlabel/error.hpp"
#include "cartlabel/prf.hpp"

namespace cartlabel {

uint32_t DistanceOneParams::paper_q(uint32_t n) {
    if (n <= 1) return 0;
    double q = 2.0 * std::log2(double(n)) / std::log2(16.0 / 15.0);
    return uint32_t(std::ceil(q));
}

uint32_t DistanceOneParams::adaptive_q0(uint32_t n) {
    if (n <= 1) return 0;
    return uint32_t(std::ceil(4.0 * std::log2(double(n))));
}

DistanceOneParams DistanceOneParams::paper(uint32_t n) {
    DistanceOneParams p;
    p.n = n;
    p.q = paper_q(n);
    p.id_bits = bits_for_count(n);
    return p;
}

std::vector<uint8_t> binary_copy_with_partition(const std::vector<Tuple>& tuples,
                                                const std::vector<uint8_t>& p) {
    std::vector<uint8_t> out;
    out.reserve(tuples.size());
    for (const auto& x : tuples) {
        if (x.size() != p.size()) throw_validation("tuple length does not match partition map");
        uint8_t nib = 0;
        for (size_t j = 0; j < x.size(); ++j) nib ^= uint8_t((x[j] & 1u) << (p[j] & 3u));
        out.push_back(nib);
    }
    return out;
}

namespace {

std::vector<uint8_t> partition_map(uint64_t seed, uint32_t copy_index, size_t d) {
    uint64_t pkey = derive_seed(seed, subkey::Partition);
    std::vector<uint8_t> p(d);
    for (size_t j = 0; j < d; ++j) p[j] = uint8_t(prf(pkey, copy_index, j) & 3u);
    return p;
}

} // namespace

std::vector<uint8_t> binary_copy(const std::vector<Tuple>& tuples, uint64_t seed,
                                 uint32_t copy_index) {
    size_t d = tuples.empty() ? 0 : tuples[0].size();
    return binary_copy_with_partition(tuples, partition_map(seed, copy_index, d));
}

std::vector<uint8_t> alphabet_copy(const std::vector<Tuple>& tuples, uint64_t seed,
                                   uint32_t copy_index) {
    uint64_t qkey = derive_seed(seed, subkey::SymbolBit);
    std::vector<Tuple> reduced;
    reduced.reserve(tuples.size());
    for (const auto& x : tuples) {
        Tuple r(x.size());
        for (size_t j = 0; j < x.size(); ++j)
            r[j] = uint32_t(prf(qkey, copy_index, j, x[j]) & 1u);
        reduced.push_back(std::move(r));
    }
    return binary_copy(reduced, seed, copy_index);
}

bool nibbles_within_one(const BitString& x, const BitString& y, size_t nibbles) {
    auto xw = x.words();
    auto yw = y.words();
    size_t bits = 4 * nibbles;
    size_t full = bits / 64;
    constexpr uint64_t ones = 0x1111111111111111ULL;
    constexpr uint64_t hi = 0x6666666666666666ULL; // per-nibble "count >= 2" bits
    for (size_t i = 0; i < full; ++i) {
        uint64_t w = xw[i] ^ yw[i];
        if (!w) continue;
        uint64_t cnt = (w & ones) + ((w >> 1) & ones) + ((w >> 2) & ones) + ((w >> 3) & ones);
        if (cnt & hi) return false;
    }
    size_t tail = bits % 64;
    if (tail) {
        uint64_t mask = ~uint64_t(0) << (64 - tail);
        uint64_t w = (xw[full] ^ yw[full]) & mask;
        if (w) {
            uint64_t cnt =
                (w & ones) + ((w >> 1) & ones) + ((w >> 2) & ones) + ((w >> 3) & ones);
            if (cnt & hi) return false;
        }
    }
    return true;
}

bool decode_distance_one(const DistanceOneParams& params, const BitString& a,
                         const BitString& b) {
    if (a.size() != params.label_bits() || b.size() != params.label_bits())
        throw_format("distance-one label length mismatch");
    if (!nibbles_within_one(a, b, params.q)) return false;
    if (params.id_bits == 0) return false; // single element: never adjacent to itself
    return a.get_bits(4 * size_t(params.q), params.id_bits) !=
           b.get_bits(4 * size_t(params.q), params.id_bits);
}

namespace {

unsigned hamming_dist_capped(const Tuple& x, const Tuple& y) {
    unsigned d = 0;
    for (size_t j = 0; j < x.size(); ++j)
        if (x[j] != y[j] && ++d > 1) return 2; // only 0 / 1 / >=2 matter
    return d;
}

std::vector<BitString> draw_labels(const std::vector<Tuple>& tuples,
                                   const DistanceOneParams& params, uint64_t sketch_seed) {
    size_t n = tuples.size();
    std::vector<BitString> labels(n);
    for (auto& l : labels) l = BitString();
    for (uint32_t c = 0; c < params.q; ++c) {
        auto nibs = alphabet_copy(tuples, sketch_seed, c);
        for (size_t i = 0; i < n; ++i) labels[i].append_bits(nibs[i], 4);
    }
    for (size_t i = 0; i < n; ++i) labels[i].append_bits(uint64_t(i), params.id_bits);
    return labels;
}

// Returns the number of violating pairs (0 = verified). Exhaustive below
// the cap, sampled above it.
size_t verify_labels(const std::vector<Tuple>& tuples, const DistanceOneParams& params,
                     const std::vector<BitString>& labels, uint32_t verify_cap,
                     uint64_t sample_seed) {
    size_t n = tuples.size();
    size_t bad = 0;
    auto check = [&](size_t i, size_t j) {
        bool pass = nibbles_within_one(labels[i], labels[j], params.q);
        unsigned dist = hamming_dist_capped(tuples[i], tuples[j]);
        if (pass != (dist <= 1)) ++bad;
    };
    if (n <= verify_cap) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) check(i, j);
    } else {
        constexpr size_t kSamples = 1000000;
        for (size_t t = 0; t < kSamples; ++t) {
            size_t i = prf(sample_seed, t, 0) % n;
            size_t j = prf(sample_seed, t, 1) % n;
            if (i != j) check(std::min(i, j), std::max(i, j));
        }
    }
    return bad;
}

} // namespace

DistanceOneLabeling build_distance_one(const std::vector<Tuple>& tuples,
                                       const DistanceOneParams& params, uint64_t seed,
                                       uint32_t verify_cap) {
    if (tuples.empty()) throw_validation("distance-one build: empty element set");
    if (params.n != tuples.size()) throw_validation("distance-one build: params.n mismatch");

    size_t last_bad = 0;
    for (uint32_t attempt = 0; attempt < params.max_retries; ++attempt) {
        uint64_t sketch_seed = prf(seed, attempt);
        auto labels = draw_labels(tuples, params, sketch_seed);
        last_bad = verify_labels(tuples, params, labels, verify_cap, prf(sketch_seed, 0xbeef));
        if (last_bad == 0) {
            DistanceOneLabeling out;
            out.params = params;
            out.sketch_seed = sketch_seed;
            out.attempts = attempt + 1;
            out.labels = std::move(labels);
            return out;
        }
    }
    throw_build("distance-one build failed after " + std::to_string(params.max_retries) +
                " attempts; last attempt had " + std::to_string(last_bad) +
                " failing pairs (consider raising q)");
}

DistanceOneLabeling build_distance_one_adaptive(const std::vector<Tuple>& tuples,
                                                uint64_t seed, uint32_t verify_cap) {
    uint32_t n = uint32_t(tuples.size());
    uint32_t q_cap = DistanceOneParams::paper_q(n);
    uint32_t q = std::min(DistanceOneParams::adaptive_q0(n), q_cap);
    uint32_t total_attempts = 0;
    for (;;) {
        DistanceOneParams p = DistanceOneParams::paper(n);
        p.q = q;
        p.max_retries = (q < q_cap) ? 3 : 64;
        try {
            auto out = build_distance_one(tuples, p, prf(seed, q), verify_cap);
            out.attempts += total_attempts;
            return out;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Build || q >= q_cap) throw;
            total_attempts += p.max_retries;
            q = std::min(2 * q, q_cap);
        }
    }
}

} // namespace cartlabel
