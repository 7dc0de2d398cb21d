#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cartlabel/instance.hpp"
#include "cartlabel/labeler.hpp"

namespace cartlabel {

// Brute-force adjacency: unique differing coordinate, factor edge, and
// (explicit mode) the edge was kept. Evaluated directly on the instance.
bool oracle_adjacent(const ProductInstance& inst, uint32_t x, uint32_t y);

struct Mismatch {
    uint32_t x, y;
    bool expected, got;
};

struct VerifyReport {
    size_t pairs_checked = 0;
    bool sampled = false;
    std::vector<Mismatch> mismatches;
    double wall_seconds = 0.0;

    bool passed() const { return mismatches.empty(); }
};

// Checks decode against the oracle on all pairs (exhaustive up to `cap`
// vertices, 1e6 sampled pairs above).
VerifyReport verify_all_pairs(const ProductInstance& inst, const Decoder& dec,
                              const std::vector<BitString>& labels,
                              uint32_t cap = 1u << 13, uint64_t sample_seed = 0x5eed);

// Monte Carlo rates for the per-copy sketch predicate over alphabet
// [sigma_size]^d pairs. dist <= 1 pairs must always be accepted; distance-2
// pairs are accepted with probability at most 15/16.
struct Phase1Stats {
    size_t trials = 0;
    double dist1_accept_rate = 0.0;
    double distgt1_accept_rate = 0.0;
    double ci_halfwidth = 0.0; // 3-sigma binomial band on the dist>1 rate
};

Phase1Stats stat_test_phase1(unsigned d, uint32_t sigma_size, size_t trials,
                             uint64_t seed);

// Exact acceptance fraction for the binary d=2 antipodal pair, enumerated
// over all 16 partition maps [2] -> [4].
double exhaustive_binary_antipodal_rate();

// One row of the size benchmark CSV.
struct SizeReport {
    std::string family;
    uint32_t n = 0;
    std::string mode;
    size_t max_bits = 0;
    double mean_bits = 0.0;
    size_t phase1_bits = 0;
    size_t xor_bits = 0;
    size_t phase3_bits = 0;
    size_t baseline_bits = 0; // (k(G)+1) * ceil(log2 n), the classic scheme
    uint32_t kH = 0;
    uint32_t kG = 0;
};

SizeReport bench_one(const std::string& family, const ProductInstance& inst,
                     EncodeMode mode, SchemeId scheme, uint64_t seed, QMode qmode);

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const SizeReport& r);

} // namespace cartlabel
