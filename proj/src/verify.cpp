#include "cartlabel/verify.hpp"

#include <chrono>
#include <cmath>
#include <ostream>

#include "cartlabel/graph.hpp"
#include "cartlabel/hamming.hpp"
#include "cartlabel/prf.hpp"

namespace cartlabel {

bool oracle_adjacent(const ProductInstance& inst, uint32_t x, uint32_t y) {
    if (!inst.product_edge(x, y)) return false;
    return inst.induced_mode() || inst.has_explicit_edge(x, y);
}

VerifyReport verify_all_pairs(const ProductInstance& inst, const Decoder& dec,
                              const std::vector<BitString>& labels, uint32_t cap,
                              uint64_t sample_seed) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep;
    uint32_t n = uint32_t(labels.size());
    auto check = [&](uint32_t x, uint32_t y) {
        bool expected = oracle_adjacent(inst, x, y);
        bool got = dec.decode(labels[x], labels[y]);
        ++rep.pairs_checked;
        if (expected != got) rep.mismatches.push_back({x, y, expected, got});
    };
    if (n <= cap) {
        for (uint32_t x = 0; x < n; ++x)
            for (uint32_t y = x + 1; y < n; ++y) check(x, y);
    } else {
        rep.sampled = true;
        constexpr size_t kSamples = 1000000;
        for (size_t t = 0; t < kSamples; ++t) {
            uint32_t x = uint32_t(prf(sample_seed, t, 0) % n);
            uint32_t y = uint32_t(prf(sample_seed, t, 1) % n);
            if (x != y) check(std::min(x, y), std::max(x, y));
        }
    }
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

Phase1Stats stat_test_phase1(unsigned d, uint32_t sigma_size, size_t trials,
                             uint64_t seed) {
    if (d < 2 || sigma_size < 2) throw_validation("stat test needs d >= 2 and |Sigma| >= 2");
    Phase1Stats st;
    st.trials = trials;
    size_t accept1 = 0, accept2 = 0;
    for (size_t t = 0; t < trials; ++t) {
        uint64_t rk = prf(seed, t);
        Tuple x(d), y1(d), y2(d);
        for (unsigned j = 0; j < d; ++j) x[j] = uint32_t(prf(rk, 1, j) % sigma_size);
        // distance-1 partner: change one coordinate
        y1 = x;
        unsigned c1 = unsigned(prf(rk, 2) % d);
        y1[c1] = (x[c1] + 1 + uint32_t(prf(rk, 3) % (sigma_size - 1))) % sigma_size;
        // distance-2 partner: change two distinct coordinates
        y2 = x;
        unsigned c2 = unsigned(prf(rk, 4) % (d - 1));
        if (c2 >= c1) ++c2;
        y2[c1] = y1[c1];
        y2[c2] = (x[c2] + 1 + uint32_t(prf(rk, 5) % (sigma_size - 1))) % sigma_size;

        uint64_t copy_seed = prf(rk, 6);
        auto a = alphabet_copy({x, y1, y2}, copy_seed, 0);
        if (copy_accepts(a[0], a[1])) ++accept1;
        if (copy_accepts(a[0], a[2])) ++accept2;
    }
    st.dist1_accept_rate = double(accept1) / double(trials);
    st.distgt1_accept_rate = double(accept2) / double(trials);
    double p = 15.0 / 16.0;
    st.ci_halfwidth = 3.0 * std::sqrt(p * (1.0 - p) / double(trials));
    return st;
}

double exhaustive_binary_antipodal_rate() {
    Tuple x = {0, 0}, y = {1, 1};
    size_t accept = 0;
    for (uint8_t p0 = 0; p0 < 4; ++p0) {
        for (uint8_t p1 = 0; p1 < 4; ++p1) {
            auto nibs = binary_copy_with_partition({x, y}, {p0, p1});
            if (copy_accepts(nibs[0], nibs[1])) ++accept;
        }
    }
    return double(accept) / 16.0;
}

SizeReport bench_one(const std::string& family, const ProductInstance& inst,
                     EncodeMode mode, SchemeId scheme, uint64_t seed, QMode qmode) {
    SizeReport r;
    r.family = family;
    r.n = uint32_t(inst.num_tuples());
    r.mode = mode == EncodeMode::Induced ? "induced" : "subgraph";

    Encoding enc;
    if (mode == EncodeMode::Induced) {
        enc = encode_induced(inst, scheme, seed, qmode);
    } else {
        const ProductInstance* p = &inst;
        ProductInstance asExplicit = inst;
        if (inst.induced_mode()) {
            asExplicit = ProductInstance::make(inst.factors(), inst.tuples(),
                                               inst.induced_edges());
            p = &asExplicit;
        }
        enc = encode_subgraph(*p, scheme, seed, qmode);
    }
    LabelStats st = label_stats(enc.desc, enc.labels);
    r.max_bits = st.max_bits;
    r.mean_bits = st.mean_bits;
    r.phase1_bits = st.phase1_bits;
    r.xor_bits = st.xor_bits;
    r.phase3_bits = st.phase3_max_bits;

    Graph g = inst.realize();
    r.kG = degeneracy_order(g).k;
    r.kH = inst.induced_mode() ? r.kG
                               : degeneracy_order(Graph(r.n, inst.induced_edges())).k;
    r.baseline_bits = (size_t(r.kG) + 1) * bits_for_count(r.n);
    return r;
}

void write_csv_header(std::ostream& out) {
    out << "family,n,mode,max_bits,mean_bits,phase1_bits,xor_bits,phase3_bits,"
           "baseline_bits,kH,kG\n";
}

void write_csv_row(std::ostream& out, const SizeReport& r) {
    out << r.family << "," << r.n << "," << r.mode << "," << r.max_bits << ","
        << r.mean_bits << "," << r.phase1_bits << "," << r.xor_bits << ","
        << r.phase3_bits << "," << r.baseline_bits << "," << r.kH << "," << r.kG << "\n";
}

} // namespace cartlabel
