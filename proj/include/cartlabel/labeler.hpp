#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cartlabel/base_scheme.hpp"
#include "cartlabel/bits.hpp"
#include "cartlabel/hamming.hpp"
#include "cartlabel/instance.hpp"
#include "cartlabel/xor_lift.hpp"

namespace cartlabel {

enum class EncodeMode { Induced, Subgraph };
enum class QMode { Paper, Adaptive };

// Everything shared by all labels of one encoding. Together with the
// instance-independent zset it suffices to rebuild the decoder.
struct EncodingDescriptor {
    uint32_t version = 1;
    EncodeMode mode = EncodeMode::Induced;
    uint32_t n = 0;         // vertex (tuple) count
    uint64_t master_seed = 0;
    uint32_t q = 0;         // Phase-1 copies actually used
    unsigned id_bits = 0;   // ceil(log2 n)
    size_t s = 0;           // base label bits
    uint32_t k = 0;         // Subgraph mode: degeneracy of the induced supergraph H
    SchemeId base = SchemeId::Clique;
    uint64_t lift_seed = 0; // the lift seed that verified (also rederivable)
    std::vector<BitString> zset; // base labels in the lift's canonical order

    size_t phase1_bits() const { return 4 * size_t(q) + id_bits; }
    size_t induced_bits() const { return phase1_bits() + 4 * s; }
};

struct Encoding {
    EncodingDescriptor desc;
    std::vector<BitString> labels;
    uint32_t phase1_attempts = 0;
    uint32_t lift_attempts = 0;
};

// Lemma-level composition: Phase-1 sketch over the tuple set, base labels
// per factor, one shared XOR lift, per-vertex XOR aggregate.
Encoding encode_induced(const ProductInstance& inst, SchemeId scheme, uint64_t seed,
                        QMode qmode = QMode::Paper, uint32_t verify_cap = 1u << 13);

// Subgraph mode: the induced encoding of the supergraph H plus per-vertex
// rank, minimal perfect hash over later H-neighbors, and kept-edge bits.
Encoding encode_subgraph(const ProductInstance& inst, SchemeId scheme, uint64_t seed,
                         QMode qmode = QMode::Paper, uint32_t verify_cap = 1u << 13);

// Stateless decoder state, rebuilt deterministically from the descriptor.
class Decoder {
public:
    explicit Decoder(const EncodingDescriptor& desc);

    const EncodingDescriptor& descriptor() const { return desc_; }
    bool decode(const BitString& label_x, const BitString& label_y) const;

private:
    EncodingDescriptor desc_;
    BaseGeometry geom_;
    XorLift lift_;
};

struct LabelStats {
    size_t max_bits = 0;
    double mean_bits = 0.0;
    size_t phase1_bits = 0;     // 4q + id_bits
    size_t xor_bits = 0;        // 4s
    size_t phase3_max_bits = 0; // rank + mphf + edge bitmap, subgraph mode only
    double phase3_mean_bits = 0.0;
};

LabelStats label_stats(const EncodingDescriptor& desc, const std::vector<BitString>& labels);

// .lbl text format: the descriptor header, the lift's base-label set, then
// one line per vertex `<index> <bitlen> <hex>`.
void write_lbl(std::ostream& out, const Encoding& enc);
Encoding read_lbl(std::istream& in);
void save_lbl(const std::string& path, const Encoding& enc);
Encoding load_lbl(const std::string& path);

// Header-only parse, for decode paths that must not read label lines.
EncodingDescriptor read_lbl_header(std::istream& in);
// Scans for the one label line with the given index; does not parse any
// other vertex's payload. Returns false if absent.
bool read_lbl_label(std::istream& in, uint32_t index, BitString& out);

} // namespace cartlabel
