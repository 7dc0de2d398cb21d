#include "cartlabel/labeler.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <unordered_set>

#include "cartlabel/error.hpp"
#include "cartlabel/graph.hpp"
#include "cartlabel/mphf.hpp"
#include "cartlabel/prf.hpp"

namespace cartlabel {

namespace {

struct InducedParts {
    EncodingDescriptor desc;
    std::vector<BitString> labels;
    uint32_t phase1_attempts = 0;
    uint32_t lift_attempts = 0;
};

InducedParts build_induced_parts(const ProductInstance& inst, SchemeId scheme,
                                 uint64_t seed, QMode qmode, uint32_t verify_cap) {
    uint32_t n = uint32_t(inst.num_tuples());
    if (n == 0) throw_validation("encode: empty instance");

    // Phase 1 over the tuple set.
    std::vector<Tuple> tuples = inst.tuples();
    uint64_t phase1_seed = derive_seed(seed, subkey::Phase1);
    DistanceOneLabeling p1 =
        qmode == QMode::Adaptive
            ? build_distance_one_adaptive(tuples, phase1_seed, verify_cap)
            : build_distance_one(tuples, DistanceOneParams::paper(n), phase1_seed,
                                 verify_cap);

    // Base labels per factor under a shared geometry, then one lift over
    // the union of labels actually used.
    BaseGeometry geom = make_geometry(scheme, n, inst.factors());
    std::vector<std::vector<BitString>> factor_labels;
    factor_labels.reserve(inst.dims());
    for (const auto& f : inst.factors()) factor_labels.push_back(encode_base(geom, f));

    std::unordered_set<BitString, BitStringHash> zset;
    for (const auto& fl : factor_labels) zset.insert(fl.begin(), fl.end());
    XorLift lift = XorLift::build(std::vector<BitString>(zset.begin(), zset.end()),
                                  derive_seed(seed, subkey::Lift));

    InducedParts out;
    out.desc.mode = EncodeMode::Induced;
    out.desc.n = n;
    out.desc.master_seed = seed;
    out.desc.q = p1.params.q;
    out.desc.id_bits = p1.params.id_bits;
    out.desc.s = geom.label_bits();
    out.desc.base = scheme;
    out.desc.lift_seed = lift.lift_seed();
    out.desc.zset = lift.z_set();
    out.phase1_attempts = p1.attempts;
    out.lift_attempts = lift.attempts();

    out.labels.reserve(n);
    for (uint32_t x = 0; x < n; ++x) {
        BitString agg(lift.lifted_bits());
        for (size_t j = 0; j < inst.dims(); ++j)
            agg = agg ^ lift.lift(factor_labels[j][inst.tuples()[x][j]]);
        BitString label = p1.labels[x];
        label.append(agg);
        out.labels.push_back(std::move(label));
    }
    return out;
}

} // namespace

Encoding encode_induced(const ProductInstance& inst, SchemeId scheme, uint64_t seed,
                        QMode qmode, uint32_t verify_cap) {
    if (!inst.induced_mode())
        throw_validation("encode_induced requires an induced-mode instance");
    auto parts = build_induced_parts(inst, scheme, seed, qmode, verify_cap);
    Encoding enc;
    enc.desc = std::move(parts.desc);
    enc.labels = std::move(parts.labels);
    enc.phase1_attempts = parts.phase1_attempts;
    enc.lift_attempts = parts.lift_attempts;
    return enc;
}

Encoding encode_subgraph(const ProductInstance& inst, SchemeId scheme, uint64_t seed,
                         QMode qmode, uint32_t verify_cap) {
    if (inst.induced_mode())
        throw_validation("encode_subgraph requires an explicit-edge instance");
    auto parts = build_induced_parts(inst, scheme, seed, qmode, verify_cap);
    uint32_t n = uint32_t(inst.num_tuples());

    // The induced supergraph H and a degeneracy order on it.
    Graph h(n, inst.induced_edges());
    DegeneracyOrder ord = degeneracy_order(h);

    Encoding enc;
    enc.desc = std::move(parts.desc);
    enc.desc.mode = EncodeMode::Subgraph;
    enc.desc.k = ord.k;
    enc.phase1_attempts = parts.phase1_attempts;
    enc.lift_attempts = parts.lift_attempts;

    uint64_t mphf_seed = derive_seed(seed, subkey::Mphf);
    enc.labels.reserve(n);
    for (uint32_t x = 0; x < n; ++x) {
        // Later H-neighbors keyed by their rank in the order.
        std::vector<uint32_t> later;
        for (uint32_t y : h.neighbors(x))
            if (ord.rank[y] > ord.rank[x]) later.push_back(y);
        std::vector<uint32_t> keys;
        keys.reserve(later.size());
        for (uint32_t y : later) keys.push_back(ord.rank[y]);
        Mphf hx = Mphf::build(keys, n, prf(mphf_seed, x));

        BitString edge_bits(later.size());
        for (uint32_t y : later)
            edge_bits.set_bit(hx.eval(ord.rank[y]), inst.has_explicit_edge(x, y));

        BitString label = parts.labels[x];
        label.append_bits(ord.rank[x], enc.desc.id_bits);
        label.append(hx.serialize());
        label.append(edge_bits);
        enc.labels.push_back(std::move(label));
    }
    return enc;
}

Decoder::Decoder(const EncodingDescriptor& desc) : desc_(desc) {
    geom_ = BaseGeometry::from_label_bits(desc.base, desc.n, desc.s);
    lift_ = XorLift::build(desc.zset, derive_seed(desc.master_seed, subkey::Lift));
    if (lift_.lift_seed() != desc.lift_seed)
        throw_format("descriptor lift seed does not match the rebuilt lift");
}

bool Decoder::decode(const BitString& a, const BitString& b) const {
    size_t iw = desc_.induced_bits();
    if (desc_.mode == EncodeMode::Induced) {
        if (a.size() != iw || b.size() != iw) throw_format("label length mismatch");
    } else if (a.size() < iw + desc_.id_bits || b.size() < iw + desc_.id_bits) {
        throw_format("label length mismatch");
    }

    // Phase 1: exactly one differing coordinate.
    if (!nibbles_within_one(a, b, desc_.q)) return false;
    if (desc_.id_bits == 0) return false;
    size_t idpos = 4 * size_t(desc_.q);
    if (a.get_bits(idpos, desc_.id_bits) == b.get_bits(idpos, desc_.id_bits)) return false;

    // Phase 2: the aggregate XOR collapses to the differing coordinate.
    size_t p1w = desc_.phase1_bits();
    BitString w = a.slice(p1w, 4 * desc_.s) ^ b.slice(p1w, 4 * desc_.s);
    bool h_adjacent = xor_decode(lift_, geom_, w);
    if (desc_.mode == EncodeMode::Induced || !h_adjacent) return h_adjacent;

    // Phase 3: the lower vertex's hash and edge bitmap decide deletion.
    uint64_t rank_a = a.get_bits(iw, desc_.id_bits);
    uint64_t rank_b = b.get_bits(iw, desc_.id_bits);
    const BitString& lo = rank_a < rank_b ? a : b;
    uint64_t hi_rank = rank_a < rank_b ? rank_b : rank_a;
    size_t pos = iw + desc_.id_bits;
    Mphf hx = Mphf::parse(lo, pos);
    if (hx.key_count() == 0) return false; // cannot happen for true H-edges
    uint32_t i = hx.eval(uint32_t(hi_rank));
    if (pos + hx.key_count() > lo.size()) throw_format("label truncated in edge bitmap");
    return lo.get_bit(pos + i);
}

LabelStats label_stats(const EncodingDescriptor& desc,
                       const std::vector<BitString>& labels) {
    LabelStats st;
    st.phase1_bits = desc.phase1_bits();
    st.xor_bits = 4 * desc.s;
    double total = 0, p3total = 0;
    for (const auto& l : labels) {
        st.max_bits = std::max(st.max_bits, l.size());
        total += double(l.size());
        if (desc.mode == EncodeMode::Subgraph) {
            size_t p3 = l.size() - desc.induced_bits();
            st.phase3_max_bits = std::max(st.phase3_max_bits, p3);
            p3total += double(p3);
        }
    }
    if (!labels.empty()) {
        st.mean_bits = total / double(labels.size());
        st.phase3_mean_bits = p3total / double(labels.size());
    }
    return st;
}

namespace {

std::string seed_hex(uint64_t seed) {
    std::ostringstream ss;
    ss << std::hex << std::setw(16) << std::setfill('0') << seed;
    return ss.str();
}

uint64_t parse_hex64(const std::string& s) {
    if (s.empty() || s.size() > 16) throw_format("bad hex seed '" + s + "'");
    uint64_t v = 0;
    for (char c : s) {
        v <<= 4;
        if (c >= '0' && c <= '9') v |= uint64_t(c - '0');
        else if (c >= 'a' && c <= 'f') v |= uint64_t(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') v |= uint64_t(c - 'A' + 10);
        else throw_format("bad hex seed '" + s + "'");
    }
    return v;
}

} // namespace

void write_lbl(std::ostream& out, const Encoding& enc) {
    const auto& d = enc.desc;
    out << "scheme cartlabel v1 mode "
        << (d.mode == EncodeMode::Induced ? "induced" : "subgraph") << " n " << d.n
        << " seed " << seed_hex(d.master_seed) << " q " << d.q << " s " << d.s << " k "
        << d.k << " base " << scheme_name(d.base) << "\n";
    out << "lift " << seed_hex(d.lift_seed) << "\n";
    out << "zset " << d.zset.size();
    for (const auto& z : d.zset) out << " " << (z.empty() ? "-" : z.to_hex());
    out << "\n";
    for (size_t i = 0; i < enc.labels.size(); ++i) {
        const auto& l = enc.labels[i];
        out << i << " " << l.size() << " " << (l.empty() ? "-" : l.to_hex()) << "\n";
    }
}

EncodingDescriptor read_lbl_header(std::istream& in) {
    EncodingDescriptor d;
    std::string w, mode, base, seed, lift;
    auto expect = [&](const std::string& e) {
        if (!(in >> w) || w != e) throw_format(".lbl: expected '" + e + "' in header");
    };
    expect("scheme");
    expect("cartlabel");
    expect("v1");
    expect("mode");
    if (!(in >> mode)) throw_format(".lbl: bad mode");
    if (mode == "induced") d.mode = EncodeMode::Induced;
    else if (mode == "subgraph") d.mode = EncodeMode::Subgraph;
    else throw_format(".lbl: unknown mode '" + mode + "'");
    expect("n");
    if (!(in >> d.n)) throw_format(".lbl: bad n");
    expect("seed");
    if (!(in >> seed)) throw_format(".lbl: bad seed");
    d.master_seed = parse_hex64(seed);
    expect("q");
    if (!(in >> d.q)) throw_format(".lbl: bad q");
    expect("s");
    if (!(in >> d.s)) throw_format(".lbl: bad s");
    expect("k");
    if (!(in >> d.k)) throw_format(".lbl: bad k");
    expect("base");
    if (!(in >> base)) throw_format(".lbl: bad base scheme");
    d.base = scheme_from_name(base);
    d.id_bits = bits_for_count(d.n);
    expect("lift");
    if (!(in >> lift)) throw_format(".lbl: bad lift seed");
    d.lift_seed = parse_hex64(lift);
    expect("zset");
    size_t nz;
    if (!(in >> nz)) throw_format(".lbl: bad zset count");
    d.zset.reserve(nz);
    for (size_t i = 0; i < nz; ++i) {
        std::string hex;
        if (!(in >> hex)) throw_format(".lbl: truncated zset");
        d.zset.push_back(hex == "-" ? BitString() : BitString::from_hex(hex, d.s));
    }
    in >> std::ws;
    return d;
}

bool read_lbl_label(std::istream& in, uint32_t index, BitString& out) {
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        uint32_t idx;
        if (!(ss >> idx)) throw_format(".lbl: bad label line");
        if (idx != index) continue; // skip without parsing the payload
        size_t bitlen;
        std::string hex;
        if (!(ss >> bitlen >> hex)) throw_format(".lbl: bad label line");
        out = (hex == "-" && bitlen == 0) ? BitString() : BitString::from_hex(hex, bitlen);
        return true;
    }
    return false;
}

Encoding read_lbl(std::istream& in) {
    Encoding enc;
    enc.desc = read_lbl_header(in);
    enc.labels.assign(enc.desc.n, BitString());
    std::vector<bool> seen(enc.desc.n, false);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        uint32_t idx;
        size_t bitlen;
        std::string hex;
        if (!(ss >> idx >> bitlen >> hex)) throw_format(".lbl: bad label line");
        if (idx >= enc.desc.n) throw_format(".lbl: label index out of range");
        if (seen[idx]) throw_format(".lbl: duplicate label index");
        seen[idx] = true;
        enc.labels[idx] =
            (hex == "-" && bitlen == 0) ? BitString() : BitString::from_hex(hex, bitlen);
    }
    for (uint32_t i = 0; i < enc.desc.n; ++i)
        if (!seen[i]) throw_format(".lbl: missing label for vertex " + std::to_string(i));
    return enc;
}

void save_lbl(const std::string& path, const Encoding& enc) {
    std::ofstream out(path);
    if (!out) throw_format("cannot open " + path + " for writing");
    write_lbl(out, enc);
}

Encoding load_lbl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw_format("cannot open " + path);
    return read_lbl(in);
}

} // namespace cartlabel
