#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cartlabel/error.hpp"
#include "cartlabel/graph.hpp"
#include "cartlabel/instance.hpp"
#include "cartlabel/labeler.hpp"
#include "cartlabel/verify.hpp"

using namespace cartlabel;

namespace {

// Exit codes: 0 ok, 1 semantic mismatch / build failure, 2 usage, 3 format.
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFormat = 3;

constexpr uint64_t kDefaultSeed = 0x5eed0001; // documented default, see README

uint64_t parse_seed(const std::string& hex) {
    if (hex.empty() || hex.size() > 16) throw Error(ErrorKind::Usage, "bad --seed value");
    uint64_t v = 0;
    for (char c : hex) {
        v <<= 4;
        if (c >= '0' && c <= '9') v |= uint64_t(c - '0');
        else if (c >= 'a' && c <= 'f') v |= uint64_t(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') v |= uint64_t(c - 'A' + 10);
        else throw Error(ErrorKind::Usage, "bad --seed value");
    }
    return v;
}

std::vector<uint32_t> parse_u32_list(const std::string& s) {
    std::vector<uint32_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(uint32_t(std::stoul(tok)));
    if (out.empty()) throw Error(ErrorKind::Usage, "empty list '" + s + "'");
    return out;
}

ProductInstance gen_family(const std::string& family, unsigned d, uint32_t a,
                           const std::string& dims, const std::string& gprime_path,
                           uint32_t n, double density, uint64_t seed) {
    if (family == "hypercube") return gen_hypercube(d);
    if (family == "hamming") return gen_hamming(d, a);
    if (family == "grid") return gen_grid(parse_u32_list(dims));
    if (family == "dense-monotone") {
        if (gprime_path.empty())
            throw Error(ErrorKind::Usage, "dense-monotone needs --gprime <file.gr>");
        return gen_dense_monotone(load_gr(gprime_path), n);
    }
    if (family == "random-sub") {
        throw Error(ErrorKind::Usage,
                    "random-sub needs a base family via --base-family");
    }
    throw Error(ErrorKind::Usage, "unknown family '" + family + "'");
}

int run(int argc, char** argv) {
    CLI::App app{"Adjacency labels for subgraphs of Cartesian products"};
    app.require_subcommand(1);

    std::string seed_hex = "5eed0001";
    app.add_option("--seed", seed_hex, "master seed, hex")->capture_default_str();
    app.fallthrough(); // let subcommands accept the global --seed

    // gen
    auto* gen = app.add_subcommand("gen", "generate a product instance (.cpi)");
    std::string family, base_family = "hypercube", dims = "5,5", gprime_path, gen_out;
    unsigned gd = 3;
    uint32_t ga = 3, gn = 16;
    double density = 0.5;
    gen->add_option("family", family,
                    "hypercube | hamming | grid | random-sub | dense-monotone")
        ->required();
    gen->add_option("--d", gd, "dimension (hypercube, hamming)");
    gen->add_option("--a", ga, "alphabet size (hamming)");
    gen->add_option("--dims", dims, "comma-separated grid side lengths");
    gen->add_option("--gprime", gprime_path, ".gr file (dense-monotone)");
    gen->add_option("--n", gn, "target vertex count (dense-monotone)");
    gen->add_option("--density", density, "edge keep probability (random-sub)");
    gen->add_option("--base-family", base_family, "base family for random-sub");
    gen->add_option("-o,--out", gen_out, "output .cpi path")->required();

    // encode
    auto* enc_cmd = app.add_subcommand("encode", "encode an instance to labels (.lbl)");
    std::string enc_in, enc_out, enc_mode = "auto", base_name = "knr", q_mode = "paper";
    uint32_t cap = 1u << 13;
    enc_cmd->add_option("instance", enc_in, "input .cpi path")->required();
    enc_cmd->add_option("-o,--out", enc_out, "output .lbl path")->required();
    enc_cmd->add_option("--mode", enc_mode, "induced | subgraph | auto");
    enc_cmd->add_option("--base", base_name, "clique | path | cycle | knr | row");
    enc_cmd->add_option("--q-mode", q_mode, "paper | adaptive");
    enc_cmd->add_option("--cap", cap, "exhaustive verification cap (vertices)");

    // query
    auto* query = app.add_subcommand("query", "decode adjacency from two labels");
    std::string q_lbl;
    uint32_t qx = 0, qy = 0;
    query->add_option("labels", q_lbl, ".lbl path")->required();
    query->add_option("x", qx)->required();
    query->add_option("y", qy)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "check decode against the oracle");
    std::string v_cpi, v_lbl;
    verify->add_option("instance", v_cpi, ".cpi path")->required();
    verify->add_option("labels", v_lbl, ".lbl path")->required();
    verify->add_option("--cap", cap, "exhaustive verification cap (vertices)");

    // stats
    auto* stats = app.add_subcommand("stats", "label size breakdown");
    std::string s_lbl;
    stats->add_option("labels", s_lbl, ".lbl path")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "size benchmark, CSV output");
    std::string b_family = "hypercube", b_params = "8,9,10", b_modes = "induced",
                b_base = "clique", b_out;
    bench->add_option("--family", b_family, "hypercube | hamming | grid");
    bench->add_option("--params", b_params,
                      "comma-separated family parameters (d or grid side)");
    bench->add_option("--modes", b_modes, "comma list of induced,subgraph");
    bench->add_option("--base", b_base, "base scheme");
    bench->add_option("--q-mode", q_mode, "paper | adaptive");
    bench->add_option("-o,--out", b_out, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    uint64_t seed = parse_seed(seed_hex);
    QMode qm = q_mode == "adaptive" ? QMode::Adaptive : QMode::Paper;

    if (*gen) {
        ProductInstance inst = family == "random-sub"
                                   ? gen_random_sub(gen_family(base_family, gd, ga, dims,
                                                               gprime_path, gn, density,
                                                               seed),
                                                    density, seed)
                                   : gen_family(family, gd, ga, dims, gprime_path, gn,
                                                density, seed);
        save_cpi(gen_out, inst);
        std::cout << "wrote " << gen_out << ": " << inst.num_tuples() << " vertices, "
                  << inst.dims() << " factors\n";
    } else if (*enc_cmd) {
        ProductInstance inst = load_cpi(enc_in);
        SchemeId scheme = scheme_from_name(base_name);
        bool subgraph = enc_mode == "subgraph" ||
                        (enc_mode == "auto" && !inst.induced_mode());
        Encoding enc = subgraph ? encode_subgraph(inst, scheme, seed, qm, cap)
                                : encode_induced(inst, scheme, seed, qm, cap);
        save_lbl(enc_out, enc);
        LabelStats st = label_stats(enc.desc, enc.labels);
        std::cout << "wrote " << enc_out << ": n=" << enc.desc.n << " q=" << enc.desc.q
                  << " s=" << enc.desc.s << " max_bits=" << st.max_bits
                  << " phase1_attempts=" << enc.phase1_attempts
                  << " lift_attempts=" << enc.lift_attempts << "\n";
    } else if (*query) {
        std::ifstream in(q_lbl);
        if (!in) throw_format("cannot open " + q_lbl);
        EncodingDescriptor desc = read_lbl_header(in);
        if (qx >= desc.n || qy >= desc.n) {
            std::cerr << "vertex out of range\n";
            return kExitUsage;
        }
        // Scan label lines once, parsing only the two requested ones.
        BitString lx, ly;
        bool have_x = false, have_y = false;
        std::string line;
        while (std::getline(in, line) && !(have_x && have_y)) {
            if (line.empty()) continue;
            std::istringstream ss(line);
            uint32_t idx;
            if (!(ss >> idx)) throw_format(".lbl: bad label line");
            if (idx != qx && idx != qy) continue;
            size_t bitlen;
            std::string hex;
            if (!(ss >> bitlen >> hex)) throw_format(".lbl: bad label line");
            BitString l = (hex == "-" && bitlen == 0) ? BitString()
                                                      : BitString::from_hex(hex, bitlen);
            if (idx == qx && !have_x) {
                lx = l;
                have_x = true;
            }
            if (idx == qy && !have_y) {
                ly = l;
                have_y = true;
            }
        }
        if (!have_x || !have_y) {
            std::cerr << "missing label for queried vertex\n";
            return kExitUsage;
        }
        Decoder dec(desc);
        std::cout << (dec.decode(lx, ly) ? "adjacent" : "not-adjacent") << "\n";
    } else if (*verify) {
        ProductInstance inst = load_cpi(v_cpi);
        Encoding enc = load_lbl(v_lbl);
        if (inst.num_tuples() != enc.desc.n)
            throw_format("instance and label file disagree on vertex count");
        Decoder dec(enc.desc);
        VerifyReport rep = verify_all_pairs(inst, dec, enc.labels, cap);
        std::cout << "pairs_checked=" << rep.pairs_checked
                  << (rep.sampled ? " (sampled)" : "") << " mismatches="
                  << rep.mismatches.size() << " wall_seconds=" << rep.wall_seconds
                  << "\n";
        for (size_t i = 0; i < rep.mismatches.size() && i < 20; ++i) {
            const auto& m = rep.mismatches[i];
            std::cout << "mismatch: pair (" << m.x << "," << m.y << ") expected "
                      << m.expected << " got " << m.got << "\n";
        }
        if (!rep.passed()) return kExitMismatch;
    } else if (*stats) {
        Encoding enc = load_lbl(s_lbl);
        LabelStats st = label_stats(enc.desc, enc.labels);
        std::cout << "mode="
                  << (enc.desc.mode == EncodeMode::Induced ? "induced" : "subgraph")
                  << " n=" << enc.desc.n << " q=" << enc.desc.q << " s=" << enc.desc.s
                  << " k=" << enc.desc.k << "\n";
        std::cout << "phase1_bits=" << st.phase1_bits << " xor_bits=" << st.xor_bits
                  << " phase3_max_bits=" << st.phase3_max_bits << "\n";
        std::cout << "max_bits=" << st.max_bits << " mean_bits=" << st.mean_bits << "\n";
    } else if (*bench) {
        std::ostream* out = &std::cout;
        std::ofstream fout;
        if (!b_out.empty()) {
            fout.open(b_out);
            if (!fout) throw_format("cannot open " + b_out + " for writing");
            out = &fout;
        }
        SchemeId scheme = scheme_from_name(b_base);
        write_csv_header(*out);
        for (uint32_t p : parse_u32_list(b_params)) {
            ProductInstance inst =
                b_family == "hypercube" ? gen_hypercube(p)
                : b_family == "hamming" ? gen_hamming(p, ga)
                : b_family == "grid"
                    ? gen_grid(std::vector<uint32_t>{p, p})
                    : throw Error(ErrorKind::Usage, "unknown bench family");
            std::stringstream modes(b_modes);
            std::string mode;
            while (std::getline(modes, mode, ',')) {
                EncodeMode m = mode == "subgraph" ? EncodeMode::Subgraph
                                                  : EncodeMode::Induced;
                write_csv_row(*out, bench_one(b_family, inst, m, scheme, seed, qm));
            }
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::Usage: return kExitUsage;
            case ErrorKind::Format: return kExitFormat;
            default: return kExitMismatch;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
}
