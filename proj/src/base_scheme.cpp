#include "cartlabel/base_scheme.hpp"

#include <algorithm>

#include "cartlabel/error.hpp"

namespace cartlabel {

std::string scheme_name(SchemeId id) {
    switch (id) {
        case SchemeId::Clique: return "clique";
        case SchemeId::Path: return "path";
        case SchemeId::Cycle: return "cycle";
        case SchemeId::KnrDegeneracy: return "knr";
        case SchemeId::AdjacencyRow: return "row";
    }
    throw_format("bad scheme id");
}

SchemeId scheme_from_name(const std::string& name) {
    if (name == "clique") return SchemeId::Clique;
    if (name == "path") return SchemeId::Path;
    if (name == "cycle") return SchemeId::Cycle;
    if (name == "knr") return SchemeId::KnrDegeneracy;
    if (name == "row") return SchemeId::AdjacencyRow;
    throw_format("unknown base scheme '" + name + "'");
}

size_t BaseGeometry::label_bits() const {
    switch (scheme) {
        case SchemeId::Clique:
        case SchemeId::Path: return index_bits;
        case SchemeId::Cycle: return 2 * size_t(index_bits);
        case SchemeId::KnrDegeneracy: return (size_t(knr_slots) + 1) * index_bits;
        case SchemeId::AdjacencyRow: return size_t(index_bits) + n_param;
    }
    throw_format("bad scheme id");
}

BaseGeometry BaseGeometry::from_label_bits(SchemeId scheme, uint32_t n_param, size_t s) {
    BaseGeometry g;
    g.scheme = scheme;
    g.n_param = n_param;
    g.index_bits = bits_for_count(n_param);
    if (scheme == SchemeId::KnrDegeneracy) {
        if (g.index_bits == 0 || s % g.index_bits != 0 || s < g.index_bits)
            throw_format("label width inconsistent with knr layout");
        g.knr_slots = uint32_t(s / g.index_bits - 1);
    }
    if (g.label_bits() != s) throw_format("label width inconsistent with scheme layout");
    return g;
}

namespace {

bool is_complete(const Graph& g) {
    uint64_t n = g.num_vertices();
    return g.num_edges() == n * (n - 1) / 2;
}

bool is_path(const Graph& g) {
    uint32_t n = g.num_vertices();
    if (n == 0) return g.num_edges() == 0;
    if (g.num_edges() != size_t(n) - 1) return false;
    for (uint32_t u = 0; u + 1 < n; ++u)
        if (!g.adjacent(u, u + 1)) return false;
    return true;
}

bool is_cycle(const Graph& g) {
    uint32_t n = g.num_vertices();
    if (n < 3 || g.num_edges() != n) return false;
    for (uint32_t u = 0; u + 1 < n; ++u)
        if (!g.adjacent(u, u + 1)) return false;
    return g.adjacent(0, n - 1);
}

void check_membership(SchemeId scheme, const Graph& g) {
    switch (scheme) {
        case SchemeId::Clique:
            if (!is_complete(g)) throw_validation("graph is not a complete graph");
            return;
        case SchemeId::Path:
            if (!is_path(g)) throw_validation("graph is not the path 0-1-...-(n-1)");
            return;
        case SchemeId::Cycle:
            if (!is_cycle(g)) throw_validation("graph is not the cycle 0-1-...-(n-1)-0");
            return;
        case SchemeId::KnrDegeneracy:
        case SchemeId::AdjacencyRow: return; // any graph
    }
}

} // namespace

BaseGeometry make_geometry(SchemeId scheme, uint32_t n_param,
                           const std::vector<Graph>& graphs) {
    BaseGeometry geom;
    geom.scheme = scheme;
    geom.n_param = n_param;
    geom.index_bits = bits_for_count(n_param);
    for (const auto& g : graphs) {
        if (g.num_vertices() > n_param)
            throw_validation("factor larger than the encoding size parameter");
        check_membership(scheme, g);
        if (scheme == SchemeId::KnrDegeneracy)
            geom.knr_slots = std::max(geom.knr_slots, degeneracy_order(g).k);
    }
    return geom;
}

BaseGeometry own_geometry(SchemeId scheme, const Graph& g) {
    return make_geometry(scheme, g.num_vertices(), {g});
}

std::vector<BitString> encode_base(const BaseGeometry& geom, const Graph& g) {
    if (g.num_vertices() > geom.n_param)
        throw_validation("graph larger than the encoding size parameter");
    check_membership(geom.scheme, g);
    uint32_t n = g.num_vertices();
    unsigned L = geom.index_bits;
    std::vector<BitString> labels(n);

    switch (geom.scheme) {
        case SchemeId::Clique:
        case SchemeId::Path:
            for (uint32_t v = 0; v < n; ++v) labels[v].append_bits(v, L);
            break;
        case SchemeId::Cycle:
            for (uint32_t v = 0; v < n; ++v) {
                labels[v].append_bits(n - 1, L); // cycle length, offset by one
                labels[v].append_bits(v, L);
            }
            break;
        case SchemeId::KnrDegeneracy: {
            auto ord = degeneracy_order(g);
            if (ord.k > geom.knr_slots)
                throw_validation("graph degeneracy exceeds the encoding's knr slot count");
            for (uint32_t v = 0; v < n; ++v) {
                labels[v].append_bits(v, L);
                uint32_t used = 0;
                for (uint32_t u : g.neighbors(v)) {
                    if (ord.rank[u] > ord.rank[v]) {
                        labels[v].append_bits(u, L);
                        ++used;
                    }
                }
                for (; used < geom.knr_slots; ++used)
                    labels[v].append_bits(v, L); // own index marks an unused slot
            }
            break;
        }
        case SchemeId::AdjacencyRow:
            for (uint32_t v = 0; v < n; ++v) {
                labels[v].append_bits(v, L);
                for (uint32_t u = 0; u < geom.n_param; ++u)
                    labels[v].push_back(u < n && g.adjacent(v, u));
            }
            break;
    }
    return labels;
}

std::vector<BitString> encode_base(SchemeId scheme, const Graph& g) {
    return encode_base(own_geometry(scheme, g), g);
}

bool decode_base(const BaseGeometry& geom, const BitString& a, const BitString& b) {
    if (a.size() != geom.label_bits() || b.size() != geom.label_bits())
        throw_format("base label length mismatch");
    unsigned L = geom.index_bits;
    if (L == 0) return false; // single-vertex universe

    switch (geom.scheme) {
        case SchemeId::Clique:
            return a.get_bits(0, L) != b.get_bits(0, L);
        case SchemeId::Path: {
            uint64_t i = a.get_bits(0, L), j = b.get_bits(0, L);
            return (i > j ? i - j : j - i) == 1;
        }
        case SchemeId::Cycle: {
            uint64_t na = a.get_bits(0, L), nb = b.get_bits(0, L);
            if (na != nb) return false; // labels from different cycle lengths
            uint64_t len = na + 1;
            uint64_t i = a.get_bits(L, L), j = b.get_bits(L, L);
            uint64_t diff = i > j ? i - j : j - i;
            return diff == 1 || diff == len - 1;
        }
        case SchemeId::KnrDegeneracy: {
            uint64_t ia = a.get_bits(0, L), ib = b.get_bits(0, L);
            if (ia == ib) return false;
            for (uint32_t s = 1; s <= geom.knr_slots; ++s) {
                if (a.get_bits(size_t(s) * L, L) == ib) return true;
                if (b.get_bits(size_t(s) * L, L) == ia) return true;
            }
            return false;
        }
        case SchemeId::AdjacencyRow: {
            uint64_t ia = a.get_bits(0, L), ib = b.get_bits(0, L);
            if (ia == ib) return false;
            return a.get_bit(L + size_t(ib)) || b.get_bit(L + size_t(ia));
        }
    }
    throw_format("bad scheme id");
}

} // namespace cartlabel
