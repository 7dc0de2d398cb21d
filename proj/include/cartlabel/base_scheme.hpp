#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cartlabel/bits.hpp"
#include "cartlabel/graph.hpp"

namespace cartlabel {

// Adjacency labeling schemes for the factor classes. Every label embeds
// the vertex's own index, so labels within one graph are pairwise
// distinct; all labels of one encoding share a single width so they can
// be XOR-aggregated across factors.
enum class SchemeId { Clique, Path, Cycle, KnrDegeneracy, AdjacencyRow };

std::string scheme_name(SchemeId id);
SchemeId scheme_from_name(const std::string& name);

// Shared layout of one encoding: the size parameter n (the product
// instance's vertex count, or the graph's own n when used standalone)
// fixes the index width; KNR additionally needs the worst factor
// degeneracy for its slot count.
struct BaseGeometry {
    SchemeId scheme = SchemeId::Clique;
    uint32_t n_param = 0;
    unsigned index_bits = 0;
    uint32_t knr_slots = 0; // KnrDegeneracy only

    size_t label_bits() const;

    // Derives knr_slots back from a serialized label width.
    static BaseGeometry from_label_bits(SchemeId scheme, uint32_t n_param, size_t s);
};

// Validates class membership of all graphs and fixes the shared layout.
BaseGeometry make_geometry(SchemeId scheme, uint32_t n_param,
                           const std::vector<Graph>& graphs);

// Labels of exactly geometry.label_bits() bits each.
std::vector<BitString> encode_base(const BaseGeometry& geom, const Graph& g);

// Standalone convenience: geometry taken from the graph itself.
std::vector<BitString> encode_base(SchemeId scheme, const Graph& g);
BaseGeometry own_geometry(SchemeId scheme, const Graph& g);

// Symmetric, stateless; labels must have the geometry's width.
bool decode_base(const BaseGeometry& geom, const BitString& a, const BitString& b);

} // namespace cartlabel
