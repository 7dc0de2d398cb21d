#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace cartlabel {

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
public:
    Graph() = default;
    // Edges are {u,v} pairs with u != v; duplicates and order are normalized.
    Graph(uint32_t n, std::vector<std::pair<uint32_t, uint32_t>> edges);

    uint32_t num_vertices() const { return n_; }
    size_t num_edges() const { return edges_.size(); }
    const std::vector<std::pair<uint32_t, uint32_t>>& edges() const { return edges_; }
    const std::vector<uint32_t>& neighbors(uint32_t v) const { return adj_[v]; }
    uint32_t degree(uint32_t v) const { return uint32_t(adj_[v].size()); }
    bool adjacent(uint32_t u, uint32_t v) const;

    uint32_t min_degree() const;

    // Induced subgraph on `verts` (need not be sorted); vertex i of the
    // result is verts[i].
    Graph induced(const std::vector<uint32_t>& verts) const;

    static Graph complete(uint32_t n);
    static Graph path(uint32_t n);
    static Graph cycle(uint32_t n);

private:
    uint32_t n_ = 0;
    std::vector<std::pair<uint32_t, uint32_t>> edges_; // u < v, sorted
    std::vector<std::vector<uint32_t>> adj_;           // sorted lists
};

// Vertex ordering from repeated min-degree removal, ties broken by
// smallest vertex index. `k` is the degeneracy: every vertex has at most
// k neighbors later in the order.
struct DegeneracyOrder {
    std::vector<uint32_t> order; // order[i] = vertex at position i
    std::vector<uint32_t> rank;  // rank[v] = position of v
    uint32_t k = 0;
};

DegeneracyOrder degeneracy_order(const Graph& g);

// Full Cartesian product of the factors, vertices enumerated as
// mixed-radix tuples (last factor varies fastest). Refuses to materialize
// products above `vertex_budget` vertices.
Graph cartesian_product(const std::vector<Graph>& factors,
                        uint64_t vertex_budget = uint64_t(1) << 24);

// Line-oriented .gr format: `c` comments, one `p <n> <m>` header, then m
// lines `e <u> <v>` with 0 <= u < v < n.
Graph read_gr(std::istream& in);
void write_gr(std::ostream& out, const Graph& g);
Graph load_gr(const std::string& path);
void save_gr(const std::string& path, const Graph& g);

} // namespace cartlabel
