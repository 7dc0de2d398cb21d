#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cartlabel/graph.hpp"

namespace cartlabel {

// Certificate that a graph lives inside a Cartesian product: factor
// graphs, the embedded set of d-tuples, and either "all induced product
// edges" or an explicit kept-edge list over tuple indices.
//
// Factors are restricted to their used vertices at construction, with
// tuple coordinates remapped accordingly.
class ProductInstance {
public:
    static ProductInstance make(std::vector<Graph> factors,
                                std::vector<std::vector<uint32_t>> tuples,
                                std::optional<std::vector<std::pair<uint32_t, uint32_t>>>
                                    explicit_edges = std::nullopt);

    size_t dims() const { return factors_.size(); }
    size_t num_tuples() const { return tuples_.size(); }
    const std::vector<Graph>& factors() const { return factors_; }
    const std::vector<std::vector<uint32_t>>& tuples() const { return tuples_; }
    bool induced_mode() const { return induced_mode_; }
    const std::vector<std::pair<uint32_t, uint32_t>>& explicit_edges() const {
        return explicit_edges_;
    }

    // True iff tuples a and b differ in exactly one coordinate and that
    // coordinate's pair is a factor edge.
    bool product_edge(uint32_t a, uint32_t b) const;
    // Explicit-mode membership test (edges stored sorted).
    bool has_explicit_edge(uint32_t a, uint32_t b) const;

    // Induced mode: graph induced by the tuple set. Explicit mode: exactly
    // the listed edges. Vertex i of the result is tuple i. Never
    // materializes the full product.
    Graph realize() const;

    // All tuple-index pairs passing the product-edge predicate.
    std::vector<std::pair<uint32_t, uint32_t>> induced_edges() const;

private:
    ProductInstance() = default;
    std::vector<Graph> factors_;
    std::vector<std::vector<uint32_t>> tuples_;
    bool induced_mode_ = true;
    std::vector<std::pair<uint32_t, uint32_t>> explicit_edges_; // u < v, sorted
};

// Instance generators. All Induced except gen_random_sub.
ProductInstance gen_hypercube(unsigned d, uint64_t vertex_budget = uint64_t(1) << 24);
ProductInstance gen_hamming(unsigned d, uint32_t a, uint64_t vertex_budget = uint64_t(1) << 24);
ProductInstance gen_grid(const std::vector<uint32_t>& dims,
                         uint64_t vertex_budget = uint64_t(1) << 24);

// Explicit instance over the same tuples, keeping each induced edge
// independently with probability `density`; deterministic given seed.
ProductInstance gen_random_sub(const ProductInstance& base, double density, uint64_t seed);

// The copies-along-axes construction: enough copies of g_prime as factors
// that the union of axis sets reaches n vertices, anchored at vertex 0,
// with the overflow trimmed from the first axis. Realizes to exactly n
// vertices with at least n * min_degree(g_prime) / 4 edges.
ProductInstance gen_dense_monotone(const Graph& g_prime, uint32_t n);

// .cpi text format.
ProductInstance read_cpi(std::istream& in);
void write_cpi(std::ostream& out, const ProductInstance& inst);
ProductInstance load_cpi(const std::string& path);
void save_cpi(const std::string& path, const ProductInstance& inst);

} // namespace cartlabel
