#include "cartlabel/instance.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "cartlabel/error.hpp"
#include "cartlabel/prf.hpp"

namespace cartlabel {

ProductInstance ProductInstance::make(
    std::vector<Graph> factors, std::vector<std::vector<uint32_t>> tuples,
    std::optional<std::vector<std::pair<uint32_t, uint32_t>>> explicit_edges) {
    if (factors.empty()) throw_validation("instance needs at least one factor");
    size_t d = factors.size();
    for (const auto& t : tuples) {
        if (t.size() != d) throw_validation("tuple arity mismatch");
        for (size_t j = 0; j < d; ++j)
            if (t[j] >= factors[j].num_vertices())
                throw_validation("tuple coordinate out of factor range");
    }
    {
        auto sorted = tuples;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw_validation("duplicate tuples");
    }

    ProductInstance inst;
    // Restrict each factor to its used vertices and remap coordinates.
    inst.factors_.reserve(d);
    for (size_t j = 0; j < d; ++j) {
        std::set<uint32_t> used;
        for (const auto& t : tuples) used.insert(t[j]);
        std::vector<uint32_t> verts(used.begin(), used.end());
        std::vector<uint32_t> pos(factors[j].num_vertices(), 0);
        for (size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = uint32_t(i);
        inst.factors_.push_back(factors[j].induced(verts));
        for (auto& t : tuples) t[j] = pos[t[j]];
    }
    inst.tuples_ = std::move(tuples);

    if (explicit_edges) {
        inst.induced_mode_ = false;
        auto& es = *explicit_edges;
        for (auto& [u, v] : es) {
            if (u > v) std::swap(u, v);
            if (v >= inst.tuples_.size())
                throw_validation("explicit edge index out of range");
            if (!inst.product_edge(u, v))
                throw_validation("explicit edge {" + std::to_string(u) + "," +
                                 std::to_string(v) + "} violates the product-edge predicate");
        }
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
        inst.explicit_edges_ = std::move(es);
    }
    return inst;
}

bool ProductInstance::product_edge(uint32_t a, uint32_t b) const {
    if (a == b) return false;
    const auto& x = tuples_[a];
    const auto& y = tuples_[b];
    size_t diff = SIZE_MAX;
    for (size_t j = 0; j < x.size(); ++j) {
        if (x[j] != y[j]) {
            if (diff != SIZE_MAX) return false;
            diff = j;
        }
    }
    if (diff == SIZE_MAX) return false;
    return factors_[diff].adjacent(x[diff], y[diff]);
}

bool ProductInstance::has_explicit_edge(uint32_t a, uint32_t b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(explicit_edges_.begin(), explicit_edges_.end(),
                              std::make_pair(a, b));
}

std::vector<std::pair<uint32_t, uint32_t>> ProductInstance::induced_edges() const {
    std::vector<std::pair<uint32_t, uint32_t>> es;
    uint32_t n = uint32_t(tuples_.size());
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = a + 1; b < n; ++b)
            if (product_edge(a, b)) es.emplace_back(a, b);
    return es;
}

Graph ProductInstance::realize() const {
    if (induced_mode_) return Graph(uint32_t(tuples_.size()), induced_edges());
    return Graph(uint32_t(tuples_.size()), explicit_edges_);
}

namespace {

void check_budget(uint64_t size, uint64_t budget) {
    if (size > budget)
        throw_budget("instance size " + std::to_string(size) + " exceeds budget " +
                     std::to_string(budget));
}

std::vector<std::vector<uint32_t>> all_tuples(const std::vector<uint32_t>& radix) {
    uint64_t total = 1;
    for (uint32_t r : radix) total *= r;
    std::vector<std::vector<uint32_t>> out;
    out.reserve(total);
    std::vector<uint32_t> t(radix.size(), 0);
    for (uint64_t i = 0; i < total; ++i) {
        out.push_back(t);
        for (size_t j = radix.size(); j-- > 0;) {
            if (++t[j] < radix[j]) break;
            t[j] = 0;
        }
    }
    return out;
}

} // namespace

ProductInstance gen_hypercube(unsigned d, uint64_t vertex_budget) {
    if (d == 0) throw_validation("hypercube dimension must be >= 1");
    if (d >= 63) throw_budget("hypercube dimension too large");
    check_budget(uint64_t(1) << d, vertex_budget);
    std::vector<Graph> factors(d, Graph::complete(2));
    return ProductInstance::make(std::move(factors),
                                 all_tuples(std::vector<uint32_t>(d, 2)));
}

ProductInstance gen_hamming(unsigned d, uint32_t a, uint64_t vertex_budget) {
    if (d == 0 || a == 0) throw_validation("hamming: d and a must be >= 1");
    uint64_t total = 1;
    for (unsigned i = 0; i < d; ++i) {
        total *= a;
        check_budget(total, vertex_budget);
    }
    std::vector<Graph> factors(d, Graph::complete(a));
    return ProductInstance::make(std::move(factors),
                                 all_tuples(std::vector<uint32_t>(d, a)));
}

ProductInstance gen_grid(const std::vector<uint32_t>& dims, uint64_t vertex_budget) {
    if (dims.empty()) throw_validation("grid needs at least one dimension");
    uint64_t total = 1;
    std::vector<Graph> factors;
    for (uint32_t s : dims) {
        if (s == 0) throw_validation("grid dimension must be >= 1");
        total *= s;
        check_budget(total, vertex_budget);
        factors.push_back(Graph::path(s));
    }
    return ProductInstance::make(std::move(factors), all_tuples(dims));
}

ProductInstance gen_random_sub(const ProductInstance& base, double density, uint64_t seed) {
    if (density < 0.0 || density > 1.0) throw_validation("density must be in [0,1]");
    std::vector<std::pair<uint32_t, uint32_t>> kept;
    for (auto [a, b] : base.induced_edges()) {
        // keep with probability `density`, deterministically from the seed
        double u = double(prf(seed, a, b) >> 11) * 0x1.0p-53;
        if (u < density) kept.emplace_back(a, b);
    }
    return ProductInstance::make(base.factors(), base.tuples(), std::move(kept));
}

ProductInstance gen_dense_monotone(const Graph& g_prime, uint32_t n) {
    uint32_t n1 = g_prime.num_vertices();
    if (n1 < 2 || g_prime.min_degree() < 1)
        throw_validation("dense-monotone: g_prime needs minimum degree >= 1");
    if (n < n1) throw_validation("dense-monotone: n must be at least |V(g_prime)|");

    // Enough axes that |V_1 ∪ ... ∪ V_d| = d(n1-1)+1 >= n; the axis sets
    // share only the all-anchor tuple.
    uint32_t d = (n - 1 + (n1 - 2)) / (n1 - 1);
    const uint32_t anchor = 0;

    std::vector<std::vector<uint32_t>> tuples;
    tuples.push_back(std::vector<uint32_t>(d, anchor));
    uint32_t excess = d * (n1 - 1) + 1 - n; // < n1-1, trimmed from axis 0
    for (uint32_t i = 0; i < d; ++i) {
        uint32_t hi = (i == 0) ? n1 - excess : n1;
        for (uint32_t v = 1; v < hi; ++v) {
            std::vector<uint32_t> t(d, anchor);
            t[i] = v;
            tuples.push_back(std::move(t));
        }
    }
    std::vector<Graph> factors(d, g_prime);
    return ProductInstance::make(std::move(factors), std::move(tuples));
}

ProductInstance read_cpi(std::istream& in) {
    std::string word;
    auto expect = [&](const std::string& w) {
        if (!(in >> word) || word != w) throw_format(".cpi: expected '" + w + "'");
    };
    expect("factors");
    size_t d;
    if (!(in >> d) || d == 0) throw_format(".cpi: bad factor count");
    std::vector<Graph> factors;
    for (size_t j = 0; j < d; ++j) {
        expect("factor");
        uint32_t fn;
        size_t fm;
        if (!(in >> fn >> fm)) throw_format(".cpi: bad factor header");
        std::vector<std::pair<uint32_t, uint32_t>> es(fm);
        for (auto& [u, v] : es) {
            if (!(in >> u >> v)) throw_format(".cpi: bad factor edge");
            if (!(u < v && v < fn)) throw_format(".cpi: factor edge out of range");
        }
        factors.emplace_back(fn, std::move(es));
    }
    expect("vertices");
    size_t nt;
    if (!(in >> nt)) throw_format(".cpi: bad vertex count");
    std::vector<std::vector<uint32_t>> tuples(nt, std::vector<uint32_t>(d));
    for (auto& t : tuples)
        for (auto& x : t)
            if (!(in >> x)) throw_format(".cpi: bad tuple");
    expect("edges");
    if (!(in >> word)) throw_format(".cpi: missing edge mode");
    if (word == "induced")
        return ProductInstance::make(std::move(factors), std::move(tuples));
    if (word != "explicit") throw_format(".cpi: unknown edge mode '" + word + "'");
    size_t m;
    if (!(in >> m)) throw_format(".cpi: bad explicit edge count");
    std::vector<std::pair<uint32_t, uint32_t>> es(m);
    for (auto& [u, v] : es)
        if (!(in >> u >> v)) throw_format(".cpi: bad explicit edge");
    return ProductInstance::make(std::move(factors), std::move(tuples), std::move(es));
}

void write_cpi(std::ostream& out, const ProductInstance& inst) {
    out << "factors " << inst.dims() << "\n";
    for (const auto& f : inst.factors()) {
        out << "factor " << f.num_vertices() << " " << f.num_edges() << "\n";
        for (auto [u, v] : f.edges()) out << u << " " << v << "\n";
    }
    out << "vertices " << inst.num_tuples() << "\n";
    for (const auto& t : inst.tuples()) {
        for (size_t j = 0; j < t.size(); ++j) out << (j ? " " : "") << t[j];
        out << "\n";
    }
    if (inst.induced_mode()) {
        out << "edges induced\n";
    } else {
        out << "edges explicit " << inst.explicit_edges().size() << "\n";
        for (auto [u, v] : inst.explicit_edges()) out << u << " " << v << "\n";
    }
}

ProductInstance load_cpi(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw_format("cannot open " + path);
    return read_cpi(in);
}

void save_cpi(const std::string& path, const ProductInstance& inst) {
    std::ofstream out(path);
    if (!out) throw_format("cannot open " + path + " for writing");
    write_cpi(out, inst);
}

} // namespace cartlabel
