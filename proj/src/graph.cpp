#include "cartlabel/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "cartlabel/error.hpp"

namespace cartlabel {

Graph::Graph(uint32_t n, std::vector<std::pair<uint32_t, uint32_t>> edges) : n_(n) {
    std::set<std::pair<uint32_t, uint32_t>> uniq;
    for (auto [u, v] : edges) {
        if (u == v) throw_validation("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (v >= n) throw_validation("edge endpoint " + std::to_string(v) + " out of range");
        uniq.emplace(u, v);
    }
    edges_.assign(uniq.begin(), uniq.end());
    adj_.resize(n);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::adjacent(uint32_t u, uint32_t v) const {
    if (u == v) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    uint32_t t = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), t);
}

uint32_t Graph::min_degree() const {
    uint32_t d = n_ == 0 ? 0 : degree(0);
    for (uint32_t v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

Graph Graph::induced(const std::vector<uint32_t>& verts) const {
    std::vector<uint32_t> pos(n_, UINT32_MAX);
    for (size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] >= n_) throw_validation("induced: vertex out of range");
        if (pos[verts[i]] != UINT32_MAX) throw_validation("induced: duplicate vertex");
        pos[verts[i]] = uint32_t(i);
    }
    std::vector<std::pair<uint32_t, uint32_t>> es;
    for (auto [u, v] : edges_)
        if (pos[u] != UINT32_MAX && pos[v] != UINT32_MAX) es.emplace_back(pos[u], pos[v]);
    return Graph(uint32_t(verts.size()), std::move(es));
}

Graph Graph::complete(uint32_t n) {
    std::vector<std::pair<uint32_t, uint32_t>> es;
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

Graph Graph::path(uint32_t n) {
    std::vector<std::pair<uint32_t, uint32_t>> es;
    for (uint32_t u = 0; u + 1 < n; ++u) es.emplace_back(u, u + 1);
    return Graph(n, std::move(es));
}

Graph Graph::cycle(uint32_t n) {
    if (n < 3) throw_validation("cycle needs at least 3 vertices");
    std::vector<std::pair<uint32_t, uint32_t>> es;
    for (uint32_t u = 0; u + 1 < n; ++u) es.emplace_back(u, u + 1);
    es.emplace_back(0, n - 1);
    return Graph(n, std::move(es));
}

DegeneracyOrder degeneracy_order(const Graph& g) {
    uint32_t n = g.num_vertices();
    DegeneracyOrder out;
    out.order.reserve(n);
    out.rank.assign(n, 0);

    std::vector<uint32_t> deg(n);
    std::vector<bool> removed(n, false);
    // bucket[d] holds vertices of current degree d; lazy deletion via the
    // degree array keeps the scan linear-ish at these sizes.
    uint32_t maxdeg = 0;
    for (uint32_t v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        maxdeg = std::max(maxdeg, deg[v]);
    }
    std::vector<std::set<uint32_t>> bucket(maxdeg + 1);
    for (uint32_t v = 0; v < n; ++v) bucket[deg[v]].insert(v);

    uint32_t k = 0;
    for (uint32_t step = 0; step < n; ++step) {
        uint32_t d = 0;
        while (d <= maxdeg && bucket[d].empty()) ++d;
        uint32_t v = *bucket[d].begin();
        bucket[d].erase(bucket[d].begin());
        removed[v] = true;
        k = std::max(k, d);
        out.rank[v] = step;
        out.order.push_back(v);
        for (uint32_t u : g.neighbors(v)) {
            if (removed[u]) continue;
            bucket[deg[u]].erase(u);
            --deg[u];
            bucket[deg[u]].insert(u);
        }
    }
    out.k = k;
    return out;
}

Graph cartesian_product(const std::vector<Graph>& factors, uint64_t vertex_budget) {
    if (factors.empty()) throw_validation("cartesian_product: need at least one factor");
    uint64_t total = 1;
    for (const auto& f : factors) {
        if (f.num_vertices() == 0) throw_validation("cartesian_product: empty factor");
        total *= f.num_vertices();
        if (total > vertex_budget)
            throw_budget("product vertex count exceeds budget of " +
                         std::to_string(vertex_budget));
    }
    size_t d = factors.size();
    // Mixed-radix strides, last coordinate fastest.
    std::vector<uint64_t> stride(d);
    uint64_t s = 1;
    for (size_t i = d; i-- > 0;) {
        stride[i] = s;
        s *= factors[i].num_vertices();
    }
    std::vector<std::pair<uint32_t, uint32_t>> es;
    // For every vertex, edges along each coordinate.
    std::vector<uint32_t> tup(d, 0);
    for (uint64_t v = 0; v < total; ++v) {
        for (size_t i = 0; i < d; ++i) {
            for (uint32_t w : factors[i].neighbors(tup[i])) {
                if (w <= tup[i]) continue; // emit each edge once
                uint64_t u = v + (uint64_t(w) - tup[i]) * stride[i];
                es.emplace_back(uint32_t(v), uint32_t(u));
            }
        }
        // increment mixed-radix tuple
        for (size_t i = d; i-- > 0;) {
            if (++tup[i] < factors[i].num_vertices()) break;
            tup[i] = 0;
        }
    }
    return Graph(uint32_t(total), std::move(es));
}

Graph read_gr(std::istream& in) {
    std::string line;
    uint32_t n = 0;
    size_t m = 0;
    bool have_header = false;
    std::vector<std::pair<uint32_t, uint32_t>> es;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        char tag;
        ss >> tag;
        if (tag == 'p') {
            if (have_header) throw_format("duplicate p header at line " + std::to_string(lineno));
            if (!(ss >> n >> m)) throw_format("bad p header at line " + std::to_string(lineno));
            have_header = true;
        } else if (tag == 'e') {
            if (!have_header) throw_format("edge before p header");
            uint32_t u, v;
            if (!(ss >> u >> v)) throw_format("bad edge at line " + std::to_string(lineno));
            if (!(u < v && v < n)) throw_format("edge out of range at line " + std::to_string(lineno));
            es.emplace_back(u, v);
        } else {
            throw_format("unknown line tag at line " + std::to_string(lineno));
        }
    }
    if (!have_header) throw_format("missing p header");
    if (es.size() != m) throw_format("edge count mismatch: header says " + std::to_string(m) +
                                     ", found " + std::to_string(es.size()));
    return Graph(n, std::move(es));
}

void write_gr(std::ostream& out, const Graph& g) {
    out << "p " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

Graph load_gr(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw_format("cannot open " + path);
    return read_gr(in);
}

void save_gr(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw_format("cannot open " + path + " for writing");
    write_gr(out, g);
}

} // namespace cartlabel
