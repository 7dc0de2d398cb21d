#include "doctest.h"

#include <sstream>

#include "cartlabel/error.hpp"
#include "cartlabel/instance.hpp"

using namespace cartlabel;

TEST_CASE("realize induced: hypercube Q3") {
    ProductInstance q3 = gen_hypercube(3);
    Graph g = q3.realize();
    CHECK(g.num_vertices() == 8);
    CHECK(g.num_edges() == 12);
}

TEST_CASE("realize matches the edge predicate on small instances") {
    ProductInstance inst = gen_grid({3, 4});
    Graph g = inst.realize();
    Graph full = cartesian_product(inst.factors());
    CHECK(g.num_edges() == full.num_edges());
    for (uint32_t a = 0; a < g.num_vertices(); ++a)
        for (uint32_t b = a + 1; b < g.num_vertices(); ++b)
            CHECK(g.adjacent(a, b) == inst.product_edge(a, b));
}

TEST_CASE("star K_{1,3} embeds in the 3-cube") {
    std::vector<Graph> factors(3, Graph::complete(2));
    std::vector<std::vector<uint32_t>> tuples = {
        {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    ProductInstance inst = ProductInstance::make(factors, tuples);
    Graph g = inst.realize();
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 3);
    CHECK(g.degree(0) == 3);
}

TEST_CASE("explicit mode keeps exactly the listed edges") {
    std::vector<Graph> factors(3, Graph::complete(2));
    std::vector<std::vector<uint32_t>> tuples = {
        {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    ProductInstance empty = ProductInstance::make(
        factors, tuples, std::vector<std::pair<uint32_t, uint32_t>>{});
    CHECK(empty.realize().num_edges() == 0);

    ProductInstance one = ProductInstance::make(
        factors, tuples, std::vector<std::pair<uint32_t, uint32_t>>{{0, 1}});
    CHECK(one.realize().num_edges() == 1);
    CHECK(one.has_explicit_edge(1, 0));
}

TEST_CASE("explicit edge violating the product predicate is rejected") {
    std::vector<Graph> factors(3, Graph::complete(2));
    std::vector<std::vector<uint32_t>> tuples = {
        {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    // tuples 1 and 2 differ in two coordinates
    CHECK_THROWS_WITH_AS(
        ProductInstance::make(factors, tuples,
                              std::vector<std::pair<uint32_t, uint32_t>>{{1, 2}}),
        doctest::Contains("{1,2}"), Error);
}

TEST_CASE("instance validation: duplicates and arity") {
    std::vector<Graph> factors(2, Graph::complete(2));
    CHECK_THROWS_AS(ProductInstance::make(factors, {{0, 0}, {0, 0}}), Error);
    CHECK_THROWS_AS(ProductInstance::make(factors, {{0, 0, 1}}), Error);
    CHECK_THROWS_AS(ProductInstance::make(factors, {{0, 5}}), Error);
}

TEST_CASE("factors are restricted to used vertices") {
    // only vertices {0,2} of a 4-clique appear in coordinate 0
    std::vector<Graph> factors = {Graph::complete(4), Graph::complete(2)};
    std::vector<std::vector<uint32_t>> tuples = {{0, 0}, {2, 0}, {0, 1}};
    ProductInstance inst = ProductInstance::make(factors, tuples);
    CHECK(inst.factors()[0].num_vertices() == 2);
    CHECK(inst.factors()[1].num_vertices() == 2);
    CHECK(inst.realize().num_edges() == 2);
}

TEST_CASE("generators: hamming and grid counts") {
    ProductInstance h = gen_hamming(2, 3);
    Graph hg = h.realize();
    CHECK(hg.num_vertices() == 9);
    CHECK(hg.num_edges() == 18);

    ProductInstance g = gen_grid({5, 5});
    Graph gg = g.realize();
    CHECK(gg.num_vertices() == 25);
    CHECK(gg.num_edges() == 40);
}

TEST_CASE("generator budget errors") {
    CHECK_THROWS_AS(gen_hypercube(30), Error);
    CHECK_THROWS_AS(gen_hamming(20, 10), Error);
}

TEST_CASE("gen_random_sub densities") {
    ProductInstance base = gen_hypercube(5);
    size_t all = base.realize().num_edges();
    CHECK(all == 80);

    ProductInstance full = gen_random_sub(base, 1.0, 7);
    CHECK(full.realize().num_edges() == all);
    ProductInstance none = gen_random_sub(base, 0.0, 7);
    CHECK(none.realize().num_edges() == 0);

    ProductInstance half = gen_random_sub(base, 0.5, 7);
    size_t kept = half.realize().num_edges();
    CHECK(kept >= size_t(0.3 * 80));
    CHECK(kept <= size_t(0.7 * 80));

    // deterministic given the seed
    CHECK(gen_random_sub(base, 0.5, 7).explicit_edges() == half.explicit_edges());
    CHECK(gen_random_sub(base, 0.5, 8).explicit_edges() != half.explicit_edges());
}

TEST_CASE("gen_dense_monotone meets the edge bound") {
    struct Case {
        Graph g;
        uint32_t n;
    };
    Graph q3 = cartesian_product({Graph::complete(2), Graph::complete(2), Graph::complete(2)});
    std::vector<Case> cases = {{Graph::complete(2), 4},
                               {Graph::complete(4), 16},
                               {Graph::cycle(5), 20},
                               {q3, 16}};
    for (const auto& c : cases) {
        ProductInstance inst = gen_dense_monotone(c.g, c.n);
        Graph r = inst.realize();
        CHECK(r.num_vertices() == c.n);
        CHECK(r.num_edges() * 4 >= size_t(c.n) * c.g.min_degree());
    }
    CHECK_THROWS_AS(gen_dense_monotone(Graph(3, {}), 5), Error);   // min degree 0
    CHECK_THROWS_AS(gen_dense_monotone(Graph::complete(4), 2), Error); // n < n1
}

TEST_CASE(".cpi round trip") {
    for (const ProductInstance& inst :
         {gen_grid({3, 3}), gen_random_sub(gen_hypercube(4), 0.5, 3)}) {
        std::stringstream ss;
        write_cpi(ss, inst);
        std::string text = ss.str();
        ProductInstance back = read_cpi(ss);
        CHECK(back.num_tuples() == inst.num_tuples());
        CHECK(back.tuples() == inst.tuples());
        CHECK(back.induced_mode() == inst.induced_mode());
        CHECK(back.explicit_edges() == inst.explicit_edges());
        std::stringstream ss2;
        write_cpi(ss2, back);
        CHECK(ss2.str() == text); // byte-identical re-serialization
    }
}
