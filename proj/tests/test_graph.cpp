#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "indseq/graph.hpp"
#include "indseq/rng.hpp"
#include "indseq/sampler.hpp"

using namespace indseq;

namespace {

Graph triangle() { return Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}); }

Graph random_graph(Rng& rng, int n, double p) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform01() < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("graph construction validates") {
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::out_of_range);
    const Graph g = triangle();
    CHECK(g.m() == 3);
    CHECK(g.has_edge(0, 2));
    CHECK_FALSE(g.has_edge(0, 0));
}

TEST_CASE("induced subgraph basics") {
    const DegreeSequence d = degree_sequence_of(triangle());
    const VertexSubset s = VertexSubset::from_indices(d, {1, 2});
    const Graph h = induced_subgraph(triangle(), s);
    CHECK(h.n() == 2);
    CHECK(h.m() == 1);

    const Graph empty = induced_subgraph(triangle(), VertexSubset::from_indices(d, {}));
    CHECK(empty.n() == 0);
    CHECK(empty.m() == 0);

    // 4-cycle, opposite corners
    const Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    const DegreeSequence d4 = degree_sequence_of(c4);
    const Graph h2 = induced_subgraph(c4, VertexSubset::from_indices(d4, {1, 3}));
    CHECK(h2.n() == 2);
    CHECK(h2.m() == 0);
}

TEST_CASE("degree_sequence_of") {
    CHECK(degree_sequence_of(triangle()).entries() == std::vector<int>{2, 2, 2});
    const Graph g = Graph::from_edges(3, {{0, 1}});
    CHECK(degree_sequence_of(g).entries() == std::vector<int>{0, 1, 1});
    const Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(degree_sequence_of(star).entries() == std::vector<int>{1, 1, 1, 3});
}

TEST_CASE("induced on the full vertex set is the identity") {
    Rng rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        const Graph g = random_graph(rng, 12, 0.3);
        const DegreeSequence d = degree_sequence_of(g);
        std::vector<int> all;
        for (int i = 1; i <= 12; ++i) all.push_back(i);
        const Graph h = induced_subgraph(g, VertexSubset::from_indices(d, all));
        CHECK(degree_sequence_of(h).entries() == d.entries());
        CHECK(h.edges() == g.edges());
    }
}

TEST_CASE("induced degree sums are even") {
    Rng rng(6);
    for (int rep = 0; rep < 30; ++rep) {
        const Graph g = random_graph(rng, 14, 0.25);
        const DegreeSequence d = degree_sequence_of(g);
        std::vector<int> subset;
        for (int i = 1; i <= 14; ++i)
            if (rng.coin()) subset.push_back(i);
        const Graph h = induced_subgraph(g, VertexSubset::from_indices(d, subset));
        Count sum = 0;
        for (int v = 0; v < h.n(); ++v) sum += h.degree(v);
        CHECK(sum % 2 == 0);
        CHECK(sum == 2 * h.m());
    }
}

TEST_CASE("component summaries") {
    const ComponentSummary tri = components(triangle());
    CHECK(tri.componentSizes == std::vector<Count>{3});
    CHECK(tri.largest == 3);
    CHECK(tri.nonIsolated == 3);

    const Graph twoEdges = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK(components(twoEdges).componentSizes == std::vector<Count>{2, 2});

    const Graph edgePlus = Graph::from_edges(3, {{0, 1}});
    const ComponentSummary c = components(edgePlus);
    CHECK(c.componentSizes == std::vector<Count>{2, 1});
    CHECK(c.nonIsolated == 2);
}

TEST_CASE("union-find and BFS agree on random graphs") {
    Rng rng(17);
    for (int rep = 0; rep < 40; ++rep) {
        const int n = 2 + static_cast<int>(rng.below(60));
        const Graph g = random_graph(rng, n, 1.8 / n);
        const ComponentSummary a = components(g);
        const ComponentSummary b = components_bfs(g);
        CHECK(a.componentSizes == b.componentSizes);
        CHECK(a.largest == b.largest);
        CHECK(a.nonIsolated == b.nonIsolated);
        Count total = 0;
        for (Count s : a.componentSizes) total += s;
        CHECK(total == n);
    }
}

TEST_CASE("edge list round trip is canonical") {
    Rng rng(23);
    const Graph g = random_graph(rng, 9, 0.4);
    std::ostringstream out;
    write_edge_list(g, out);
    std::istringstream in(out.str());
    const Graph back = read_edge_list(in, 9);
    CHECK(back.edges() == g.edges());

    std::istringstream reversed("2 1\n3 1\n");
    const Graph r = read_edge_list(reversed);
    CHECK(r.n() == 3);
    CHECK(r.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});

    std::istringstream dup("1 2\n2 1\n");
    CHECK_THROWS_AS(read_edge_list(dup), std::invalid_argument);

    std::istringstream tooBig("1 5\n");
    CHECK_THROWS_AS(read_edge_list(tooBig, 3), std::out_of_range);
}
