#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "indseq/report.hpp"
#include "indseq/sampler.hpp"

#include "test_oracles.hpp"

using namespace indseq;

namespace {

std::vector<std::pair<int, int>> canonical_edges(const Graph& g) { return g.edges(); }

}  // namespace

TEST_CASE("enumerate_graphs frozen counts") {
    CHECK(enumerate_graphs(DegreeSequence::from_entries({1, 1, 1, 1})).size() == 3);
    CHECK(enumerate_graphs(DegreeSequence::from_entries({2, 2, 2})).size() == 1);
    CHECK(enumerate_graphs(DegreeSequence::from_entries({1, 1, 1, 3})).size() == 1);
    CHECK(enumerate_graphs(DegreeSequence::from_entries({2, 2, 2, 2})).size() == 3);
    CHECK_THROWS_AS(enumerate_graphs(DegreeSequence::from_entries(std::vector<int>(9, 2))),
                    std::invalid_argument);
}

TEST_CASE("the unique (1,1,1,3) realization is the star") {
    const auto graphs = enumerate_graphs(DegreeSequence::from_entries({1, 1, 1, 3}));
    REQUIRE(graphs.size() == 1);
    CHECK(graphs[0].degree(3) == 3);  // sorted sequence puts the hub last
}

TEST_CASE("every enumerated graph realizes exactly the requested degrees") {
    Rng rng(31);
    for (int rep = 0; rep < 30; ++rep) {
        std::vector<int> entries;
        const auto n = 2 + rng.below(5);
        for (std::uint64_t i = 0; i < n; ++i)
            entries.push_back(static_cast<int>(rng.below(n)));
        Count sum = 0;
        for (int e : entries) sum += e;
        if (sum % 2 != 0) entries[0] ^= 1;
        const DegreeSequence d = DegreeSequence::from_entries_permissive(entries);
        for (const Graph& g : enumerate_graphs(d, 7)) {
            CHECK(degree_sequence_of(g).entries() == d.entries());
            for (int v = 0; v < g.n(); ++v) {
                const auto& nbrs = g.neighbors(v);
                CHECK(std::adjacent_find(nbrs.begin(), nbrs.end()) == nbrs.end());
                CHECK_FALSE(g.has_edge(v, v));
            }
        }
    }
}

TEST_CASE("enumeration counts match the edge-subset brute force") {
    Rng rng(37);
    for (int rep = 0; rep < 25; ++rep) {
        const int n = 2 + static_cast<int>(rng.below(4));  // up to 5 vertices
        std::vector<int> degrees(static_cast<std::size_t>(n));
        for (auto& deg : degrees) deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        CHECK(count_realizations(degrees) == oracle::brute_count_realizations(degrees));
    }
}

TEST_CASE("realization count is invariant under degree-preserving relabeling") {
    Rng rng(41);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 3 + static_cast<int>(rng.below(4));  // up to 6
        std::vector<int> degrees(static_cast<std::size_t>(n));
        Count sum = 0;
        for (auto& deg : degrees) {
            deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            sum += deg;
        }
        if (sum % 2 != 0) degrees[0] ^= 1;
        const Count reference = count_realizations(degrees);
        for (int shuffle = 0; shuffle < 4; ++shuffle) {
            for (std::size_t i = degrees.size(); i > 1; --i)
                std::swap(degrees[i - 1], degrees[static_cast<std::size_t>(rng.below(i))]);
            CHECK(count_realizations(degrees) == reference);
        }
    }
}

TEST_CASE("cycle-cover counts and the complement bijection") {
    // 2-regular on 8 labeled vertices = cycle covers: one 8-cycle (7!/2 = 2520),
    // a 5+3 split (C(8,5) * 4!/2 * 2!/2 = 672), a 4+4 split (C(8,4)/2 * (3!/2)^2
    // = 315), total 3507
    CHECK(count_realizations(std::vector<int>(8, 2)) == 3507);
    // cubic on 6 = complement of a cycle cover of 6: 5!/2 + C(6,3)/2 = 70
    CHECK(count_realizations(std::vector<int>(6, 3)) == 70);
    // complementation pairs 3-regular with 4-regular on 8 vertices
    const Count cubic8 = count_realizations(std::vector<int>(8, 3));
    CHECK(cubic8 == 19355);
    CHECK(count_realizations(std::vector<int>(8, 4)) == cubic8);
}

TEST_CASE("enumeration order is deterministic") {
    const DegreeSequence d = DegreeSequence::from_entries({2, 2, 2, 2});
    const auto a = enumerate_graphs(d);
    const auto b = enumerate_graphs(d);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].edges() == b[i].edges());
}

TEST_CASE("triangle is sampled deterministically") {
    const DegreeSequence d = DegreeSequence::from_entries({2, 2, 2});
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        SamplerConfig cfg;
        cfg.seed = seed;
        const Graph g = sample_uniform(d, cfg);
        CHECK(g.m() == 3);
        CHECK(degree_sequence_of(g).entries() == std::vector<int>{2, 2, 2});
    }
}

TEST_CASE("rejection sampling is uniform over the three matchings") {
    const DegreeSequence d = DegreeSequence::from_entries({1, 1, 1, 1});
    const auto graphs = enumerate_graphs(d);
    REQUIRE(graphs.size() == 3);
    std::map<std::vector<std::pair<int, int>>, std::size_t> index;
    for (std::size_t i = 0; i < graphs.size(); ++i) index[canonical_edges(graphs[i])] = i;

    const int samples = 6000;
    std::vector<Count> observed(3, 0);
    const Rng root(1234);
    for (int i = 0; i < samples; ++i) {
        SamplerConfig cfg;
        cfg.method = SampleMethod::Rejection;
        cfg.seed = root.split_seed(static_cast<std::uint64_t>(i));
        const Graph g = sample_uniform(d, cfg);
        ++observed[index.at(canonical_edges(g))];
    }
    const std::vector<double> expected(3, samples / 3.0);
    CHECK(chi_square_statistic(observed, expected) < chi_square_quantile_999(2));
}

TEST_CASE("auto method matches the cost model") {
    SampleInfo info;
    SamplerConfig cfg;
    cfg.seed = 9;
    // perfect matching: small max degree, no retries expected
    sample_uniform(DegreeSequence::from_entries({1, 1, 1, 1}), cfg, &info);
    CHECK(info.methodUsed == SampleMethod::Rejection);
    CHECK_FALSE(info.autoFellBack);
    // 3-regular at moderate size: rejection still wins the cost comparison
    sample_uniform(DegreeSequence::from_entries(std::vector<int>(200, 3)), cfg, &info);
    CHECK(info.methodUsed == SampleMethod::Rejection);
    // dense 8-regular on 40 vertices: the chain takes over, with a note
    sample_uniform(DegreeSequence::from_entries(std::vector<int>(40, 8)), cfg, &info);
    CHECK(info.methodUsed == SampleMethod::SwitchChain);
    CHECK(info.autoFellBack);
    CHECK_FALSE(info.note.empty());
}

TEST_CASE("switch chain preserves the degree sequence") {
    Rng rng(47);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<int> entries;
        const auto n = 6 + rng.below(20);
        for (std::uint64_t i = 0; i < n; ++i)
            entries.push_back(1 + static_cast<int>(rng.below(4)));
        DegreeSequence d = DegreeSequence::from_entries(entries);
        if (d.odd_sum()) {
            entries.push_back(1);
            d = DegreeSequence::from_entries(entries);
        }
        if (!is_graphical(d)) continue;
        SamplerConfig cfg;
        cfg.method = SampleMethod::SwitchChain;
        cfg.seed = rng.next_u64();
        SampleInfo info;
        const Graph g = sample_uniform(d, cfg, &info);
        CHECK(degree_sequence_of(g).entries() == d.entries());
        CHECK(info.switchAccepted > 0);
    }
}

TEST_CASE("switch chain spreads over all realizations of a small class") {
    // the three labeled 4-cycles are connected under double-edge swaps
    const DegreeSequence d = DegreeSequence::from_entries({2, 2, 2, 2});
    const auto graphs = enumerate_graphs(d);
    std::map<std::vector<std::pair<int, int>>, Count> hits;
    const Rng root(99);
    for (int i = 0; i < 600; ++i) {
        SamplerConfig cfg;
        cfg.method = SampleMethod::SwitchChain;
        cfg.seed = root.split_seed(static_cast<std::uint64_t>(i));
        ++hits[canonical_edges(sample_uniform(d, cfg))];
    }
    CHECK(hits.size() == graphs.size());
    for (const auto& [edges, count] : hits) CHECK(count > 100);
}

TEST_CASE("switch chain stays statistically close to uniform on a tiny class") {
    // no mixing guarantee is claimed, but at the default chain length the
    // three labeled 4-cycles should be indistinguishable from uniform
    const DegreeSequence d = DegreeSequence::from_entries({2, 2, 2, 2});
    const auto graphs = enumerate_graphs(d);
    std::map<std::vector<std::pair<int, int>>, std::size_t> index;
    for (std::size_t i = 0; i < graphs.size(); ++i) index[graphs[i].edges()] = i;
    std::vector<Count> observed(graphs.size(), 0);
    const int samples = 3000;
    const Rng root(2718);
    for (int i = 0; i < samples; ++i) {
        SamplerConfig cfg;
        cfg.method = SampleMethod::SwitchChain;
        cfg.seed = root.split_seed(static_cast<std::uint64_t>(i));
        ++observed[index.at(sample_uniform(d, cfg).edges())];
    }
    const std::vector<double> expected(graphs.size(),
                                       static_cast<double>(samples) / graphs.size());
    CHECK(chi_square_statistic(observed, expected) < chi_square_quantile_999(2));
}

TEST_CASE("sampler rejects non-graphical input") {
    SamplerConfig cfg;
    CHECK_THROWS_AS(sample_uniform(DegreeSequence::from_entries({3, 1}), cfg),
                    std::invalid_argument);
}

TEST_CASE("rejection budget exhaustion reports the fallback") {
    // K4 degrees pair into multigraphs most of the time; one attempt usually fails
    const DegreeSequence d = DegreeSequence::from_entries({3, 3, 3, 3});
    SamplerConfig cfg;
    cfg.method = SampleMethod::Rejection;
    cfg.maxRejections = 1;
    cfg.seed = 4;
    bool sawError = false;
    for (std::uint64_t s = 0; s < 64 && !sawError; ++s) {
        cfg.seed = s;
        try {
            sample_uniform(d, cfg);
        } catch (const SamplerError& e) {
            sawError = true;
            CHECK(std::string(e.what()).find("switch") != std::string::npos);
        }
    }
    CHECK(sawError);
}

TEST_CASE("class counts reproduce the exact matching classes") {
    const DegreeSequence d = DegreeSequence::from_entries({1, 1, 1, 1});
    const VertexSubset s = VertexSubset::from_indices(d, {1, 2});
    ClassQuery q;
    q.degreeVertices = {1};
    const GraphClassIndex idx = class_counts(d, s, q);
    CHECK(idx.total == 3);
    CHECK(idx.class_count({0}) == 2);
    CHECK(idx.class_count({1}) == 1);
    CHECK(idx.class_count({2}) == 0);  // i > d(v): empty class
}

TEST_CASE("adjacency-flag classes") {
    const DegreeSequence d = DegreeSequence::from_entries({1, 1, 1, 1});
    const VertexSubset s = VertexSubset::from_indices(d, {1, 2});
    ClassQuery q;
    q.edgeFlag = std::make_pair(1, 2);
    const GraphClassIndex idx = class_counts(d, s, q);
    CHECK(idx.class_count({1}) == 1);  // edge {1,2} present in exactly one matching
    CHECK(idx.class_count({0}) == 2);
}

TEST_CASE("exact induced-degree law for the labeled 4-cycles") {
    const DegreeSequence d = DegreeSequence::from_entries({2, 2, 2, 2});
    const VertexSubset s = VertexSubset::from_indices(d, {1, 2});
    ClassQuery q;
    q.degreeVertices = {1};
    const GraphClassIndex idx = class_counts(d, s, q);
    CHECK(idx.total == 3);
    // vertex 1 is adjacent to vertex 2 in two of the three 4-cycles
    CHECK(idx.class_count({1}) == 2);
    CHECK(idx.class_count({2}) == 0);
}

TEST_CASE("conditioned classes filter the enumeration") {
    const DegreeSequence d = DegreeSequence::from_entries({2, 2, 2, 2});
    const VertexSubset s = VertexSubset::from_indices(d, {1, 2, 3});
    ClassQuery q;
    q.degreeVertices = {2};
    q.conditions = {{1, 2}};  // d_S(1) = 2
    const GraphClassIndex idx = class_counts(d, s, q);
    CHECK(idx.total == 3);
    Count sum = 0;
    for (const auto& [key, count] : idx.classes) sum += count;
    CHECK(sum == idx.matching);
}
