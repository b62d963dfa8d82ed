#include "indseq/percolation.hpp"

#include <stdexcept>

#include "indseq/rng.hpp"

namespace indseq {

namespace {

PercolationOutcome finish(const Graph& g, std::vector<int> survivorIds, std::uint64_t seed) {
    PercolationOutcome out;
    out.survivors = VertexSubset::from_degree_array(g.degrees(), std::move(survivorIds));
    out.inducedGraph = induced_subgraph(g, out.survivors);
    out.inducedDegreesRaw = out.inducedGraph.degrees();
    if (out.inducedGraph.n() > 0)
        out.inducedSeq = DegreeSequence::from_entries_permissive(out.inducedDegreesRaw);
    out.sizeS = out.survivors.size();
    out.degS = out.survivors.degree_total();
    out.seed = seed;
    return out;
}

}  // namespace

PercolationOutcome percolate_site(const Graph& g, double p, std::uint64_t seed) {
    if (!(p >= 0.0) || !(p <= 1.0))
        throw std::invalid_argument("percolate_site: p must be in [0, 1]");
    Rng rng(seed);
    std::vector<int> survivors;
    for (Count v = 0; v < g.n(); ++v)
        if (rng.uniform01() < p) survivors.push_back(static_cast<int>(v) + 1);
    return finish(g, std::move(survivors), seed);
}

PercolationOutcome fixed_subset_pipeline(const DegreeSequence& d, const VertexSubset& S,
                                         const SamplerConfig& cfg, SampleInfo* info) {
    const Graph g = sample_uniform(d, cfg, info);
    return finish(g, S.indices(), cfg.seed);
}

}  // namespace indseq
