#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "indseq/degree_sequence.hpp"
#include "indseq/report.hpp"
#include "indseq/rng.hpp"
#include "indseq/sampler.hpp"

namespace indseq {

/// Sequence spec accepted anywhere a config names its input:
///   {"file": "path"} | {"entries": [..]} | {"text": "1 2 3"}
///   | {"regular": {"n": N, "degree": k}}
/// plus an optional "permissive": true for zero entries.
DegreeSequence resolve_sequence_spec(const nlohmann::json& spec);

struct SubsetSpec {
    enum class Mode { File, Indices, RandomSize, FirstK };
    Mode mode = Mode::RandomSize;
    std::string file;
    std::vector<int> indices;
    Count k = 0;

    static SubsetSpec from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

/// RandomSize draws k distinct positions from the supplied stream, so the
/// subset is a pure function of (seed, n, k).
VertexSubset resolve_subset(const DegreeSequence& d, const SubsetSpec& spec, Rng stream);

nlohmann::json sampler_config_to_json(const SamplerConfig& cfg);
SamplerConfig sampler_config_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------------------
// Suite: induced degree sequence against d_H for a fixed subset.
// Pools obsPerTrial induced-degree observations per sampled graph and gates
// the pooled empirical law against the matching binomial mixture, alongside
// sorted-entry and histogram comparisons to d_H.
// ---------------------------------------------------------------------------
struct Thm23Config {
    nlohmann::json seq;
    SubsetSpec subset;
    double delta = 0.0;  // 0: default_delta(M)
    Count trials = 20;
    Count obsPerTrial = 100;
    std::uint64_t seed = 1;
    int threads = 0;
    SamplerConfig sampler;
    double tvTol = 0.05;       // pooled TV(empirical d_S(v), binomial mixture)
    double largeRelTol = 0.25; // desk gate for the large-entry relative deviation
    double histTvTol = 0.05;   // desk gate for the small-value histogram distance

    static Thm23Config from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

ExperimentReport suite_thm23(const Thm23Config& cfg);

// ---------------------------------------------------------------------------
// Suite: percolation survivor statistics against d_A.
// |S| and d(S) gates need no graph; the per-vertex and histogram gates
// sample a graph per trial and are switched by perVertexGates.
// ---------------------------------------------------------------------------
struct Thm25Config {
    nlohmann::json seq;
    double p = 0.5;
    double delta = 0.0;
    Count trials = 50;
    std::uint64_t seed = 1;
    int threads = 0;
    bool perVertexGates = false;
    Count minPass = -1;  // -1: trials - 1
    SamplerConfig sampler;
    double cRelTol = 0.25;
    double dHistTvTol = 0.10;

    static Thm25Config from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

ExperimentReport suite_thm25(const Thm25Config& cfg);

// ---------------------------------------------------------------------------
// Suite: exact enumeration against the switching-ratio formulas.
// Counts |A_v^i| over the full enumeration; the leading-term formula
// (i+1)/(d(v)-i) * d(Sbar)/d(S) carries unspecified lower-order factors, so
// the gate is a configurable sanity factor, default 4.
// ---------------------------------------------------------------------------
struct SwitchingConfig {
    nlohmann::json seq;
    SubsetSpec subset;
    int vertex = 0;               // 1-based; 0 disables the single-vertex table
    int pairA = 0, pairB = 0;     // 1-based; 0 disables the pair analysis
    int limit = 8;
    double sanityFactor = 4.0;
    double delta = 0.0;

    static SwitchingConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

ExperimentReport suite_switching_exact(const SwitchingConfig& cfg);

// ---------------------------------------------------------------------------
// Suite: giant-component threshold.
// "sweep" walks a p grid, records R(d_A)/(p^2 M), optionally gates the eps
// crossing location, and runs empirical percolation trials at chosen p
// values. "fixed" runs the fixed-subset pipeline against d_H.
// ---------------------------------------------------------------------------
struct GiantConfig {
    nlohmann::json seq;
    std::string mode = "sweep";  // "sweep" | "fixed"
    SubsetSpec subset;           // fixed mode
    std::vector<double> pGrid;   // sweep mode; default 0.05..0.95 step 0.05
    double eps = 0.01;
    double delta = 0.0;
    std::uint64_t seed = 1;
    int threads = 0;
    SamplerConfig sampler;
    std::string csvPath;         // optional sidecar with sweep + trial rows

    double crossLo = -1.0, crossHi = -1.0;  // gate: eps crossing within [lo, hi]

    struct PercEval {
        double p = 0.5;
        Count trials = 20;
        Count minPass = -1;                       // -1: trials - 1
        double largestFracOfNonIsolatedMin = -1;  // largest >= frac * nonIsolated
        double largestFracOfNpMax = -1;           // largest <= frac * n p
        double nonIsolatedRelTol = -1;            // |nonIso - (np - n0(dA))| <= tol * pred
    };
    std::vector<PercEval> evals;

    Count fixedTrials = 20;
    Count fixedMinPass = -1;
    double fixedLargestFracMin = -1.0;
    double fixedNonIsolatedRelTol = -1.0;

    static GiantConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

ExperimentReport suite_giant(const GiantConfig& cfg);

/// Dispatch by suite name: thm23 | thm25 | switching | giant.
ExperimentReport run_suite(const std::string& name, const nlohmann::json& config);

}  // namespace indseq
