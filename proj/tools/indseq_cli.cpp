// indseq -- degree-sequence toolkit for induced subgraphs of uniform random
// graphs: graphicality and feasibility checks, uniform sampling, model
// sequences, site percolation, giant-component statistics, and Monte Carlo
// verification suites.
//
// Exit codes: 0 success, 1 verification gate failure, 2 usage/input error.

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "indseq/condition.hpp"
#include "indseq/degree_sequence.hpp"
#include "indseq/giant.hpp"
#include "indseq/graph.hpp"
#include "indseq/harness.hpp"
#include "indseq/model_sequence.hpp"
#include "indseq/percolation.hpp"
#include "indseq/report.hpp"
#include "indseq/sampler.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace indseq;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string iso8601_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json make_manifest(const std::vector<std::string>& argv) {
    return {{"argv", argv},
            {"generator", std::string(Rng::kName)},
            {"version", kVersion},
            {"writtenAt", iso8601_now()}};
}

/// Reports are deterministic given the config; timestamps live only in the
/// side manifest written next to --out files.
int emit_report(const json& report, const std::string& outPath,
                const std::vector<std::string>& argv) {
    if (outPath.empty()) {
        std::cout << report.dump(2) << '\n';
        return 0;
    }
    std::ofstream out(outPath);
    if (!out) throw std::runtime_error("cannot write: " + outPath);
    out << report.dump(2) << '\n';
    std::ofstream manifest(outPath + ".manifest.json");
    if (!manifest) throw std::runtime_error("cannot write manifest for: " + outPath);
    manifest << make_manifest(argv).dump(2) << '\n';
    return 0;
}

json condition_to_json(const ConditionReport& r) {
    return {{"holds", r.holds}, {"lhs", r.lhs},       {"rhs", r.rhs},
            {"slack", r.slack}, {"co", r.co},         {"gammaOk", r.gammaOk}};
}

json hist_to_json(const std::map<int, Count>& hist) {
    json out = json::object();
    for (auto [k, c] : hist) out[std::to_string(k)] = c;
    return out;
}

json model_to_json(const ModelSequence& m) {
    const ModelStats stats = model_stats(m);
    json out{{"kind", to_string(m.kind)},
             {"hist", hist_to_json(m.hist)},
             {"length", m.length},
             {"params",
              {{"rate", m.params.rate},
               {"delta", m.params.delta},
               {"co", m.params.co},
               {"sourceDigest", m.params.sourceDigest}}},
             {"stats",
              {{"M", stats.M},
               {"M2", stats.M2},
               {"n0", stats.n0},
               {"nonZeroCount", stats.nonZeroCount}}},
             {"tieEvents", m.tieEvents}};
    if (!m.ytilde.empty()) {
        // largest gap between the histogram and its ytilde counterpart over
        // the small-degree range; the two differ once entries above the
        // cutoff contribute, so the gap is reported instead of assumed away
        double gap = 0.0;
        for (std::size_t i = 0; i < m.ytilde.size(); ++i)
            gap = std::max(gap, std::abs(static_cast<double>(m.count_of(static_cast<int>(i))) -
                                         m.ytilde[i]));
        out["maxHistYtildeGap"] = gap;
    }
    return out;
}

void write_model_csv(const ModelSequence& m, const std::string& path) {
    std::ofstream csv(path);
    if (!csv) throw std::runtime_error("cannot write csv: " + path);
    const bool perc = m.kind == ModelKind::Percolation;
    csv << "k,n_k," << (perc ? "wtilde_k" : "ytilde_k") << '\n';
    const auto& tilde = perc ? m.wtilde : m.ytilde;
    const int top = std::max(m.max_value(), static_cast<int>(tilde.size()) - 1);
    for (int k = 0; k <= top; ++k) {
        csv << k << ',' << m.count_of(k) << ',';
        if (static_cast<std::size_t>(k) < tilde.size())
            csv << tilde[static_cast<std::size_t>(k)];
        csv << '\n';
    }
}

struct SeqArgs {
    std::string file;
    bool permissive = false;

    DegreeSequence load() const {
        if (file.empty()) throw CLI::ValidationError("--seq", "missing sequence file");
        return load_sequence_file(file, LoadOptions{permissive});
    }
    json spec() const {
        json s{{"file", file}};
        if (permissive) s["permissive"] = true;
        return s;
    }
};

void add_seq_options(CLI::App* cmd, SeqArgs& args, bool positional = false) {
    if (positional) cmd->add_option("seqfile", args.file, "degree sequence file");
    cmd->add_option("--seq", args.file, "degree sequence file (whitespace-separated integers)");
    cmd->add_flag("--permissive", args.permissive, "admit zero entries");
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> argvCopy(argv, argv + argc);
    CLI::App app{"degree-sequence toolkit for induced subgraphs of uniform random graphs"};
    app.require_subcommand(1);

    // ---- check ----
    auto* check = app.add_subcommand("check", "graphicality, summary stats, condition diagnostics");
    SeqArgs checkSeq;
    add_seq_options(check, checkSeq, /*positional=*/true);
    std::string checkSubset, checkOut;
    double checkP = -1.0, checkDelta = 0.0, checkC = 0.01;
    bool checkKoren = false;
    check->add_option("--subset", checkSubset, "subset file (1-based indices)");
    check->add_option("--p", checkP, "survival probability for the percolation condition");
    check->add_option("--delta", checkDelta, "condition delta (default 1/log log M)");
    check->add_option("--c", checkC, "constant in the gamma < 1 - c boundary check");
    check->add_flag("--koren", checkKoren, "include the disjoint-sets witness when not graphical");
    check->add_option("--out", checkOut, "write the JSON report here (plus a side manifest)");

    // ---- sample ----
    auto* sample = app.add_subcommand("sample", "draw uniform samples and write edge lists");
    SeqArgs sampleSeq;
    add_seq_options(sample, sampleSeq);
    std::string sampleMethod = "auto", sampleOut = "samples";
    std::uint64_t sampleSeed = 1;
    Count sampleCount = 1;
    Count sampleSwitchSteps = -1;
    double sampleSwitchFactor = 20.0;
    Count sampleMaxRejections = 2000000;
    sample->add_option("--method", sampleMethod, "auto | rejection | switch");
    sample->add_option("--seed", sampleSeed, "root seed");
    sample->add_option("--count", sampleCount, "number of samples");
    sample->add_option("--out", sampleOut, "output directory");
    sample->add_option("--switch-steps", sampleSwitchSteps, "swap count (-1: 20 m log m)");
    sample->add_option("--switch-factor", sampleSwitchFactor, "swap count factor");
    sample->add_option("--max-rejections", sampleMaxRejections, "pairing attempts budget");

    // ---- model-h / model-a ----
    auto* modelH = app.add_subcommand("model-h", "build the fixed-subset model sequence d_H");
    SeqArgs modelHSeq;
    add_seq_options(modelH, modelHSeq);
    std::string modelHSubset, modelHCsv, modelHOut;
    double modelHDelta = 0.0;
    modelH->add_option("--subset", modelHSubset, "subset file")->required();
    modelH->add_option("--delta", modelHDelta, "delta (default 1/log log M)");
    modelH->add_option("--csv", modelHCsv, "write k,n_k,ytilde_k rows here");
    modelH->add_option("--out", modelHOut, "write the JSON report here");

    auto* modelA = app.add_subcommand("model-a", "build the percolation model sequence d_A");
    SeqArgs modelASeq;
    add_seq_options(modelA, modelASeq);
    std::string modelACsv, modelAOut;
    double modelAP = 0.5, modelADelta = 0.0;
    modelA->add_option("--p", modelAP, "survival probability")->required();
    modelA->add_option("--delta", modelADelta, "delta (default 1/log log M)");
    modelA->add_option("--csv", modelACsv, "write k,n_k,wtilde_k rows here");
    modelA->add_option("--out", modelAOut, "write the JSON report here");

    // ---- percolate ----
    auto* percolate = app.add_subcommand("percolate", "site percolation trials on sampled graphs");
    SeqArgs percSeq;
    add_seq_options(percolate, percSeq);
    double percP = 0.5;
    Count percTrials = 1;
    std::uint64_t percSeed = 1;
    std::string percMethod = "auto", percOut;
    percolate->add_option("--p", percP, "survival probability")->required();
    percolate->add_option("--trials", percTrials, "trial count");
    percolate->add_option("--seed", percSeed, "root seed");
    percolate->add_option("--method", percMethod, "auto | rejection | switch");
    percolate->add_option("--out", percOut, "write the JSON-lines stream here");

    // ---- giant ----
    auto* giant = app.add_subcommand("giant", "threshold statistics for d_H or d_A");
    SeqArgs giantSeq;
    add_seq_options(giant, giantSeq);
    std::string giantSubset, giantOut;
    double giantP = -1.0, giantEps = 0.01, giantDelta = 0.0, giantLambda = -1.0;
    giant->add_option("--subset", giantSubset, "subset file (fixed-subset mode)");
    giant->add_option("--p", giantP, "survival probability (percolation mode)");
    giant->add_option("--eps", giantEps, "threshold constant");
    giant->add_option("--delta", giantDelta, "delta (default 1/log log M)");
    giant->add_option("--lambda", giantLambda, "well-behavedness floor (default log n)");
    giant->add_option("--out", giantOut, "write the JSON report here");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run a Monte Carlo verification suite");
    std::string verifySuite, verifyConfig, verifyOut, verifyCsv;
    int verifyThreads = 0;
    verify->add_option("--suite", verifySuite, "thm23 | thm25 | switching | giant")->required();
    verify->add_option("--config", verifyConfig, "suite config JSON file")->required();
    verify->add_option("--out", verifyOut, "write the report here");
    verify->add_option("--csv", verifyCsv, "sidecar CSV path (giant sweep)");
    verify->add_option("--threads", verifyThreads, "worker cap (default: INDSEQ_THREADS or hardware)");

    // ---- enumerate ----
    auto* enumerate = app.add_subcommand("enumerate", "exhaustively list small realizations");
    SeqArgs enumSeq;
    add_seq_options(enumerate, enumSeq);
    std::string enumOut;
    int enumLimit = 8;
    enumerate->add_option("--limit", enumLimit, "vertex-count limit");
    enumerate->add_option("--out", enumOut, "directory for edge-list files");

    try {
        app.parse(argc, argv);

        if (*check) {
            const DegreeSequence d = checkSeq.load();
            const double delta =
                checkDelta > 0.0 ? checkDelta : default_delta(static_cast<double>(d.total_degree()));
            json report{{"config",
                         {{"seq", checkSeq.spec()},
                          {"delta", delta},
                          {"c", checkC}}},
                        {"n", d.n()},
                        {"M", d.total_degree()},
                        {"M2", d.total_degree_squared()},
                        {"maxDegree", d.max_degree()},
                        {"hist", hist_to_json(d.histogram())},
                        {"digest", d.digest()},
                        {"oddSum", d.odd_sum()},
                        {"graphical", is_graphical(d)}};
            if (checkKoren) {
                const GraphicalityDiagnosis diag = explain_graphicality(d.entries());
                if (diag.witness) {
                    report["korenWitness"] = {{"a", diag.witness->a},
                                              {"b", diag.witness->b},
                                              {"lhs", diag.witness->lhs},
                                              {"rhs", diag.witness->rhs}};
                } else {
                    report["korenWitness"] = nullptr;
                }
            }
            if (!checkSubset.empty()) {
                const VertexSubset S = load_subset_file(checkSubset, d);
                report["config"]["subset"] = checkSubset;
                report["subset"] = {{"size", S.size()},
                                    {"degreeTotal", S.degree_total()},
                                    {"gamma", S.gamma()}};
                report["conditionFixed"] =
                    condition_to_json(check_condition_fixed_subset(d, S, delta, checkC));
            }
            if (checkP > 0.0) {
                report["config"]["p"] = checkP;
                report["conditionPercolation"] =
                    condition_to_json(check_condition_percolation(d, checkP, delta, checkC));
            }
            return emit_report(report, checkOut, argvCopy);
        }

        if (*sample) {
            const DegreeSequence d = sampleSeq.load();
            SamplerConfig cfg;
            cfg.method = sample_method_from_string(sampleMethod);
            cfg.switchSteps = sampleSwitchSteps;
            cfg.switchFactor = sampleSwitchFactor;
            cfg.maxRejections = sampleMaxRejections;
            fs::create_directories(sampleOut);
            const Rng root(sampleSeed);
            json samples = json::array();
            for (Count i = 0; i < sampleCount; ++i) {
                cfg.seed = root.split_seed(static_cast<std::uint64_t>(i), 0);
                SampleInfo info;
                const Graph g = sample_uniform(d, cfg, &info);
                std::ostringstream name;
                name << "sample_" << std::setw(4) << std::setfill('0') << i << ".edges";
                const std::string path = (fs::path(sampleOut) / name.str()).string();
                write_edge_list_file(g, path);
                json rec{{"file", name.str()},
                         {"seed", info.seed},
                         {"method", to_string(info.methodUsed)},
                         {"rejections", info.rejections},
                         {"switchSteps", info.switchSteps},
                         {"switchAccepted", info.switchAccepted}};
                if (!info.note.empty()) rec["note"] = info.note;
                samples.push_back(std::move(rec));
            }
            json manifest{{"config",
                           {{"seq", sampleSeq.spec()},
                            {"method", sampleMethod},
                            {"seed", sampleSeed},
                            {"count", sampleCount},
                            {"switchSteps", sampleSwitchSteps},
                            {"switchFactor", sampleSwitchFactor},
                            {"maxRejections", sampleMaxRejections}}},
                          {"samples", samples},
                          {"generator", std::string(Rng::kName)},
                          {"writtenAt", iso8601_now()}};
            std::ofstream mf(fs::path(sampleOut) / "manifest.json");
            if (!mf) throw std::runtime_error("cannot write sample manifest");
            mf << manifest.dump(2) << '\n';
            manifest.erase("writtenAt");  // keep stdout deterministic
            std::cout << manifest.dump(2) << '\n';
            return 0;
        }

        if (*modelH) {
            const DegreeSequence d = modelHSeq.load();
            const VertexSubset S = load_subset_file(modelHSubset, d);
            const double delta = modelHDelta > 0.0
                                     ? modelHDelta
                                     : default_delta(static_cast<double>(d.total_degree()));
            const ModelSequence m = build_dh(d, S, delta);
            json report = model_to_json(m);
            report["config"] = {{"seq", modelHSeq.spec()}, {"subset", modelHSubset}, {"delta", delta}};
            if (!modelHCsv.empty()) write_model_csv(m, modelHCsv);
            return emit_report(report, modelHOut, argvCopy);
        }

        if (*modelA) {
            const DegreeSequence d = modelASeq.load();
            const double delta = modelADelta > 0.0
                                     ? modelADelta
                                     : default_delta(static_cast<double>(d.total_degree()));
            const ModelSequence m = build_da(d, modelAP, delta);
            json report = model_to_json(m);
            report["config"] = {{"seq", modelASeq.spec()}, {"p", modelAP}, {"delta", delta}};
            if (!modelACsv.empty()) write_model_csv(m, modelACsv);
            return emit_report(report, modelAOut, argvCopy);
        }

        if (*percolate) {
            const DegreeSequence d = percSeq.load();
            SamplerConfig cfg;
            cfg.method = sample_method_from_string(percMethod);
            const Rng root(percSeed);
            std::ostream* out = &std::cout;
            std::ofstream file;
            if (!percOut.empty()) {
                file.open(percOut);
                if (!file) throw std::runtime_error("cannot write: " + percOut);
                out = &file;
            }
            double sumSize = 0, sumDeg = 0, sumLargest = 0, sumNonIso = 0;
            for (Count t = 0; t < percTrials; ++t) {
                cfg.seed = root.split_seed(static_cast<std::uint64_t>(t), 0);
                const Graph g = sample_uniform(d, cfg);
                const PercolationOutcome o =
                    percolate_site(g, percP, root.split_seed(static_cast<std::uint64_t>(t), 1));
                const ComponentSummary comp = components(o.inducedGraph);
                json line{{"trial", t},
                          {"graphSeed", cfg.seed},
                          {"percSeed", o.seed},
                          {"sizeS", o.sizeS},
                          {"degS", o.degS},
                          {"inducedEdges", o.inducedGraph.m()},
                          {"nonIsolated", comp.nonIsolated},
                          {"largest", comp.largest}};
                (*out) << line.dump() << '\n';
                sumSize += static_cast<double>(o.sizeS);
                sumDeg += static_cast<double>(o.degS);
                sumLargest += static_cast<double>(comp.largest);
                sumNonIso += static_cast<double>(comp.nonIsolated);
            }
            const double tn = static_cast<double>(percTrials);
            json footer{{"aggregate",
                         {{"trials", percTrials},
                          {"meanSizeS", sumSize / tn},
                          {"meanDegS", sumDeg / tn},
                          {"meanNonIsolated", sumNonIso / tn},
                          {"meanLargest", sumLargest / tn}}},
                        {"config",
                         {{"seq", percSeq.spec()},
                          {"p", percP},
                          {"trials", percTrials},
                          {"seed", percSeed},
                          {"method", percMethod}}}};
            (*out) << footer.dump() << '\n';
            if (!percOut.empty()) {
                std::ofstream manifest(percOut + ".manifest.json");
                manifest << make_manifest(argvCopy).dump(2) << '\n';
            }
            return 0;
        }

        if (*giant) {
            const DegreeSequence d = giantSeq.load();
            const double delta = giantDelta > 0.0
                                     ? giantDelta
                                     : default_delta(static_cast<double>(d.total_degree()));
            const double lambda =
                giantLambda > 0.0 ? giantLambda : std::log(static_cast<double>(d.n()));
            json report;
            if (!giantSubset.empty()) {
                const VertexSubset S = load_subset_file(giantSubset, d);
                const ModelSequence dh = build_dh(d, S, delta);
                const GiantStats stats = joos_stats(dh);
                const GiantVerdict v = giant_predicate_fixed(dh, giantEps, d, S);
                report = {{"mode", "fixed"},
                          {"jd", stats.jd},
                          {"R", stats.R},
                          {"MJ", stats.MJ},
                          {"ratio", v.ratio},
                          {"hasGiant", v.hasGiant},
                          {"eps", v.eps},
                          {"wellBehaved", well_behaved(stats, lambda)},
                          {"lambda", lambda},
                          {"config",
                           {{"seq", giantSeq.spec()},
                            {"subset", giantSubset},
                            {"delta", delta},
                            {"eps", giantEps}}}};
            } else if (giantP > 0.0) {
                const ModelSequence da = build_da(d, giantP, delta);
                const GiantStats stats = joos_stats(da);
                const GiantVerdict v = giant_predicate_perc(da, giantEps, d, giantP);
                report = {{"mode", "percolation"},
                          {"jd", stats.jd},
                          {"R", stats.R},
                          {"MJ", stats.MJ},
                          {"ratio", v.ratio},
                          {"hasGiant", v.hasGiant},
                          {"eps", v.eps},
                          {"wellBehaved", well_behaved(stats, lambda)},
                          {"lambda", lambda},
                          {"config",
                           {{"seq", giantSeq.spec()},
                            {"p", giantP},
                            {"delta", delta},
                            {"eps", giantEps}}}};
            } else {
                throw CLI::ValidationError("giant", "pass --subset or --p");
            }
            return emit_report(report, giantOut, argvCopy);
        }

        if (*verify) {
            std::ifstream cf(verifyConfig);
            if (!cf) throw std::runtime_error("cannot open config: " + verifyConfig);
            json config = json::parse(cf);
            if (verifyThreads > 0) config["threads"] = verifyThreads;
            if (!verifyCsv.empty()) config["csvPath"] = verifyCsv;
            const ExperimentReport report = run_suite(verifySuite, config);
            emit_report(report.to_json(), verifyOut, argvCopy);
            return report.pass() ? 0 : 1;
        }

        if (*enumerate) {
            const DegreeSequence d = enumSeq.load();
            const std::vector<Graph> graphs = enumerate_graphs(d, enumLimit);
            json files = json::array();
            if (!enumOut.empty()) {
                fs::create_directories(enumOut);
                for (std::size_t i = 0; i < graphs.size(); ++i) {
                    std::ostringstream name;
                    name << "realization_" << std::setw(4) << std::setfill('0') << i << ".edges";
                    write_edge_list_file(graphs[i], (fs::path(enumOut) / name.str()).string());
                    files.push_back(name.str());
                }
            }
            json report{{"count", graphs.size()},
                        {"files", files},
                        {"config", {{"seq", enumSeq.spec()}, {"limit", enumLimit}}}};
            std::cout << report.dump(2) << '\n';
            return 0;
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
