#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "indseq/degree_sequence.hpp"

namespace indseq {

/// One pass/fail criterion inside a suite. Bounds taken literally from the
/// asymptotic statements are evaluated and logged with enforced = false;
/// the suite verdict depends only on the enforced desk-scale gates.
struct Gate {
    std::string description;
    double measured = 0.0;
    double threshold = 0.0;
    bool pass = false;
    bool enforced = true;
};

/// Self-contained run record: replaying `config` (it embeds every resolved
/// parameter, including seeds) reproduces every number bit-exactly. No
/// timestamps here -- those live in the side manifest.
struct ExperimentReport {
    std::string suite;
    nlohmann::json config = nlohmann::json::object();
    Count trials = 0;
    nlohmann::json perTrial = nlohmann::json::array();
    std::vector<Gate> gates;
    std::string slackNote;

    bool pass() const;
    nlohmann::json to_json() const;
    std::string to_string(int indent = 2) const;
};

/// Total variation distance between two finitely supported distributions.
double total_variation(const std::map<int, double>& p, const std::map<int, double>& q);

/// Pearson statistic; expected counts must be positive.
double chi_square_statistic(const std::vector<Count>& observed,
                            const std::vector<double>& expected);

/// 99.9% quantile of chi-square with dof in [1, 20].
double chi_square_quantile_999(int dof);

/// Runs body(0..trials-1), fanned out over `threads` workers. Results must
/// be written into per-trial slots; the caller aggregates in trial order, so
/// output is independent of the thread count. threads <= 0 resolves via the
/// INDSEQ_THREADS environment variable, then hardware concurrency.
int resolve_threads(int requested);
void run_trials(Count trials, int threads, const std::function<void(Count)>& body);

}  // namespace indseq
