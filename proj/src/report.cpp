#include "indseq/report.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace indseq {

bool ExperimentReport::pass() const {
    for (const auto& g : gates)
        if (g.enforced && !g.pass) return false;
    return true;
}

nlohmann::json ExperimentReport::to_json() const {
    nlohmann::json gs = nlohmann::json::array();
    for (const auto& g : gates) {
        gs.push_back({{"description", g.description},
                      {"measured", g.measured},
                      {"threshold", g.threshold},
                      {"pass", g.pass},
                      {"enforced", g.enforced}});
    }
    return {{"suite", suite},      {"config", config}, {"trials", trials},
            {"perTrial", perTrial}, {"gates", gs},      {"slackNote", slackNote},
            {"pass", pass()}};
}

std::string ExperimentReport::to_string(int indent) const { return to_json().dump(indent); }

double total_variation(const std::map<int, double>& p, const std::map<int, double>& q) {
    double acc = 0.0;
    auto ip = p.begin();
    auto iq = q.begin();
    while (ip != p.end() || iq != q.end()) {
        if (iq == q.end() || (ip != p.end() && ip->first < iq->first)) {
            acc += std::abs(ip->second);
            ++ip;
        } else if (ip == p.end() || iq->first < ip->first) {
            acc += std::abs(iq->second);
            ++iq;
        } else {
            acc += std::abs(ip->second - iq->second);
            ++ip;
            ++iq;
        }
    }
    return acc / 2.0;
}

double chi_square_statistic(const std::vector<Count>& observed,
                            const std::vector<double>& expected) {
    if (observed.size() != expected.size())
        throw std::invalid_argument("chi_square_statistic: size mismatch");
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (!(expected[i] > 0.0))
            throw std::invalid_argument("chi_square_statistic: expected count must be positive");
        const double diff = static_cast<double>(observed[i]) - expected[i];
        stat += diff * diff / expected[i];
    }
    return stat;
}

double chi_square_quantile_999(int dof) {
    static const double table[] = {10.828, 13.816, 16.266, 18.467, 20.515, 22.458, 24.322,
                                   26.124, 27.877, 29.588, 31.264, 32.909, 34.528, 36.123,
                                   37.697, 39.252, 40.790, 42.312, 43.820, 45.315};
    if (dof < 1 || dof > 20)
        throw std::invalid_argument("chi_square_quantile_999: dof must be in [1, 20]");
    return table[dof - 1];
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("INDSEQ_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void run_trials(Count trials, int threads, const std::function<void(Count)>& body) {
    threads = resolve_threads(threads);
    if (trials <= 0) return;
    if (threads <= 1 || trials == 1) {
        for (Count t = 0; t < trials; ++t) body(t);
        return;
    }
    const int workers = static_cast<int>(std::min<Count>(threads, trials));
    std::atomic<Count> next{0};
    std::exception_ptr firstError;
    std::mutex errorMutex;
    auto work = [&]() {
        for (;;) {
            const Count t = next.fetch_add(1);
            if (t >= trials) return;
            try {
                body(t);
            } catch (...) {
                std::lock_guard lock(errorMutex);
                if (!firstError) firstError = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (firstError) std::rethrow_exception(firstError);
}

}  // namespace indseq
