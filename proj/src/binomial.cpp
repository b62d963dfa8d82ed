#include "indseq/binomial.hpp"

#include <cmath>
#include <cstring>
#include <mutex>
#include <stdexcept>

namespace indseq {

namespace {

double log_choose(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

BinomialTable binomial_table(int trials, double prob) {
    if (trials < 0) throw std::invalid_argument("binomial_table: trials must be >= 0");
    if (!(prob >= 0.0) || !(prob <= 1.0))
        throw std::invalid_argument("binomial_table: prob must be in [0, 1]");

    BinomialTable t;
    t.trials = trials;
    t.prob = prob;
    const auto size = static_cast<std::size_t>(trials) + 1;
    t.pmf.assign(size, 0.0);
    t.cdf.assign(size, 0.0);

    if (trials == 0 || prob == 0.0 || prob == 1.0) {
        const std::size_t hit = (prob == 1.0) ? static_cast<std::size_t>(trials) : 0;
        t.pmf[hit] = 1.0;
        for (std::size_t k = hit; k < size; ++k) t.cdf[k] = 1.0;
        return t;
    }

    int mode = static_cast<int>(std::floor((trials + 1.0) * prob));
    if (mode > trials) mode = trials;

    std::vector<double> raw(size, 0.0);
    const double logAnchor =
        log_choose(trials, mode) + mode * std::log(prob) + (trials - mode) * std::log1p(-prob);
    raw[static_cast<std::size_t>(mode)] = std::exp(logAnchor);

    const double odds = prob / (1.0 - prob);
    for (int k = mode; k < trials; ++k) {
        raw[static_cast<std::size_t>(k) + 1] =
            raw[static_cast<std::size_t>(k)] * (static_cast<double>(trials - k) / (k + 1.0)) * odds;
    }
    for (int k = mode; k > 0; --k) {
        raw[static_cast<std::size_t>(k) - 1] =
            raw[static_cast<std::size_t>(k)] * (static_cast<double>(k) / (trials - k + 1.0)) / odds;
    }

    KahanSum acc;
    std::vector<double> prefix(size);
    for (std::size_t k = 0; k < size; ++k) {
        acc.add(raw[k]);
        prefix[k] = acc.value();
    }
    const double total = prefix[size - 1];
    for (std::size_t k = 0; k < size; ++k) {
        t.pmf[k] = raw[k] / total;
        t.cdf[k] = prefix[k] / total;
    }
    t.cdf[size - 1] = 1.0;
    return t;
}

std::shared_ptr<const BinomialTable> BinomialTableCache::get(int trials, double prob) {
    std::uint64_t bits = 0;
    static_assert(sizeof(bits) == sizeof(prob));
    std::memcpy(&bits, &prob, sizeof(bits));
    const auto key = std::make_pair(trials, bits);
    {
        std::shared_lock lock(mutex_);
        auto it = tables_.find(key);
        if (it != tables_.end()) return it->second;
    }
    auto table = std::make_shared<const BinomialTable>(binomial_table(trials, prob));
    std::unique_lock lock(mutex_);
    auto [it, inserted] = tables_.emplace(key, std::move(table));
    return it->second;
}

std::int64_t floor_half_up(double x, FloorTieLog* log) {
    const double t = x + 0.5;
    const double nearest = std::round(t);
    if (std::abs(t - nearest) <= 1e-9) {
        if (log) ++log->events;
        return static_cast<std::int64_t>(nearest);
    }
    return static_cast<std::int64_t>(std::floor(t));
}

}  // namespace indseq
