#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <vector>

namespace indseq {

/// Exact-to-double binomial pmf/cdf. The pmf is anchored at the mode in log
/// space and extended by the multiplicative ratio recurrence, then
/// normalized, so it stays well-conditioned for trials up to about 1e6 and
/// success probabilities across many orders of magnitude. The final cdf
/// entry is exactly 1.0.
struct BinomialTable {
    int trials = 0;            // j
    double prob = 0.0;         // q
    std::vector<double> pmf;   // size j+1
    std::vector<double> cdf;   // size j+1

    double pmf_at(int k) const { return (k < 0 || k > trials) ? 0.0 : pmf[static_cast<std::size_t>(k)]; }
    double cdf_at(int k) const {
        if (k < 0) return 0.0;
        if (k >= trials) return 1.0;
        return cdf[static_cast<std::size_t>(k)];
    }
};

/// Requires trials >= 0 and prob in [0, 1].
BinomialTable binomial_table(int trials, double prob);

/// Read-shared cache keyed by (trials, prob bits). Single writer per insert,
/// concurrent readers otherwise; tables are immutable once published.
class BinomialTableCache {
public:
    std::shared_ptr<const BinomialTable> get(int trials, double prob);

private:
    std::shared_mutex mutex_;
    std::map<std::pair<int, std::uint64_t>, std::shared_ptr<const BinomialTable>> tables_;
};

/// Kahan compensated accumulator.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double v) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

struct FloorTieLog {
    int events = 0;  // inputs whose fractional part landed within 1e-9 of 1/2
};

/// floor(x + 1/2) with deterministic tie handling: when x + 1/2 is within
/// 1e-9 of an integer the result snaps to that integer (round half up) and
/// the event is logged. Plain floor otherwise.
std::int64_t floor_half_up(double x, FloorTieLog* log = nullptr);

}  // namespace indseq
