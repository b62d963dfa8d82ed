#include "indseq/condition.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace indseq {

double default_delta(double M) {
    if (!(M > 0)) throw std::invalid_argument("default_delta: M must be positive");
    if (M <= std::exp(1.0)) return 1.0;
    const double ll = std::log(std::log(M));
    return ll >= 1.0 ? 1.0 / ll : 1.0;
}

double cutoff_fixed(double gamma, double M, double delta) {
    return std::pow(delta, -1.0 / 16.0) * (1.0 / gamma) * std::log(M);
}

double cutoff_percolation(double p, double M, double delta) {
    return std::pow(delta, -1.0 / 16.0) * (1.0 / p) * std::log(M);
}

double small_degree_cap(double co, int maxDegree) {
    return std::min(co, static_cast<double>(maxDegree));
}

namespace {

ConditionReport evaluate(double maxDegree, double rate, double M, double rhs, double delta,
                         double c) {
    if (!(delta > 0.0) || delta > 1.0)
        throw std::invalid_argument("condition check: delta must be in (0, 1]");
    ConditionReport r;
    const double logM = std::log(M);
    const double base = (1.0 / rate) * logM;
    r.lhs = maxDegree * maxDegree * std::pow(base, 12.0);
    r.rhs = rhs;
    r.holds = r.lhs <= r.rhs;
    r.slack = r.lhs > 0.0 ? r.rhs / r.lhs : std::numeric_limits<double>::infinity();
    r.co = std::pow(delta, -1.0 / 16.0) * base;
    r.gammaOk = rate < 1.0 - c;
    return r;
}

}  // namespace

ConditionReport check_condition_fixed_subset(const DegreeSequence& d, const VertexSubset& S,
                                             double delta, double c) {
    if (S.size() == 0) throw std::invalid_argument("condition check: S must be non-empty");
    const double M = static_cast<double>(d.total_degree());
    const double gamma = S.gamma();
    return evaluate(d.max_degree(), gamma, M, delta * static_cast<double>(S.degree_total()), delta,
                    c);
}

ConditionReport check_condition_percolation(const DegreeSequence& d, double p, double delta,
                                            double c) {
    if (!(p > 0.0) || !(p < 1.0))
        throw std::invalid_argument("condition check: p must be in (0, 1)");
    const double M = static_cast<double>(d.total_degree());
    return evaluate(d.max_degree(), p, M, delta * p * M, delta, c);
}

}  // namespace indseq
