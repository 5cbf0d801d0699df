#include <covert/stats.hpp>
#include <covert/trendtest.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace covert {
namespace {

void check_beta(double beta) {
    if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("beta must lie in (0,1)");
}

void check_t(int t) {
    if (t < 1) throw std::invalid_argument("t must be >= 1, got " + std::to_string(t));
}

constexpr int kExactMaxT = 20;

}  // namespace

CoxStuartCount cox_stuart_statistic(std::span<const double> values) {
    if (values.size() % 2 != 0)
        throw std::invalid_argument("cox_stuart_statistic: odd-length input (" + std::to_string(values.size()) + ")");
    const std::size_t t = values.size() / 2;
    CoxStuartCount out;
    for (std::size_t i = 0; i < t; ++i) {
        const double diff = values[i] - values[t + i];
        if (diff == 0.0) continue;
        ++out.t_used;
        if (diff < 0.0) ++out.statistic;
    }
    return out;
}

CoxStuartCount cox_stuart_statistic(const PowerVector& powers) {
    const auto values = powers.values();
    return cox_stuart_statistic(std::span<const double>{values});
}

double normal_threshold(int t, double beta) {
    check_t(t);
    check_beta(beta);
    const double tt = static_cast<double>(t);
    return 0.5 * (tt + std::sqrt(tt) * stats::normal_quantile(beta));
}

int exact_binomial_threshold(int t, double beta) {
    check_t(t);
    check_beta(beta);
    // cumulative = P{Bin(t,1/2) < k}, walked upward from k = 0 in log space.
    const double log_half_t = t * std::log(0.5);
    const double slack = 1e-12 * beta;
    double cumulative = 0.0;
    int k = 0;
    while (k <= t) {
        const double log_pmf = std::lgamma(t + 1.0) - std::lgamma(k + 1.0) - std::lgamma(t - k + 1.0) + log_half_t;
        const double next = cumulative + std::exp(log_pmf);
        if (next > beta + slack) break;
        cumulative = next;
        ++k;
    }
    return k;
}

ThresholdMethod resolve_method(int t, ThresholdMethod method) noexcept {
    if (method != ThresholdMethod::Auto) return method;
    return t <= kExactMaxT ? ThresholdMethod::ExactBinomial : ThresholdMethod::NormalApprox;
}

double trend_threshold(int t, double beta, ThresholdMethod method) {
    return resolve_method(t, method) == ThresholdMethod::ExactBinomial
               ? static_cast<double>(exact_binomial_threshold(t, beta))
               : normal_threshold(t, beta);
}

TrendVerdict detect_trend(std::span<const double> values, double beta, ThresholdMethod method) {
    check_beta(beta);
    const auto count = cox_stuart_statistic(values);
    TrendVerdict v;
    v.statistic = count.statistic;
    v.t_used = count.t_used;
    v.beta = beta;
    v.method = resolve_method(std::max(count.t_used, 1), method);
    if (count.t_used == 0) {
        // Every pair tied: nothing to test.
        v.threshold = 0.0;
        v.decision = TrendDecision::NoTrendDetected;
        return v;
    }
    v.threshold = trend_threshold(count.t_used, beta, v.method);
    v.decision = v.statistic < v.threshold ? TrendDecision::DownwardTrend : TrendDecision::NoTrendDetected;
    return v;
}

TrendVerdict detect_trend(const PowerVector& powers, double beta, ThresholdMethod method) {
    const auto values = powers.values();
    return detect_trend(std::span<const double>{values}, beta, method);
}

TrendVerdict detect_upward_trend(const PowerVector& powers, double beta, ThresholdMethod method) {
    auto values = powers.values();
    std::reverse(values.begin(), values.end());
    return detect_trend(std::span<const double>{values}, beta, method);
}

std::string_view to_string(ThresholdMethod method) noexcept {
    switch (method) {
        case ThresholdMethod::ExactBinomial: return "exact";
        case ThresholdMethod::NormalApprox: return "normal";
        case ThresholdMethod::Auto: return "auto";
    }
    return "auto";
}

std::string_view to_string(TrendDecision decision) noexcept {
    return decision == TrendDecision::DownwardTrend ? "downward_trend" : "no_trend";
}

}  // namespace covert
