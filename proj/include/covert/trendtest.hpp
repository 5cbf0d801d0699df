#pragma once

// Cox-Stuart sign test for a downward trend in radiometer readings.

#include <covert/channel.hpp>

#include <span>
#include <string_view>

namespace covert {

enum class TrendDecision { DownwardTrend, NoTrendDetected };

enum class ThresholdMethod {
    ExactBinomial,
    NormalApprox,
    /// Exact binomial for t <= 20, normal approximation above.
    Auto,
};

struct CoxStuartCount {
    int statistic = 0;  ///< number of negative differences
    int t_used = 0;     ///< non-zero differences that were tested
};

struct TrendVerdict {
    int statistic = 0;
    int t_used = 0;
    double threshold = 0.0;
    double beta = 0.05;
    TrendDecision decision = TrendDecision::NoTrendDetected;
    ThresholdMethod method = ThresholdMethod::ExactBinomial;

    [[nodiscard]] bool detected() const noexcept { return decision == TrendDecision::DownwardTrend; }
};

/// Pairs value[i] with value[t+i] and counts value[i] - value[t+i] < 0.
/// Zero differences are dropped from t_used. Throws std::invalid_argument on odd length.
CoxStuartCount cox_stuart_statistic(std::span<const double> values);
CoxStuartCount cox_stuart_statistic(const PowerVector& powers);

/// 0.5 * (t + sqrt(t) * Phi^-1(beta)).
double normal_threshold(int t, double beta);

/// Largest k with P{Bin(t, 1/2) < k} <= beta.
int exact_binomial_threshold(int t, double beta);

/// Threshold for `t` differences under `method`; Auto resolves by t.
double trend_threshold(int t, double beta, ThresholdMethod method);

/// Method that Auto resolves to for `t` differences.
ThresholdMethod resolve_method(int t, ThresholdMethod method) noexcept;

/// Downward trend iff statistic < threshold, threshold evaluated at t_used.
TrendVerdict detect_trend(std::span<const double> values, double beta,
                          ThresholdMethod method = ThresholdMethod::Auto);
TrendVerdict detect_trend(const PowerVector& powers, double beta,
                          ThresholdMethod method = ThresholdMethod::Auto);

/// Same test on the reversed sequence, so DownwardTrend here means power rises with index.
TrendVerdict detect_upward_trend(const PowerVector& powers, double beta,
                                 ThresholdMethod method = ThresholdMethod::Auto);

std::string_view to_string(ThresholdMethod method) noexcept;
std::string_view to_string(TrendDecision decision) noexcept;

}  // namespace covert
