#pragma once

#include <cstddef>
#include <span>

namespace covert::stats {

/// Standard normal CDF.
double normal_cdf(double x);

/// Standard normal quantile, Phi^-1(p) for p in (0,1).
double normal_quantile(double p);

/// Upper tail P{X > x} for X ~ chi-squared(dof).
double chi_squared_sf(double x, double dof);

/// Streaming mean/variance (Welford).
class RunningStats {
public:
    void add(double x) noexcept;
    void merge(const RunningStats& other) noexcept;

    [[nodiscard]] std::size_t count() const noexcept { return n_; }
    [[nodiscard]] double mean() const noexcept { return mean_; }
    /// Unbiased sample variance; 0 for fewer than two values.
    [[nodiscard]] double variance() const noexcept;
    [[nodiscard]] double std_error() const noexcept;

private:
    std::size_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

double mean(std::span<const double> xs);
double variance(std::span<const double> xs);

/// Binomial standard error sqrt(p(1-p)/n).
double binomial_se(double p, std::size_t n);

/// Wilson score interval for k successes out of n at the given two-sided z.
struct Interval {
    double low;
    double high;
};
Interval wilson_interval(std::size_t k, std::size_t n, double z = 1.959963984540054);

/// Pearson chi-square goodness-of-fit p-value. `expected` are counts; bins with
/// expected count below `min_expected` are pooled into their neighbour.
double chi_square_gof_pvalue(std::span<const double> observed, std::span<const double> expected,
                             double min_expected = 5.0);

/// One-sided Welch z-statistic for mean(a) - mean(b).
double welch_z(const RunningStats& a, const RunningStats& b);

}  // namespace covert::stats
