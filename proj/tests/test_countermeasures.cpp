#include "oracles.hpp"

#include <covert/adversary.hpp>
#include <covert/countermeasures.hpp>
#include <covert/trendtest.hpp>

#include <gtest/gtest.h>

#include <cmath>

namespace covert {
namespace {

TEST(TxProcessTest, Validation) {
    EXPECT_NO_THROW(TxProcess::always_on().validate());
    EXPECT_THROW(TxProcess::bernoulli(1.5).validate(), std::invalid_argument);
    EXPECT_THROW(TxProcess::bernoulli(-0.1).validate(), std::invalid_argument);
    EXPECT_THROW(TxProcess::power_descent(20, 36, 0.8).validate(), std::invalid_argument);
    EXPECT_THROW(TxProcess::power_descent(36, 20, 0.0).validate(), std::invalid_argument);
}

TEST(PowerAtSlot, DescentStepsAndHolds) {
    const auto proc = TxProcess::power_descent(36.0, 20.0, 0.8);
    Rng rng{1};
    EXPECT_DOUBLE_EQ(power_at_slot(proc, 1, 30.0, rng).power_db, 36.0);
    EXPECT_NEAR(power_at_slot(proc, 2, 30.0, rng).power_db, 35.2, 1e-12);
    EXPECT_NEAR(power_at_slot(proc, 21, 30.0, rng).power_db, 20.0, 1e-12);
    EXPECT_DOUBLE_EQ(power_at_slot(proc, 100, 30.0, rng).power_db, 20.0);
    EXPECT_TRUE(power_at_slot(proc, 100, 30.0, rng).transmitting);
    EXPECT_THROW(power_at_slot(proc, 0, 30.0, rng), std::invalid_argument);
}

TEST(PowerAtSlot, AlwaysOnOff) {
    Rng rng{1};
    const auto on = power_at_slot(TxProcess::always_on(), 3, 27.0, rng);
    EXPECT_TRUE(on.transmitting);
    EXPECT_DOUBLE_EQ(on.power_db, 27.0);
    const auto off = power_at_slot(TxProcess::always_off(), 3, 27.0, rng);
    EXPECT_FALSE(off.transmitting);
    EXPECT_TRUE(std::isinf(off.power_db) && off.power_db < 0.0);
}

TEST(PowerAtSlot, BernoulliFrequency) {
    Rng rng{2};
    const auto proc = TxProcess::bernoulli(0.3);
    int on = 0;
    constexpr int kDraws = 50000;
    for (int i = 0; i < kDraws; ++i) on += power_at_slot(proc, 1 + i % 50, 30.0, rng).transmitting;
    EXPECT_NEAR(double(on) / kDraws, 0.3, 3.0 * std::sqrt(0.21 / kDraws));
}

TEST(Scheduling, ExpectedStatistic) {
    EXPECT_DOUBLE_EQ(expected_statistic_scheduled(0.0, 100), 50.0);
    EXPECT_DOUBLE_EQ(expected_statistic_scheduled(1.0, 100), 0.0);
    EXPECT_DOUBLE_EQ(expected_statistic_scheduled(0.5, 40), 5.0);
}

TEST(Scheduling, CovertThresholdFrozen) {
    EXPECT_NEAR(*covert_p_threshold(0.05, 100), 0.0859351, 1e-6);
    EXPECT_NEAR(*covert_p_threshold(0.05, 50), 0.1239963, 1e-6);
    EXPECT_FALSE(covert_p_threshold(0.05, 2).has_value());
    EXPECT_TRUE(covert_p_threshold(0.05, 3).has_value());
    EXPECT_THROW(covert_p_threshold(0.0, 10), std::invalid_argument);
    EXPECT_THROW(covert_p_threshold(0.05, 0), std::invalid_argument);
}

TEST(Scheduling, ThresholdBalancesExpectedStatisticProperty) {
    Rng rng{3};
    std::uniform_real_distribution<double> beta_dist{1e-3, 0.45};
    for (int i = 0; i < 2000; ++i) {
        const double beta = beta_dist(rng);
        const int t = 1 + static_cast<int>(rng() % 400);
        const auto p = covert_p_threshold(beta, t);
        const double z = oracle::normal_quantile(beta);
        if (t <= z * z) {
            EXPECT_FALSE(p.has_value());
            continue;
        }
        ASSERT_TRUE(p.has_value());
        EXPECT_GE(*p, 0.0);
        EXPECT_LT(*p, 1.0);
        EXPECT_NEAR(expected_statistic_scheduled(*p, t), normal_threshold(t, beta), 1e-9);
    }
}

TEST(Scheduling, ThresholdMonotoneProperty) {
    // Decreasing in t and in beta: a looser test leaves less room to transmit.
    Rng rng{4};
    std::uniform_real_distribution<double> beta_dist{1e-3, 0.45};
    for (int i = 0; i < 2000; ++i) {
        double b1 = beta_dist(rng), b2 = beta_dist(rng);
        if (b1 > b2) std::swap(b1, b2);
        const int t1 = 20 + static_cast<int>(rng() % 300);
        const int t2 = t1 + 1 + static_cast<int>(rng() % 300);
        const auto small_t = covert_p_threshold(b2, t1);
        const auto large_t = covert_p_threshold(b2, t2);
        ASSERT_TRUE(small_t && large_t);
        EXPECT_GT(*small_t, *large_t);
        const auto strict = covert_p_threshold(b1, t2);
        ASSERT_TRUE(strict);
        EXPECT_GE(*strict, *large_t);
    }
}

TEST(Scheduling, SimulatedNegDiffProb) {
    Rng rng{5};
    // Silent on both sides: a fair coin.
    const double silent = simulate_neg_diff_prob(0.0, 10.0, 1.0, 1.0, 50, 40000, rng);
    EXPECT_NEAR(silent, 0.5, 3.0 * std::sqrt(0.25 / 40000));
    // Always transmitting with a strong gradient: below the large-m bound plus noise.
    const double bound = neg_diff_prob_bound(10.0, 1.0, 1.0);
    const double loud = simulate_neg_diff_prob(1.0, 10.0, 1.0, 1.0, 1000, 40000, rng);
    EXPECT_LE(loud, bound + 3.0 * std::sqrt(bound / 40000));
    // Scheduling raises the chance of a negative difference.
    const double scheduled = simulate_neg_diff_prob(0.5, 10.0, 1.0, 1.0, 1000, 40000, rng);
    EXPECT_GT(scheduled, loud);
}

TEST(Scheduling, SpecExamples) {
    Rng rng{6};
    for (int slot = 1; slot < 30; ++slot) EXPECT_FALSE(power_at_slot(TxProcess::bernoulli(0.0), slot, 30.0, rng).transmitting);
    EXPECT_NEAR(expected_statistic_scheduled(0.1, 100), 40.5, 1e-12);
    EXPECT_NEAR(*covert_p_threshold(0.5, 37), 0.0, 1e-15);
}

}  // namespace
}  // namespace covert
