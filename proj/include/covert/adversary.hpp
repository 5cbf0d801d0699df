#pragma once

// The mobile warden: plans a walk toward the suspected transmitter, samples the
// radiometer at each stop, runs the trend test, and evaluates the detection bounds.

#include <covert/channel.hpp>
#include <covert/countermeasures.hpp>
#include <covert/trendtest.hpp>

#include <limits>
#include <vector>

namespace covert {

/// Order in which the warden visits the planned locations (one time slot each).
enum class WalkDirection {
    Approach,  ///< farthest location first
    Retreat,   ///< nearest location first
};

struct WalkPlan {
    int t = 50;
    double d_spacing = 0.5;
    double d_min = 0.5;
    double d_max = std::numeric_limits<double>::infinity();
    int m = 100;
    WalkDirection direction = WalkDirection::Approach;

    /// Distance of 1-based location i (1 = nearest).
    [[nodiscard]] double distance(int i) const noexcept { return d_min + (i - 1) * d_spacing; }
    /// All 2t distances, nearest first.
    [[nodiscard]] std::vector<double> distances() const;
    /// 1-based time slot in which location i is visited.
    [[nodiscard]] int slot_of(int i) const noexcept { return direction == WalkDirection::Approach ? 2 * t - i + 1 : i; }

    void validate() const;
};

WalkPlan plan_walk(int t, double d_spacing, double d_min, int m = 100);

struct DetectionCampaign {
    WalkPlan plan;
    PowerVector powers;
    TrendVerdict verdict;
    std::vector<SlotState> slots;  ///< transmit state per location, nearest first
};

/// One full episode: draw Alice's state per slot, sample each location, test the vector.
DetectionCampaign run_campaign(const ChannelParams& params, const WalkPlan& plan, const TxProcess& tx,
                               double beta, Rng& rng, ThresholdMethod method = ThresholdMethod::Auto);

/// Large-m bound on P{Delta_i < 0}: ((p_far + noise)/(p_near + noise))^2.
/// Throws std::invalid_argument when p_far > p_near or noise <= 0.
double neg_diff_prob_bound(double p_near, double p_far, double noise);

struct FRatioMoments {
    double mean;
    double variance;
};

/// Mean m/(m-2) and variance 4(m-1)m/((m-2)^2 (m-4)) of F(m,m). Requires m > 4.
FRatioMoments f_ratio_moments(int m);

/// Finite-m second-moment bound (Var + E^2) * ((p_far + noise)/(p_near + noise))^2,
/// capped at 1. Requires m > 4.
double neg_diff_prob_bound_finite(int m, double p_near, double p_far, double noise);

/// Sum of neg_diff_prob_bound over the t pairs of `plan` under always-on transmission.
double expected_negative_bound(const ChannelParams& params, const WalkPlan& plan);

/// (Phi^-1(beta) / (1 - 8/(2^alpha + 1)^2))^2.
double required_locations_bound(double beta, double alpha);

/// Smallest integer t strictly above required_locations_bound. beta in (0, 0.5), alpha > 2.
int required_locations(double beta, double alpha);

/// Transmit power (dB) that puts the unbounded-path-loss signal power at `distance`
/// equal to `target_power` (linear). Used to build the P_2t = noise geometry.
double p0_db_for_power_at(double distance, double alpha, double target_power);

std::string_view to_string(WalkDirection direction) noexcept;

}  // namespace covert
