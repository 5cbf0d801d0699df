#include <covert/adversary.hpp>
#include <covert/stats.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace covert {

void WalkPlan::validate() const {
    if (t < 1) throw std::invalid_argument("walk.t must be >= 1");
    if (m < 1) throw std::invalid_argument("walk.m must be >= 1");
    if (!(d_spacing > 0.0)) throw std::invalid_argument("walk.d_spacing must be positive");
    if (!(d_min > 0.0)) throw std::invalid_argument("walk.d_min must be positive");
    if (std::isfinite(d_max) && d_min + (2 * t - 1) * d_spacing > d_max * (1.0 + 1e-12))
        throw std::invalid_argument("walk: 2t locations do not fit below d_max");
}

std::vector<double> WalkPlan::distances() const {
    std::vector<double> out;
    out.reserve(2 * static_cast<std::size_t>(t));
    for (int i = 1; i <= 2 * t; ++i) out.push_back(distance(i));
    return out;
}

WalkPlan plan_walk(int t, double d_spacing, double d_min, int m) {
    WalkPlan plan;
    plan.t = t;
    plan.d_spacing = d_spacing;
    plan.d_min = d_min;
    plan.m = m;
    plan.validate();
    return plan;
}

DetectionCampaign run_campaign(const ChannelParams& params, const WalkPlan& plan, const TxProcess& tx, double beta,
                               Rng& rng, ThresholdMethod method) {
    params.validate();
    plan.validate();
    tx.validate();

    const int locations = 2 * plan.t;
    // Alice's state is drawn slot by slot in the order the warden visits.
    std::vector<SlotState> slots(locations);
    for (int slot = 1; slot <= locations; ++slot) {
        const int location = plan.direction == WalkDirection::Approach ? locations - slot + 1 : slot;
        slots[location - 1] = power_at_slot(tx, slot, params.p0_db, rng);
    }

    std::vector<PowerSample> samples;
    samples.reserve(locations);
    ChannelParams slot_params = params;
    for (int i = 1; i <= locations; ++i) {
        const auto& state = slots[i - 1];
        if (state.transmitting) slot_params.p0_db = state.power_db;
        samples.push_back(sample_radiometer(slot_params, plan.distance(i), plan.m, state.transmitting, rng));
    }

    PowerVector powers{std::move(samples)};
    TrendVerdict verdict = detect_trend(powers, beta, method);
    return {plan, std::move(powers), verdict, std::move(slots)};
}

double neg_diff_prob_bound(double p_near, double p_far, double noise) {
    if (!(noise > 0.0)) throw std::invalid_argument("neg_diff_prob_bound: noise must be positive");
    if (!(p_far >= 0.0)) throw std::invalid_argument("neg_diff_prob_bound: powers must be non-negative");
    if (p_far > p_near) throw std::invalid_argument("neg_diff_prob_bound: far power exceeds near power");
    const double ratio = (p_far + noise) / (p_near + noise);
    return ratio * ratio;
}

FRatioMoments f_ratio_moments(int m) {
    if (m <= 4) throw std::invalid_argument("f_ratio_moments: variance of F(m,m) needs m > 4");
    const double mm = m;
    return {mm / (mm - 2.0), 4.0 * (mm - 1.0) * mm / ((mm - 2.0) * (mm - 2.0) * (mm - 4.0))};
}

double neg_diff_prob_bound_finite(int m, double p_near, double p_far, double noise) {
    const auto moments = f_ratio_moments(m);
    const double second = moments.variance + moments.mean * moments.mean;
    return std::min(1.0, second * neg_diff_prob_bound(p_near, p_far, noise));
}

double expected_negative_bound(const ChannelParams& params, const WalkPlan& plan) {
    params.validate();
    plan.validate();
    double sum = 0.0;
    for (int i = 1; i <= plan.t; ++i) {
        sum += neg_diff_prob_bound(signal_power(params, plan.distance(i)),
                                   signal_power(params, plan.distance(plan.t + i)), params.noise_power);
    }
    return sum;
}

double required_locations_bound(double beta, double alpha) {
    if (!(beta > 0.0 && beta < 0.5)) throw std::invalid_argument("required_locations: beta must lie in (0, 0.5)");
    if (!(alpha > 2.0)) throw std::invalid_argument("required_locations: alpha must exceed 2");
    const double g = std::pow(2.0, alpha) + 1.0;
    const double ratio = stats::normal_quantile(beta) / (1.0 - 8.0 / (g * g));
    return ratio * ratio;
}

int required_locations(double beta, double alpha) {
    return static_cast<int>(std::floor(required_locations_bound(beta, alpha))) + 1;
}

double p0_db_for_power_at(double distance, double alpha, double target_power) {
    if (!(distance > 0.0 && target_power > 0.0))
        throw std::invalid_argument("p0_db_for_power_at: distance and power must be positive");
    return linear_to_db(target_power * std::pow(distance, alpha));
}

std::string_view to_string(WalkDirection direction) noexcept {
    return direction == WalkDirection::Approach ? "approach" : "retreat";
}

}  // namespace covert
