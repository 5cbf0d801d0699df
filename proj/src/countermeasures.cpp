#include <covert/countermeasures.hpp>
#include <covert/stats.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace covert {

void TxProcess::validate() const {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("tx.p must lie in [0,1]");
    if (kind == Kind::PowerDescent) {
        if (!(p_max_db >= p_min_db)) throw std::invalid_argument("tx.p_max_db must be >= tx.p_min_db");
        if (!(delta_db > 0.0)) throw std::invalid_argument("tx.delta_db must be positive");
    }
}

SlotState power_at_slot(const TxProcess& proc, int slot, double p0_db, Rng& rng) {
    if (slot < 1) throw std::invalid_argument("power_at_slot: slot is 1-based");
    constexpr double silent = -std::numeric_limits<double>::infinity();
    switch (proc.kind) {
        case TxProcess::Kind::AlwaysOn:
            return {true, p0_db};
        case TxProcess::Kind::AlwaysOff:
            return {false, silent};
        case TxProcess::Kind::Bernoulli: {
            const bool on = std::bernoulli_distribution{proc.p}(rng);
            return {on, on ? p0_db : silent};
        }
        case TxProcess::Kind::PowerDescent:
            return {true, std::max(proc.p_max_db - (slot - 1) * proc.delta_db, proc.p_min_db)};
    }
    throw std::invalid_argument("power_at_slot: unknown process");
}

double expected_statistic_scheduled(double p, int t) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("expected_statistic_scheduled: p must lie in [0,1]");
    if (t < 1) throw std::invalid_argument("expected_statistic_scheduled: t must be >= 1");
    return 0.5 * (1.0 - p) * (1.0 - p) * t;
}

std::optional<double> covert_p_threshold(double beta, int t) {
    if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("covert_p_threshold: beta must lie in (0,1)");
    if (t < 1) throw std::invalid_argument("covert_p_threshold: t must be >= 1");
    const double z = stats::normal_quantile(beta);
    if (!(static_cast<double>(t) > z * z)) return std::nullopt;
    return 1.0 - std::sqrt(1.0 + z / std::sqrt(static_cast<double>(t)));
}

double simulate_neg_diff_prob(double p, double p_near, double p_far, double noise, int m, int draws, Rng& rng) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("simulate_neg_diff_prob: p must lie in [0,1]");
    if (m < 1 || draws < 1) throw std::invalid_argument("simulate_neg_diff_prob: m and draws must be >= 1");
    if (!(noise > 0.0)) throw std::invalid_argument("simulate_neg_diff_prob: noise must be positive");

    const double near_on = p_near + noise;
    const double far_on = p_far + noise;
    std::gamma_distribution<double> chi2{0.5 * m, 2.0};
    int off_off = 0, off_on = 0, on_off = 0, on_on = 0;
    for (int k = 0; k < draws; ++k) {
        const double a = chi2(rng);  // near location
        const double b = chi2(rng);  // far location
        off_off += noise * a < noise * b;
        off_on += noise * a < far_on * b;
        on_off += near_on * a < noise * b;
        on_on += near_on * a < far_on * b;
    }
    const double n = draws;
    const double q = 1.0 - p;
    return q * q * off_off / n + q * p * off_on / n + p * q * on_off / n + p * p * on_on / n;
}

std::string_view to_string(TxProcess::Kind kind) noexcept {
    switch (kind) {
        case TxProcess::Kind::AlwaysOn: return "always_on";
        case TxProcess::Kind::AlwaysOff: return "always_off";
        case TxProcess::Kind::Bernoulli: return "bernoulli";
        case TxProcess::Kind::PowerDescent: return "power_descent";
    }
    return "always_on";
}

}  // namespace covert
