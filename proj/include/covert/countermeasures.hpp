#pragma once

// Alice's countermeasures against a mobile warden: descending transmit power and
// randomised per-slot scheduling.

#include <covert/rng.hpp>

#include <optional>
#include <string_view>

namespace covert {

struct TxProcess {
    enum class Kind { AlwaysOn, AlwaysOff, Bernoulli, PowerDescent };

    Kind kind = Kind::AlwaysOn;
    double p = 1.0;  ///< Bernoulli transmission probability
    double p_max_db = 36.0;
    double p_min_db = 20.0;
    double delta_db = 0.8;

    static TxProcess always_on() { return {}; }
    static TxProcess always_off() { return {.kind = Kind::AlwaysOff, .p = 0.0}; }
    static TxProcess bernoulli(double p) { return {.kind = Kind::Bernoulli, .p = p}; }
    static TxProcess power_descent(double p_max_db, double p_min_db, double delta_db) {
        return {.kind = Kind::PowerDescent, .p = 1.0, .p_max_db = p_max_db, .p_min_db = p_min_db,
                .delta_db = delta_db};
    }

    /// Throws std::invalid_argument if p is outside [0,1], p_max_db < p_min_db or delta_db <= 0.
    void validate() const;
};

struct SlotState {
    bool transmitting = false;
    double power_db = 0.0;  ///< -inf when silent
};

/// Transmit state for 1-based `slot`. AlwaysOn/Bernoulli transmit at `p0_db`;
/// PowerDescent steps down from p_max_db by delta_db per slot and holds at p_min_db.
/// Only Bernoulli consumes randomness.
SlotState power_at_slot(const TxProcess& proc, int slot, double p0_db, Rng& rng);

/// Small-p asymptote of the expected negative-difference count, 0.5 (1-p)^2 t.
double expected_statistic_scheduled(double p, int t);

/// Largest transmission probability that keeps the expected statistic at or above
/// the normal-approximation threshold: 1 - sqrt(1 + Phi^-1(beta)/sqrt(t)).
/// Empty when t <= Phi^-1(beta)^2, in which case no transmission is covert.
std::optional<double> covert_p_threshold(double beta, int t);

/// Exact-by-simulation P{Delta_i < 0} for a Bernoulli(p) transmitter, where the
/// near location sees mean signal p_near and the far one p_far (both linear, above
/// `noise`). Mixes the four on/off cases with probabilities (1-p)^2, p(1-p), p(1-p), p^2
/// and estimates each ratio probability from `draws` chi-squared pairs at m dof.
double simulate_neg_diff_prob(double p, double p_near, double p_far, double noise, int m, int draws,
                              Rng& rng);

std::string_view to_string(TxProcess::Kind kind) noexcept;

}  // namespace covert
