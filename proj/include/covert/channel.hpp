#pragma once

// AWGN channel with large-scale path loss, optional Rayleigh power fading,
// and the radiometer (energy detector) that the warden runs at each location.
//
// All powers are linear and normalised to unit noise power unless a name
// ends in _db, in which case it is dB relative to that same unit.

#include <covert/rng.hpp>

#include <span>
#include <string_view>
#include <vector>

namespace covert {

enum class PathLossModel {
    Unbounded,  ///< d^-alpha, singular at 0
    Bounded,    ///< 1 / (1 + d^alpha)
};

enum class Fading {
    None,
    RayleighUnitMean,  ///< exponential(1) multiplier on the received signal power
};

/// Whether the m radiometer samples at one location share a fade or draw their own.
enum class FadingMode {
    PerLocation,
    PerSample,
};

double db_to_linear(double db) noexcept;
double linear_to_db(double linear) noexcept;

struct ChannelParams {
    double p0_db = 30.0;
    double alpha = 3.0;
    double noise_power = 1.0;
    PathLossModel path_loss = PathLossModel::Bounded;
    Fading fading = Fading::None;
    FadingMode fading_mode = FadingMode::PerLocation;

    [[nodiscard]] double p0_linear() const noexcept { return db_to_linear(p0_db); }

    /// Throws std::invalid_argument when alpha <= 2, noise_power <= 0 or p0 is not finite.
    void validate() const;
};

/// Large-scale gain l(d). Throws std::domain_error for d <= 0 under Unbounded,
/// d < 0 under Bounded, and std::invalid_argument for alpha <= 2.
double path_loss(PathLossModel model, double distance, double alpha);

/// Mean received signal power P0 * l(d), without noise or fading.
double signal_power(const ChannelParams& params, double distance);

/// Mean received power: P0 * l(d) + noise when transmitting, noise when silent.
double received_power(const ChannelParams& params, double distance, bool transmitting);

/// Received power with one fading realisation drawn from `rng` when fading is enabled.
double received_power(const ChannelParams& params, double distance, bool transmitting, Rng& rng);

/// Fading power multiplier: 1 for Fading::None, exponential(1) for Rayleigh.
double draw_fading(Fading fading, Rng& rng);

/// One radiometer output T(y) = (1/m) * sum of m squared real channel samples.
struct PowerSample {
    double distance = 0.0;
    double value = 0.0;
    int m = 1;
};

/// Radiometer outputs along a walk, canonically ordered by increasing distance.
class PowerVector {
public:
    /// Throws std::invalid_argument on odd or empty length, non-increasing
    /// distances, negative values or m < 1.
    explicit PowerVector(std::vector<PowerSample> samples);

    [[nodiscard]] std::size_t size() const noexcept { return samples_.size(); }
    /// Number of first-half/second-half pairs.
    [[nodiscard]] std::size_t half() const noexcept { return samples_.size() / 2; }
    [[nodiscard]] std::span<const PowerSample> samples() const noexcept { return samples_; }
    [[nodiscard]] const PowerSample& operator[](std::size_t i) const { return samples_[i]; }
    [[nodiscard]] std::vector<double> values() const;

private:
    std::vector<PowerSample> samples_;
};

/// Draws a radiometer reading at `distance` from m real samples with variance
/// P_t + noise, i.e. ((P_t + noise)/m) * chi2(m). P_t is 0 when silent.
/// Throws std::invalid_argument for m < 1.
PowerSample sample_radiometer(const ChannelParams& params, double distance, int m, bool transmitting,
                              Rng& rng);

std::string_view to_string(PathLossModel model) noexcept;
std::string_view to_string(Fading fading) noexcept;
std::string_view to_string(FadingMode mode) noexcept;

}  // namespace covert
