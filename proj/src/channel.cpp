#include <covert/channel.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace covert {

double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) noexcept { return 10.0 * std::log10(linear); }

void ChannelParams::validate() const {
    if (!(alpha > 2.0)) throw std::invalid_argument("channel.alpha must exceed 2");
    if (!(noise_power > 0.0) || !std::isfinite(noise_power))
        throw std::invalid_argument("channel.noise_power must be positive");
    if (!std::isfinite(p0_db)) throw std::invalid_argument("channel.p0_db must be finite");
}

double path_loss(PathLossModel model, double distance, double alpha) {
    if (!(alpha > 2.0)) throw std::invalid_argument("path_loss: alpha must exceed 2");
    switch (model) {
        case PathLossModel::Unbounded:
            if (!(distance > 0.0)) throw std::domain_error("path_loss: unbounded model needs distance > 0");
            return std::pow(distance, -alpha);
        case PathLossModel::Bounded:
            if (!(distance >= 0.0)) throw std::domain_error("path_loss: distance must be non-negative");
            return 1.0 / (1.0 + std::pow(distance, alpha));
    }
    throw std::invalid_argument("path_loss: unknown model");
}

double signal_power(const ChannelParams& params, double distance) {
    return params.p0_linear() * path_loss(params.path_loss, distance, params.alpha);
}

double received_power(const ChannelParams& params, double distance, bool transmitting) {
    if (!transmitting) return params.noise_power;
    return signal_power(params, distance) + params.noise_power;
}

double draw_fading(Fading fading, Rng& rng) {
    if (fading == Fading::None) return 1.0;
    return std::exponential_distribution<double>{1.0}(rng);
}

double received_power(const ChannelParams& params, double distance, bool transmitting, Rng& rng) {
    if (!transmitting) return params.noise_power;
    return signal_power(params, distance) * draw_fading(params.fading, rng) + params.noise_power;
}

PowerVector::PowerVector(std::vector<PowerSample> samples) : samples_(std::move(samples)) {
    if (samples_.empty() || samples_.size() % 2 != 0)
        throw std::invalid_argument("PowerVector: length must be even and positive, got " +
                                    std::to_string(samples_.size()));
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const auto& s = samples_[i];
        if (s.m < 1) throw std::invalid_argument("PowerVector: m must be >= 1");
        if (!(s.value >= 0.0)) throw std::invalid_argument("PowerVector: power values must be >= 0");
        if (i > 0 && !(s.distance > samples_[i - 1].distance))
            throw std::invalid_argument("PowerVector: distances must be strictly increasing");
    }
}

std::vector<double> PowerVector::values() const {
    std::vector<double> out;
    out.reserve(samples_.size());
    for (const auto& s : samples_) out.push_back(s.value);
    return out;
}

PowerSample sample_radiometer(const ChannelParams& params, double distance, int m, bool transmitting, Rng& rng) {
    if (m < 1) throw std::invalid_argument("sample_radiometer: m must be >= 1");
    const double signal = transmitting ? signal_power(params, distance) : 0.0;
    const double noise = params.noise_power;

    if (signal > 0.0 && params.fading != Fading::None && params.fading_mode == FadingMode::PerSample) {
        // Each sample sees its own fade, so the sum is no longer a scaled chi-squared.
        std::normal_distribution<double> gauss;
        double sum = 0.0;
        for (int k = 0; k < m; ++k) {
            const double variance = signal * draw_fading(params.fading, rng) + noise;
            const double z = gauss(rng);
            sum += variance * z * z;
        }
        return {distance, sum / m, m};
    }

    const double variance = signal * draw_fading(signal > 0.0 ? params.fading : Fading::None, rng) + noise;
    // chi2(m) == Gamma(m/2, 2)
    std::gamma_distribution<double> chi2{0.5 * m, 2.0};
    return {distance, variance * chi2(rng) / m, m};
}

std::string_view to_string(PathLossModel model) noexcept {
    return model == PathLossModel::Unbounded ? "unbounded" : "bounded";
}

std::string_view to_string(Fading fading) noexcept {
    return fading == Fading::None ? "none" : "rayleigh";
}

std::string_view to_string(FadingMode mode) noexcept {
    return mode == FadingMode::PerLocation ? "per_location" : "per_sample";
}

}  // namespace covert
