#pragma once

// Scenario configuration: an INI-style `key = value` file with [section] headers.
//
//   scenario = Calibration
//   seed = 7
//   [channel]
//   p0_db = 30
//   [network]
//   clusters = 40 50 12 0.25; 160 50 12 0.25
//
// Dotted keys (`channel.p0_db = 30`) are accepted anywhere. `#` starts a comment.
// Unknown keys are errors.

#include <covert/adversary.hpp>
#include <covert/channel.hpp>
#include <covert/countermeasures.hpp>
#include <covert/netsim.hpp>
#include <covert/routing.hpp>
#include <covert/trendtest.hpp>

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace covert {

enum class ScenarioKind {
    TrendDemo,
    BetaVsT,
    PowerDescent,
    SchedulingDemo,
    BetaVsP,
    NetworkDemo,
    SecureRatio,
    Calibration,
};

struct ScenarioInfo {
    ScenarioKind kind;
    std::string_view name;
    std::string_view description;
};

/// Every scenario with a one-line description, in declaration order.
std::span<const ScenarioInfo> scenario_catalog() noexcept;
std::string_view to_string(ScenarioKind kind) noexcept;

enum class Deployment { Uniform, Nonuniform };
std::string_view to_string(Deployment deployment) noexcept;

struct NetworkSpec {
    Deployment kind = Deployment::Uniform;
    int n = 300;
    Region region{200.0, 100.0};
    double d_link = 5.0;
    double comm_radius = 20.0;
    std::vector<Cluster> clusters;
    Point source{200.0, 50.0};
    Point base_station{0.0, 50.0};
};

/// Cluster layout used when a nonuniform deployment gives no clusters.
std::vector<Cluster> default_clusters(Region region);

struct RoutingSpec {
    double p_max = 0.2;
    CandidateRule candidates = CandidateRule::StrictBackward;
};

struct TestSpec {
    double beta = 0.05;
    ThresholdMethod method = ThresholdMethod::Auto;
};

/// Parameter grids for the sweep scenarios. Empty means the scenario's default grid.
struct SweepSpec {
    std::vector<double> alpha;
    std::vector<double> beta;
    std::vector<double> p;
    std::vector<int> t;
    std::vector<int> n;
};

struct ScenarioConfig {
    ScenarioKind scenario = ScenarioKind::TrendDemo;
    std::uint64_t seed = 1;
    int trials = 1;
    ChannelParams channel;
    WalkPlan walk;
    TxProcess tx;
    double compare_db = 33.0;  ///< constant-power comparator for PowerDescent
    NetworkSpec network;
    RoutingSpec routing;
    TestSpec test;
    SweepSpec sweep;
    std::string output = ".";

    /// Throws ConfigError naming the first invalid field.
    void validate() const;
};

/// Validation or parse failure. `line` is 0 when the error is not tied to a line.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, int line, const std::string& message);

    [[nodiscard]] const std::string& field() const noexcept { return field_; }
    [[nodiscard]] int line() const noexcept { return line_; }

private:
    std::string field_;
    int line_;
};

/// The file could not be read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Scenario-specific defaults (trial count, transmit process, grids).
ScenarioConfig default_config(ScenarioKind kind);

/// Parses config text, applies defaults for the declared scenario and validates.
ScenarioConfig parse_config(std::string_view text);

/// Reads and parses a config file. Throws IoError if unreadable.
ScenarioConfig load_config(const std::filesystem::path& path);

/// Effective configuration with every key spelled out; parse_config of this text
/// reproduces `config`.
std::string to_config_text(const ScenarioConfig& config);

/// FNV-1a 64 of to_config_text(config), ignoring the output directory.
std::uint64_t config_hash(const ScenarioConfig& config);

}  // namespace covert
