#pragma once

#include <covert/config.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace covert {

/// One CSV table. Cells are preformatted so output is byte-stable.
struct Table {
    std::string name;  ///< file stem
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

struct ScenarioResult {
    std::vector<Table> tables;
    std::string summary;  ///< human-readable, printed to stdout
};

struct RunOptions {
    unsigned threads = 0;  ///< 0 = hardware concurrency
};

/// Runs the scenario described by `config`. Output depends only on the config.
ScenarioResult run_scenario(const ScenarioConfig& config, const RunOptions& options = {});

/// CSV text for `table`: a `#` metadata block (scenario, config hash, seed,
/// git placeholder), the header row, then the rows.
std::string render_csv(const Table& table, const ScenarioConfig& config);

/// Writes every table as `<dir>/<name>.csv`. Throws IoError on failure.
std::vector<std::filesystem::path> write_tables(const ScenarioResult& result, const ScenarioConfig& config,
                                                const std::filesystem::path& dir);

/// Number formatting shared by all tables (%.*g; NaN renders as "NA").
std::string fmt_num(double value, int precision = 8);

/// A routing deployment: node 0 is the base station, node 1 the source, then
/// `n` nodes placed per `deployment`.
NodeGraph build_deployment(const NetworkSpec& spec, Deployment deployment, int n, Rng& rng);

inline constexpr int kBaseStationNode = 0;
inline constexpr int kSourceNode = 1;

/// One routing episode on a fresh deployment: flood, then DBR and GBR on the same graph.
struct NetworkTrial {
    bool dbr_ok = false;
    bool gbr_ok = false;
    double dbr_ratio = 0.0;
    double gbr_ratio = 0.0;
    std::size_t dbr_hops = 0;
    std::size_t gbr_hops = 0;
};
NetworkTrial run_network_trial(const NetworkSpec& spec, Deployment deployment, int n, const RoutingSpec& routing,
                               Rng& rng);

/// Outcome of repeated detection campaigns.
struct CampaignSummary {
    std::size_t trials = 0;
    std::size_t detections = 0;
    double mean_statistic = 0.0;
    double statistic_se = 0.0;

    [[nodiscard]] double rate() const noexcept {
        return trials == 0 ? 0.0 : static_cast<double>(detections) / static_cast<double>(trials);
    }
};
CampaignSummary run_campaigns(const ChannelParams& channel, const WalkPlan& walk, const TxProcess& tx, double beta,
                              ThresholdMethod method, std::size_t trials, std::uint64_t seed, unsigned threads = 0);

}  // namespace covert
