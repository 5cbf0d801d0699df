// covert-sim: runs covert-communication detection experiments from a config file.
//
//   covert-sim run <config-file> [--out DIR] [--seed N] [--trials N] [--threads N]
//   covert-sim validate <config-file>
//   covert-sim list-scenarios
//
// Exit codes: 0 success, 2 invalid config or usage, 3 I/O failure.

#include <covert/config.hpp>
#include <covert/scenario.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte-Carlo simulator for covert communication against a mobile warden", "covert-sim"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::string> out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    unsigned threads = 0;

    auto* run = app.add_subcommand("run", "Run a scenario and write its CSV tables");
    run->add_option("config", config_path, "Scenario config file")->required();
    run->add_option("--out", out_dir, "Output directory (default: the config's output key)");
    run->add_option("--seed", seed, "Override the root seed");
    run->add_option("--trials", trials, "Override the trial count")->check(CLI::PositiveNumber);
    run->add_option("--threads", threads, "Worker threads (0 = all cores)");

    auto* validate = app.add_subcommand("validate", "Parse and validate a config, then print the effective config");
    validate->add_option("config", config_path, "Scenario config file")->required();

    auto* list = app.add_subcommand("list-scenarios", "List the available scenarios");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    if (list->parsed()) {
        for (const auto& info : covert::scenario_catalog())
            std::cout << info.name << "\t" << info.description << '\n';
        return kExitOk;
    }

    try {
        covert::ScenarioConfig config = covert::load_config(config_path);

        if (validate->parsed()) {
            std::cout << covert::to_config_text(config);
            return kExitOk;
        }

        if (seed) config.seed = *seed;
        if (trials) config.trials = *trials;
        if (out_dir) config.output = *out_dir;
        config.validate();

        const auto result = covert::run_scenario(config, covert::RunOptions{threads});
        const auto written = covert::write_tables(result, config, config.output);
        std::cout << result.summary;
        for (const auto& path : written) std::cout << "wrote " << path.string() << '\n';
        return kExitOk;
    } catch (const covert::IoError& e) {
        std::cerr << "covert-sim: " << e.what() << '\n';
        return kExitIo;
    } catch (const covert::ConfigError& e) {
        std::cerr << "covert-sim: invalid config: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "covert-sim: invalid config: " << e.what() << '\n';
        return kExitInvalid;
    }
}
