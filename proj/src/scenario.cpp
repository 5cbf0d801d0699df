#include <covert/montecarlo.hpp>
#include <covert/scenario.hpp>
#include <covert/stats.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace covert {
namespace {

std::string fmt_int(long long v) { return std::to_string(v); }

// Re-reads a `write_*` CSV emitter into a Table so the scenario output and the
// standalone export share one format.
Table table_from_csv(std::string name, const std::string& csv) {
    Table table{std::move(name), {}, {}};
    std::istringstream in{csv};
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream fields{line};
        std::string cell;
        while (std::getline(fields, cell, ',')) cells.push_back(cell);
        if (header) {
            table.columns = std::move(cells);
            header = false;
        } else {
            table.rows.push_back(std::move(cells));
        }
    }
    return table;
}

std::uint64_t stream_seed(const ScenarioConfig& config, std::uint64_t salt) { return sub_seed(config.seed, salt); }

ScenarioResult run_trend_demo(const ScenarioConfig& config, unsigned threads) {
    struct Trial {
        std::vector<double> silent;
        std::vector<double> transmitting;
        bool silent_detected = false;
        bool transmitting_detected = false;
    };
    const auto trials = run_trials(config.trials, stream_seed(config, 0), threads, [&](std::size_t, Rng& rng) {
        const auto off = run_campaign(config.channel, config.walk, TxProcess::always_off(), config.test.beta, rng,
                                      config.test.method);
        const auto on = run_campaign(config.channel, config.walk, TxProcess::always_on(), config.test.beta, rng,
                                     config.test.method);
        return Trial{off.powers.values(), on.powers.values(), off.verdict.detected(), on.verdict.detected()};
    });

    const int locations = 2 * config.walk.t;
    Table table{"trend_demo",
                {"index", "distance", "silent_example", "transmitting_example", "silent_mean", "transmitting_mean",
                 "expected_transmitting"},
                {}};
    for (int i = 0; i < locations; ++i) {
        stats::RunningStats silent, on;
        for (const auto& t : trials) {
            silent.add(t.silent[i]);
            on.add(t.transmitting[i]);
        }
        const double d = config.walk.distance(i + 1);
        table.add_row({fmt_int(i + 1), fmt_num(d), fmt_num(trials[0].silent[i]), fmt_num(trials[0].transmitting[i]),
                       fmt_num(silent.mean()), fmt_num(on.mean()), fmt_num(received_power(config.channel, d, true))});
    }

    std::size_t silent_hits = 0, on_hits = 0;
    for (const auto& t : trials) {
        silent_hits += t.silent_detected;
        on_hits += t.transmitting_detected;
    }
    std::ostringstream summary;
    summary << "TrendDemo: " << locations << " locations, m=" << config.walk.m << ", " << config.trials << " trials\n"
            << "  downward trend detected, Alice silent:       " << fmt_num(double(silent_hits) / config.trials, 4)
            << '\n'
            << "  downward trend detected, Alice transmitting: " << fmt_num(double(on_hits) / config.trials, 4)
            << '\n';
    return {{std::move(table)}, summary.str()};
}

ScenarioResult run_beta_vs_t(const ScenarioConfig& config) {
    Table table{"beta_vs_t", {"alpha", "beta", "bound", "required_t"}, {}};
    std::ostringstream summary;
    summary << "BetaVsT: smallest t with t > (Phi^-1(beta) / (1 - 8/(2^alpha+1)^2))^2\n";
    for (double alpha : config.sweep.alpha) {
        for (double beta : config.sweep.beta) {
            const double bound = required_locations_bound(beta, alpha);
            const int t = required_locations(beta, alpha);
            table.add_row({fmt_num(alpha), fmt_num(beta), fmt_num(bound), fmt_int(t)});
            summary << "  alpha=" << fmt_num(alpha) << " beta=" << fmt_num(beta) << " -> t=" << t << '\n';
        }
    }
    return {{std::move(table)}, summary.str()};
}

ScenarioResult run_power_descent(const ScenarioConfig& config, unsigned threads) {
    ChannelParams constant = config.channel;
    constant.p0_db = config.compare_db;
    const TxProcess descent = config.tx.kind == TxProcess::Kind::PowerDescent
                                  ? config.tx
                                  : TxProcess::power_descent(36.0, 20.0, 0.8);

    struct Trial {
        std::vector<double> constant;
        std::vector<double> descent;
        bool constant_detected = false;
        bool descent_detected = false;
        bool reversed_detected = false;
    };
    WalkPlan reversed = config.walk;
    reversed.direction = config.walk.direction == WalkDirection::Approach ? WalkDirection::Retreat
                                                                          : WalkDirection::Approach;
    const auto trials = run_trials(config.trials, stream_seed(config, 0), threads, [&](std::size_t, Rng& rng) {
        const auto c = run_campaign(constant, config.walk, TxProcess::always_on(), config.test.beta, rng,
                                    config.test.method);
        const auto d = run_campaign(config.channel, config.walk, descent, config.test.beta, rng, config.test.method);
        const auto r = run_campaign(config.channel, reversed, descent, config.test.beta, rng, config.test.method);
        return Trial{c.powers.values(), d.powers.values(), c.verdict.detected(), d.verdict.detected(),
                     r.verdict.detected()};
    });

    const int locations = 2 * config.walk.t;
    Table trace{"power_descent",
                {"index", "distance", "slot", "descent_db", "constant_mean", "descent_mean"},
                {}};
    Rng unused{0};
    for (int i = 1; i <= locations; ++i) {
        stats::RunningStats c, d;
        for (const auto& t : trials) {
            c.add(t.constant[i - 1]);
            d.add(t.descent[i - 1]);
        }
        const int slot = config.walk.slot_of(i);
        trace.add_row({fmt_int(i), fmt_num(config.walk.distance(i)), fmt_int(slot),
                       fmt_num(power_at_slot(descent, slot, config.channel.p0_db, unused).power_db),
                       fmt_num(c.mean()), fmt_num(d.mean())});
    }

    std::size_t hits_c = 0, hits_d = 0, hits_r = 0;
    for (const auto& t : trials) {
        hits_c += t.constant_detected;
        hits_d += t.descent_detected;
        hits_r += t.reversed_detected;
    }
    const auto n = static_cast<std::size_t>(config.trials);
    Table summary_table{"power_descent_summary", {"process", "direction", "trials", "detections", "rate"}, {}};
    auto add = [&](const char* process, WalkDirection dir, std::size_t hits) {
        summary_table.add_row({process, std::string(to_string(dir)), fmt_int(n), fmt_int(hits),
                               fmt_num(double(hits) / n, 6)});
    };
    add("constant", config.walk.direction, hits_c);
    add("descent", config.walk.direction, hits_d);
    add("descent", reversed.direction, hits_r);

    std::ostringstream summary;
    summary << "PowerDescent: constant " << fmt_num(config.compare_db) << " dB vs descent " << fmt_num(descent.p_max_db)
            << " -> " << fmt_num(descent.p_min_db) << " dB (step " << fmt_num(descent.delta_db) << " dB)\n"
            << "  detection rate, constant (" << to_string(config.walk.direction) << "): " << fmt_num(double(hits_c) / n, 4)
            << '\n'
            << "  detection rate, descent  (" << to_string(config.walk.direction) << "): " << fmt_num(double(hits_d) / n, 4)
            << '\n'
            << "  detection rate, descent  (" << to_string(reversed.direction) << "): " << fmt_num(double(hits_r) / n, 4)
            << '\n';
    return {{std::move(trace), std::move(summary_table)}, summary.str()};
}

ScenarioResult run_scheduling_demo(const ScenarioConfig& config, unsigned threads) {
    Table trace{"scheduling_trace", {"p", "index", "distance", "transmitting", "power"}, {}};
    Table table{"scheduling",
                {"p", "trials", "detections", "rate", "mean_statistic", "expected_statistic_approx", "threshold"},
                {}};
    std::ostringstream summary;
    summary << "SchedulingDemo: t=" << config.walk.t << ", beta=" << fmt_num(config.test.beta) << '\n';
    const double threshold = trend_threshold(config.walk.t, config.test.beta, config.test.method);
    for (std::size_t k = 0; k < config.sweep.p.size(); ++k) {
        const double p = config.sweep.p[k];
        const auto tx = TxProcess::bernoulli(p);
        Rng rng = make_rng(stream_seed(config, 1000 + k), 0);
        const auto example = run_campaign(config.channel, config.walk, tx, config.test.beta, rng, config.test.method);
        for (std::size_t i = 0; i < example.powers.size(); ++i) {
            trace.add_row({fmt_num(p), fmt_int(static_cast<long long>(i + 1)), fmt_num(example.powers[i].distance),
                           fmt_int(example.slots[i].transmitting), fmt_num(example.powers[i].value)});
        }
        const auto s = run_campaigns(config.channel, config.walk, tx, config.test.beta, config.test.method,
                                     config.trials, stream_seed(config, k), threads);
        table.add_row({fmt_num(p), fmt_int(s.trials), fmt_int(s.detections), fmt_num(s.rate(), 6),
                       fmt_num(s.mean_statistic), fmt_num(expected_statistic_scheduled(p, config.walk.t)),
                       fmt_num(threshold)});
        summary << "  p=" << fmt_num(p) << ": detection rate " << fmt_num(s.rate(), 4) << ", mean statistic "
                << fmt_num(s.mean_statistic, 5) << " (threshold " << fmt_num(threshold, 5) << ")\n";
    }
    return {{std::move(table), std::move(trace)}, summary.str()};
}

ScenarioResult run_beta_vs_p(const ScenarioConfig& config, unsigned threads) {
    Table table{"beta_vs_p", {"t", "beta", "p_threshold", "mc_p", "mc_trials", "mc_detections", "mc_rate"}, {}};
    std::ostringstream summary;
    summary << "BetaVsP: p < 1 - sqrt(1 + Phi^-1(beta)/sqrt(t)); Monte-Carlo at 0.9 x threshold\n";
    std::uint64_t salt = 0;
    for (int t : config.sweep.t) {
        for (double beta : config.sweep.beta) {
            const auto threshold = covert_p_threshold(beta, t);
            if (!threshold) {
                table.add_row({fmt_int(t), fmt_num(beta), "NA", "NA", "0", "0", "NA"});
                summary << "  t=" << t << " beta=" << fmt_num(beta) << ": no covert probability\n";
                ++salt;
                continue;
            }
            WalkPlan walk = config.walk;
            walk.t = t;
            const double p = 0.9 * *threshold;
            const auto s = run_campaigns(config.channel, walk, TxProcess::bernoulli(p), beta, config.test.method,
                                         config.trials, stream_seed(config, salt++), threads);
            table.add_row({fmt_int(t), fmt_num(beta), fmt_num(*threshold), fmt_num(p), fmt_int(s.trials),
                           fmt_int(s.detections), fmt_num(s.rate(), 6)});
            summary << "  t=" << t << " beta=" << fmt_num(beta) << ": p* = " << fmt_num(*threshold, 5)
                    << ", detection rate at 0.9 p* = " << fmt_num(s.rate(), 4) << '\n';
        }
    }
    return {{std::move(table)}, summary.str()};
}

ScenarioResult run_network_demo(const ScenarioConfig& config) {
    Rng rng = make_rng(stream_seed(config, 0), 0);
    const NodeGraph graph = build_deployment(config.network, config.network.kind, config.network.n, rng);
    const BeaconState beacon = beacon_flood(graph, kBaseStationNode, config.routing.candidates);
    Rng dbr_rng{rng()};
    Rng gbr_rng{rng()};
    const auto dbr = route_dbr(graph, beacon, kSourceNode, config.routing.p_max, dbr_rng);
    const auto gbr = route_gbr(graph, beacon, kSourceNode, gbr_rng);

    std::ostringstream nodes, edges;
    write_nodes(nodes, graph);
    write_edges(edges, graph);

    Table node_stats{"network_node_stats", {"id", "degree", "hop_count", "isolatable"}, {}};
    for (int v = 0; v < static_cast<int>(graph.size()); ++v) {
        node_stats.add_row({fmt_int(v), fmt_int(graph.degree(v)), fmt_int(beacon.hop_count[v]),
                            fmt_int(is_isolatable(graph, v, graph.d_link()))});
    }

    Table paths{"network_paths", {"scheme", "order", "id", "x", "y", "degree", "p_i", "secure"}, {}};
    auto add_path = [&](const char* scheme, const RouteResult& result) {
        if (!result.path) return;
        std::ostringstream csv;
        write_path(csv, *result.path, graph);
        for (auto row : table_from_csv("", csv.str()).rows) {
            row.insert(row.begin(), scheme);
            paths.add_row(std::move(row));
        }
    };
    add_path("dbr", dbr);
    add_path("gbr", gbr);

    const auto components = clusters(graph, graph.d_link());
    std::ostringstream summary;
    summary << "NetworkDemo: " << to_string(config.network.kind) << " deployment, " << graph.size()
            << " nodes (base station + source + " << config.network.n << ")\n"
            << "  density " << fmt_num(graph.density(), 5) << " /m^2, shadow threshold "
            << fmt_num(shadow_density_threshold(graph.d_link()), 5) << " /m^2\n"
            << "  mean degree (r=" << fmt_num(graph.comm_radius()) << ") " << fmt_num(graph.mean_degree(), 5) << '\n'
            << "  isolatable fraction (d_link=" << fmt_num(graph.d_link()) << ") "
            << fmt_num(isolatable_fraction(graph, graph.d_link()), 4) << ", largest d_link cluster "
            << components.front().size() << '\n';
    auto describe = [&](const char* scheme, const RouteResult& r) {
        summary << "  " << scheme << ": ";
        if (!r.path) {
            summary << "failed (" << to_string(r.failure) << ")\n";
            return;
        }
        summary << r.path->hops.size() - 1 << " hops, secure-relay ratio "
                << fmt_num(secure_relay_ratio(*r.path, graph, graph.d_link()), 4) << '\n';
    };
    describe("DBR", dbr);
    describe("GBR", gbr);

    return {{table_from_csv("network_nodes", nodes.str()), table_from_csv("network_edges", edges.str()),
             std::move(node_stats), std::move(paths)},
            summary.str()};
}

ScenarioResult run_secure_ratio(const ScenarioConfig& config, unsigned threads) {
    Table table{"secure_ratio",
                {"deployment", "n", "scheme", "trials", "routes", "mean_ratio", "se", "ci_low", "ci_high", "mean_hops"},
                {}};
    std::ostringstream summary;
    summary << "SecureRatio: " << config.trials << " deployments per point, d_link=" << fmt_num(config.network.d_link)
            << ", comm_radius=" << fmt_num(config.network.comm_radius) << '\n';
    std::uint64_t salt = 0;
    for (Deployment deployment : {Deployment::Uniform, Deployment::Nonuniform}) {
        for (int n : config.sweep.n) {
            const auto trials = run_trials(config.trials, stream_seed(config, salt++), threads,
                                           [&](std::size_t, Rng& rng) {
                                               return run_network_trial(config.network, deployment, n, config.routing, rng);
                                           });
            stats::RunningStats dbr, gbr, dbr_hops, gbr_hops;
            for (const auto& t : trials) {
                if (t.dbr_ok) {
                    dbr.add(t.dbr_ratio);
                    dbr_hops.add(static_cast<double>(t.dbr_hops));
                }
                if (t.gbr_ok) {
                    gbr.add(t.gbr_ratio);
                    gbr_hops.add(static_cast<double>(t.gbr_hops));
                }
            }
            auto add = [&](const char* scheme, const stats::RunningStats& s, const stats::RunningStats& hops) {
                const double se = s.std_error();
                table.add_row({std::string(to_string(deployment)), fmt_int(n), scheme, fmt_int(config.trials),
                               fmt_int(static_cast<long long>(s.count())), fmt_num(s.mean(), 6), fmt_num(se, 6),
                               fmt_num(s.mean() - 1.959963984540054 * se, 6),
                               fmt_num(s.mean() + 1.959963984540054 * se, 6), fmt_num(hops.mean(), 6)});
            };
            add("dbr", dbr, dbr_hops);
            add("gbr", gbr, gbr_hops);
            summary << "  " << to_string(deployment) << " n=" << n << ": DBR " << fmt_num(dbr.mean(), 4) << " +/- "
                    << fmt_num(1.96 * dbr.std_error(), 2) << ", GBR " << fmt_num(gbr.mean(), 4) << " +/- "
                    << fmt_num(1.96 * gbr.std_error(), 2) << " (routes " << dbr.count() << "/" << gbr.count() << ")\n";
        }
    }
    return {{std::move(table)}, summary.str()};
}

ScenarioResult run_calibration(const ScenarioConfig& config, unsigned threads) {
    const auto s = run_campaigns(config.channel, config.walk, config.tx, config.test.beta, config.test.method,
                                 config.trials, stream_seed(config, 0), threads);
    const auto ci = stats::wilson_interval(s.detections, s.trials);
    const double threshold = trend_threshold(config.walk.t, config.test.beta, config.test.method);
    Table table{"calibration",
                {"tx", "t", "m", "beta", "method", "trials", "detections", "rate", "se", "ci_low", "ci_high",
                 "mean_statistic", "threshold"},
                {}};
    table.add_row({std::string(to_string(config.tx.kind)), fmt_int(config.walk.t), fmt_int(config.walk.m),
                   fmt_num(config.test.beta), std::string(to_string(config.test.method)), fmt_int(s.trials),
                   fmt_int(s.detections), fmt_num(s.rate(), 6), fmt_num(stats::binomial_se(config.test.beta, s.trials), 6),
                   fmt_num(ci.low, 6), fmt_num(ci.high, 6), fmt_num(s.mean_statistic), fmt_num(threshold)});
    std::ostringstream summary;
    summary << "Calibration: " << to_string(config.tx.kind) << ", t=" << config.walk.t << ", m=" << config.walk.m
            << ", beta=" << fmt_num(config.test.beta) << ", " << to_string(config.test.method) << " threshold "
            << fmt_num(threshold, 5) << '\n'
            << "  detection rate " << fmt_num(s.rate(), 5) << " (95% CI " << fmt_num(ci.low, 4) << " - "
            << fmt_num(ci.high, 4) << "), " << s.detections << "/" << s.trials << '\n'
            << "  mean statistic " << fmt_num(s.mean_statistic, 5) << " +/- " << fmt_num(s.statistic_se, 3) << '\n';
    return {{std::move(table)}, summary.str()};
}

}  // namespace

std::string fmt_num(double value, int precision) {
    if (std::isnan(value)) return "NA";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    return buf;
}

NodeGraph build_deployment(const NetworkSpec& spec, Deployment deployment, int n, Rng& rng) {
    std::vector<Point> positions{spec.base_station, spec.source};
    const auto placed = deployment == Deployment::Uniform
                            ? sample_uniform_points(spec.region, n, rng)
                            : sample_clustered_points(spec.region, n, spec.clusters, rng);
    positions.insert(positions.end(), placed.begin(), placed.end());
    return NodeGraph{spec.region, std::move(positions), spec.d_link, spec.comm_radius};
}

NetworkTrial run_network_trial(const NetworkSpec& spec, Deployment deployment, int n, const RoutingSpec& routing,
                               Rng& rng) {
    const NodeGraph graph = build_deployment(spec, deployment, n, rng);
    const BeaconState beacon = beacon_flood(graph, kBaseStationNode, routing.candidates);
    Rng dbr_rng{rng()};
    Rng gbr_rng{rng()};
    NetworkTrial out;
    if (const auto dbr = route_dbr(graph, beacon, kSourceNode, routing.p_max, dbr_rng); dbr.path) {
        out.dbr_ok = true;
        out.dbr_ratio = secure_relay_ratio(*dbr.path, graph, spec.d_link);
        out.dbr_hops = dbr.path->hops.size() - 1;
    }
    if (const auto gbr = route_gbr(graph, beacon, kSourceNode, gbr_rng); gbr.path) {
        out.gbr_ok = true;
        out.gbr_ratio = secure_relay_ratio(*gbr.path, graph, spec.d_link);
        out.gbr_hops = gbr.path->hops.size() - 1;
    }
    return out;
}

CampaignSummary run_campaigns(const ChannelParams& channel, const WalkPlan& walk, const TxProcess& tx, double beta,
                              ThresholdMethod method, std::size_t trials, std::uint64_t seed, unsigned threads) {
    struct Trial {
        bool detected;
        int statistic;
    };
    const auto results = run_trials(trials, seed, threads, [&](std::size_t, Rng& rng) {
        const auto c = run_campaign(channel, walk, tx, beta, rng, method);
        return Trial{c.verdict.detected(), c.verdict.statistic};
    });
    CampaignSummary s;
    s.trials = trials;
    stats::RunningStats statistic;
    for (const auto& r : results) {
        s.detections += r.detected;
        statistic.add(r.statistic);
    }
    s.mean_statistic = statistic.mean();
    s.statistic_se = statistic.std_error();
    return s;
}

ScenarioResult run_scenario(const ScenarioConfig& config, const RunOptions& options) {
    config.validate();
    switch (config.scenario) {
        case ScenarioKind::TrendDemo: return run_trend_demo(config, options.threads);
        case ScenarioKind::BetaVsT: return run_beta_vs_t(config);
        case ScenarioKind::PowerDescent: return run_power_descent(config, options.threads);
        case ScenarioKind::SchedulingDemo: return run_scheduling_demo(config, options.threads);
        case ScenarioKind::BetaVsP: return run_beta_vs_p(config, options.threads);
        case ScenarioKind::NetworkDemo: return run_network_demo(config);
        case ScenarioKind::SecureRatio: return run_secure_ratio(config, options.threads);
        case ScenarioKind::Calibration: return run_calibration(config, options.threads);
    }
    throw ConfigError("scenario", 0, "unknown scenario");
}

std::string render_csv(const Table& table, const ScenarioConfig& config) {
    std::ostringstream out;
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(config_hash(config)));
    out << "# covert-sim " << to_string(config.scenario) << " table=" << table.name << '\n'
        << "# config_hash=" << hash << '\n'
        << "# seed=" << config.seed << '\n'
        << "# trials=" << config.trials << '\n'
        << "# git=unknown\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << '\n';
    }
    return out.str();
}

std::vector<std::filesystem::path> write_tables(const ScenarioResult& result, const ScenarioConfig& config,
                                                const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
    std::vector<std::filesystem::path> written;
    for (const auto& table : result.tables) {
        const auto path = dir / (table.name + ".csv");
        std::ofstream out{path, std::ios::binary};
        if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
        out << render_csv(table, config);
        if (!out) throw IoError("error writing '" + path.string() + "'");
        written.push_back(path);
    }
    return written;
}

}  // namespace covert
