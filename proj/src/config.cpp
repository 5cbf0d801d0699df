#include <covert/config.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

namespace covert {
namespace {

constexpr std::array<ScenarioInfo, 8> kCatalog{{
    {ScenarioKind::TrendDemo, "TrendDemo", "radiometer power vs distance, silent and transmitting"},
    {ScenarioKind::BetaVsT, "BetaVsT", "required sampling locations over a significance grid"},
    {ScenarioKind::PowerDescent, "PowerDescent", "constant vs descending transmit power along the walk"},
    {ScenarioKind::SchedulingDemo, "SchedulingDemo", "randomized slot scheduling traces and detection rates"},
    {ScenarioKind::BetaVsP, "BetaVsP", "largest covert transmission probability over a significance grid"},
    {ScenarioKind::NetworkDemo, "NetworkDemo", "one deployment with node/edge lists and DBR/GBR paths"},
    {ScenarioKind::SecureRatio, "SecureRatio", "secure-relay ratio of DBR and GBR vs node count"},
    {ScenarioKind::Calibration, "Calibration", "detection rate of the trend test over repeated campaigns"},
}};

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string fmt_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    // Shortest round-trip text, fixed notation unless that gets long.
    char buf[400];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
    if (res.ec == std::errc{} && res.ptr - buf <= 16) return std::string(buf, res.ptr);
    res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

struct Entry {
    std::string value;
    int line;
};

class Reader {
public:
    Reader(std::string field, const Entry& entry) : field_(std::move(field)), entry_(entry) {}

    [[noreturn]] void fail(const std::string& message) const { throw ConfigError(field_, entry_.line, message); }

    double number(std::string_view text) const {
        const std::string s = trim(text);
        if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) fail("expected a number, got '" + s + "'");
        return v;
    }
    double number() const { return number(entry_.value); }

    long long integer(std::string_view text) const {
        const std::string s = trim(text);
        long long v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) fail("expected an integer, got '" + s + "'");
        return v;
    }
    int integer32() const {
        const long long v = integer(entry_.value);
        if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) fail("integer out of range");
        return static_cast<int>(v);
    }
    std::uint64_t unsigned64() const {
        const std::string s = trim(entry_.value);
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
            fail("expected a non-negative 64-bit integer, got '" + s + "'");
        return v;
    }

    template <typename Enum, std::size_t N>
    Enum choice(const std::array<std::pair<std::string_view, Enum>, N>& options) const {
        const std::string s = trim(entry_.value);
        for (const auto& [name, value] : options)
            if (s == name) return value;
        std::string allowed;
        for (const auto& [name, value] : options) allowed += (allowed.empty() ? "" : ", ") + std::string(name);
        fail("unknown value '" + s + "' (expected one of: " + allowed + ")");
    }

    std::vector<double> number_list() const {
        std::vector<double> out;
        if (trim(entry_.value).empty()) return out;
        for (const auto& item : split(entry_.value, ',')) out.push_back(number(item));
        return out;
    }
    std::vector<int> int_list() const {
        std::vector<int> out;
        if (trim(entry_.value).empty()) return out;
        for (const auto& item : split(entry_.value, ',')) out.push_back(static_cast<int>(integer(item)));
        return out;
    }
    Point point() const {
        const auto parts = split_ws(entry_.value);
        if (parts.size() != 2) fail("expected 'x y'");
        return {number(parts[0]), number(parts[1])};
    }
    std::vector<Cluster> cluster_list() const {
        std::vector<Cluster> out;
        if (trim(entry_.value).empty()) return out;
        for (const auto& item : split(entry_.value, ';')) {
            const auto parts = split_ws(item);
            if (parts.size() != 4) fail("each cluster is 'x y spread weight', got '" + item + "'");
            out.push_back({{number(parts[0]), number(parts[1])}, number(parts[2]), number(parts[3])});
        }
        return out;
    }
    const std::string& text() const { return entry_.value; }

private:
    std::string field_;
    const Entry& entry_;
};

constexpr std::array<std::pair<std::string_view, PathLossModel>, 2> kPathLoss{
    {{"bounded", PathLossModel::Bounded}, {"unbounded", PathLossModel::Unbounded}}};
constexpr std::array<std::pair<std::string_view, Fading>, 2> kFading{
    {{"none", Fading::None}, {"rayleigh", Fading::RayleighUnitMean}}};
constexpr std::array<std::pair<std::string_view, FadingMode>, 2> kFadingMode{
    {{"per_location", FadingMode::PerLocation}, {"per_sample", FadingMode::PerSample}}};
constexpr std::array<std::pair<std::string_view, WalkDirection>, 2> kDirection{
    {{"approach", WalkDirection::Approach}, {"retreat", WalkDirection::Retreat}}};
constexpr std::array<std::pair<std::string_view, TxProcess::Kind>, 4> kTxKind{
    {{"always_on", TxProcess::Kind::AlwaysOn},
     {"always_off", TxProcess::Kind::AlwaysOff},
     {"bernoulli", TxProcess::Kind::Bernoulli},
     {"power_descent", TxProcess::Kind::PowerDescent}}};
constexpr std::array<std::pair<std::string_view, Deployment>, 2> kDeployment{
    {{"uniform", Deployment::Uniform}, {"nonuniform", Deployment::Nonuniform}}};
constexpr std::array<std::pair<std::string_view, CandidateRule>, 2> kCandidates{
    {{"strict", CandidateRule::StrictBackward}, {"literal", CandidateRule::Literal}}};
constexpr std::array<std::pair<std::string_view, ThresholdMethod>, 3> kMethod{
    {{"auto", ThresholdMethod::Auto}, {"exact", ThresholdMethod::ExactBinomial}, {"normal", ThresholdMethod::NormalApprox}}};

using Setter = std::function<void(ScenarioConfig&, const Reader&)>;

const std::map<std::string, Setter, std::less<>>& setters() {
    static const std::map<std::string, Setter, std::less<>> table{
        {"seed", [](ScenarioConfig& c, const Reader& r) { c.seed = r.unsigned64(); }},
        {"trials", [](ScenarioConfig& c, const Reader& r) { c.trials = r.integer32(); }},
        {"output", [](ScenarioConfig& c, const Reader& r) { c.output = trim(r.text()); }},

        {"channel.p0_db", [](ScenarioConfig& c, const Reader& r) { c.channel.p0_db = r.number(); }},
        {"channel.alpha", [](ScenarioConfig& c, const Reader& r) { c.channel.alpha = r.number(); }},
        {"channel.noise_power", [](ScenarioConfig& c, const Reader& r) { c.channel.noise_power = r.number(); }},
        {"channel.path_loss", [](ScenarioConfig& c, const Reader& r) { c.channel.path_loss = r.choice(kPathLoss); }},
        {"channel.fading", [](ScenarioConfig& c, const Reader& r) { c.channel.fading = r.choice(kFading); }},
        {"channel.fading_mode", [](ScenarioConfig& c, const Reader& r) { c.channel.fading_mode = r.choice(kFadingMode); }},

        {"walk.t", [](ScenarioConfig& c, const Reader& r) { c.walk.t = r.integer32(); }},
        {"walk.d_spacing", [](ScenarioConfig& c, const Reader& r) { c.walk.d_spacing = r.number(); }},
        {"walk.d_min", [](ScenarioConfig& c, const Reader& r) { c.walk.d_min = r.number(); }},
        {"walk.d_max", [](ScenarioConfig& c, const Reader& r) { c.walk.d_max = r.number(); }},
        {"walk.m", [](ScenarioConfig& c, const Reader& r) { c.walk.m = r.integer32(); }},
        {"walk.direction", [](ScenarioConfig& c, const Reader& r) { c.walk.direction = r.choice(kDirection); }},

        {"tx.kind", [](ScenarioConfig& c, const Reader& r) { c.tx.kind = r.choice(kTxKind); }},
        {"tx.p", [](ScenarioConfig& c, const Reader& r) { c.tx.p = r.number(); }},
        {"tx.p_max_db", [](ScenarioConfig& c, const Reader& r) { c.tx.p_max_db = r.number(); }},
        {"tx.p_min_db", [](ScenarioConfig& c, const Reader& r) { c.tx.p_min_db = r.number(); }},
        {"tx.delta_db", [](ScenarioConfig& c, const Reader& r) { c.tx.delta_db = r.number(); }},
        {"tx.compare_db", [](ScenarioConfig& c, const Reader& r) { c.compare_db = r.number(); }},

        {"network.kind", [](ScenarioConfig& c, const Reader& r) { c.network.kind = r.choice(kDeployment); }},
        {"network.n", [](ScenarioConfig& c, const Reader& r) { c.network.n = r.integer32(); }},
        {"network.width", [](ScenarioConfig& c, const Reader& r) { c.network.region.width = r.number(); }},
        {"network.height", [](ScenarioConfig& c, const Reader& r) { c.network.region.height = r.number(); }},
        {"network.d_link", [](ScenarioConfig& c, const Reader& r) { c.network.d_link = r.number(); }},
        {"network.comm_radius", [](ScenarioConfig& c, const Reader& r) { c.network.comm_radius = r.number(); }},
        {"network.clusters", [](ScenarioConfig& c, const Reader& r) { c.network.clusters = r.cluster_list(); }},
        {"network.source", [](ScenarioConfig& c, const Reader& r) { c.network.source = r.point(); }},
        {"network.base_station", [](ScenarioConfig& c, const Reader& r) { c.network.base_station = r.point(); }},

        {"routing.p_max", [](ScenarioConfig& c, const Reader& r) { c.routing.p_max = r.number(); }},
        {"routing.candidates", [](ScenarioConfig& c, const Reader& r) { c.routing.candidates = r.choice(kCandidates); }},

        {"test.beta", [](ScenarioConfig& c, const Reader& r) { c.test.beta = r.number(); }},
        {"test.method", [](ScenarioConfig& c, const Reader& r) { c.test.method = r.choice(kMethod); }},

        {"sweep.alpha", [](ScenarioConfig& c, const Reader& r) { c.sweep.alpha = r.number_list(); }},
        {"sweep.beta", [](ScenarioConfig& c, const Reader& r) { c.sweep.beta = r.number_list(); }},
        {"sweep.p", [](ScenarioConfig& c, const Reader& r) { c.sweep.p = r.number_list(); }},
        {"sweep.t", [](ScenarioConfig& c, const Reader& r) { c.sweep.t = r.int_list(); }},
        {"sweep.n", [](ScenarioConfig& c, const Reader& r) { c.sweep.n = r.int_list(); }},
    };
    return table;
}

template <typename T>
std::string join(const std::vector<T>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        if constexpr (std::is_floating_point_v<T>) out += fmt_double(xs[i]);
        else out += std::to_string(xs[i]);
    }
    return out;
}

template <typename Enum, std::size_t N>
std::string_view name_of(const std::array<std::pair<std::string_view, Enum>, N>& options, Enum value) {
    for (const auto& [name, v] : options)
        if (v == value) return name;
    return "?";
}

void require(bool ok, const char* field, const std::string& message) {
    if (!ok) throw ConfigError(field, 0, message);
}

template <typename Fn>
void forward_invalid(const char* field, Fn&& fn) {
    try {
        fn();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(field, 0, e.what());
    }
}

}  // namespace

std::span<const ScenarioInfo> scenario_catalog() noexcept { return kCatalog; }

std::string_view to_string(ScenarioKind kind) noexcept {
    for (const auto& info : kCatalog)
        if (info.kind == kind) return info.name;
    return "?";
}

std::string_view to_string(Deployment deployment) noexcept {
    return deployment == Deployment::Uniform ? "uniform" : "nonuniform";
}

ConfigError::ConfigError(std::string field, int line, const std::string& message)
    : std::runtime_error((line > 0 ? "line " + std::to_string(line) + ": " : std::string{}) +
                         (field.empty() ? std::string{} : field + ": ") + message),
      field_(std::move(field)),
      line_(line) {}

std::vector<Cluster> default_clusters(Region region) {
    const double w = region.width;
    const double h = region.height;
    // Dense pockets strung across the region plus a thin uniform background.
    return {
        {{0.08 * w, 0.50 * h}, 0.05 * w, 0.12},
        {{0.26 * w, 0.35 * h}, 0.05 * w, 0.12},
        {{0.44 * w, 0.62 * h}, 0.05 * w, 0.12},
        {{0.62 * w, 0.40 * h}, 0.05 * w, 0.12},
        {{0.80 * w, 0.60 * h}, 0.05 * w, 0.12},
        {{0.95 * w, 0.50 * h}, 0.05 * w, 0.12},
        {{0.50 * w, 0.50 * h}, std::numeric_limits<double>::infinity(), 0.28},
    };
}

ScenarioConfig default_config(ScenarioKind kind) {
    ScenarioConfig c;
    c.scenario = kind;
    c.walk = WalkPlan{};
    switch (kind) {
        case ScenarioKind::TrendDemo:
            c.trials = 200;
            c.channel.fading = Fading::RayleighUnitMean;
            break;
        case ScenarioKind::BetaVsT:
            c.trials = 1;
            c.sweep.alpha = {3.0, 4.0};
            c.sweep.beta = {0.001, 0.002, 0.005, 0.01, 0.02, 0.05, 0.1};
            break;
        case ScenarioKind::PowerDescent:
            c.trials = 1000;
            c.channel.fading = Fading::RayleighUnitMean;
            c.tx = TxProcess::power_descent(36.0, 20.0, 0.8);
            break;
        case ScenarioKind::SchedulingDemo:
            c.trials = 1000;
            c.channel.fading = Fading::RayleighUnitMean;
            c.tx = TxProcess::bernoulli(0.1);
            c.sweep.p = {0.1, 0.5, 0.9};
            break;
        case ScenarioKind::BetaVsP:
            c.trials = 1000;
            c.walk.d_min = 20.0;
            c.sweep.t = {50, 75, 100};
            c.sweep.beta = {0.01, 0.02, 0.05, 0.1, 0.2, 0.3, 0.4};
            break;
        case ScenarioKind::NetworkDemo:
            c.trials = 1;
            break;
        case ScenarioKind::SecureRatio:
            c.trials = 200;
            c.sweep.n = {100, 200, 300, 400};
            break;
        case ScenarioKind::Calibration:
            c.trials = 10000;
            c.tx = TxProcess::always_off();
            c.walk.t = 100;
            c.test.method = ThresholdMethod::ExactBinomial;
            break;
    }
    c.network.clusters = default_clusters(c.network.region);
    return c;
}

void ScenarioConfig::validate() const {
    require(trials >= 1, "trials", "must be >= 1");
    require(channel.alpha > 2.0, "channel.alpha", "must exceed 2");
    require(channel.noise_power > 0.0, "channel.noise_power", "must be positive");
    require(std::isfinite(channel.p0_db), "channel.p0_db", "must be finite");
    forward_invalid("channel", [&] { channel.validate(); });
    require(walk.t >= 1, "walk.t", "must be >= 1");
    require(walk.m >= 1, "walk.m", "must be >= 1");
    require(walk.d_spacing > 0.0, "walk.d_spacing", "must be positive");
    require(walk.d_min > 0.0, "walk.d_min", "must be positive");
    forward_invalid("walk.d_max", [&] { walk.validate(); });
    require(tx.p >= 0.0 && tx.p <= 1.0, "tx.p", "must lie in [0,1]");
    forward_invalid("tx", [&] { tx.validate(); });
    require(std::isfinite(compare_db), "tx.compare_db", "must be finite");

    require(network.n >= 0, "network.n", "must be >= 0");
    require(network.region.width > 0.0, "network.width", "must be positive");
    require(network.region.height > 0.0, "network.height", "must be positive");
    require(network.d_link >= 0.0, "network.d_link", "must be non-negative");
    require(network.comm_radius > 0.0, "network.comm_radius", "must be positive");
    require(network.region.contains(network.source), "network.source", "must lie inside the region");
    require(network.region.contains(network.base_station), "network.base_station", "must lie inside the region");
    if (network.kind == Deployment::Nonuniform || scenario == ScenarioKind::SecureRatio) {
        require(!network.clusters.empty(), "network.clusters", "nonuniform deployment needs clusters");
        double total = 0.0;
        for (const auto& cl : network.clusters) {
            require(cl.weight > 0.0, "network.clusters", "weights must be positive");
            require(cl.spread >= 0.0, "network.clusters", "spread must be non-negative");
            total += cl.weight;
        }
        require(std::abs(total - 1.0) <= 1e-9, "network.clusters", "weights must sum to 1");
    }

    require(routing.p_max > 0.0 && routing.p_max < 1.0, "routing.p_max", "must lie in (0,1)");
    require(test.beta > 0.0 && test.beta < 1.0, "test.beta", "must lie in (0,1)");

    for (double a : sweep.alpha) require(a > 2.0, "sweep.alpha", "every alpha must exceed 2");
    for (double b : sweep.beta) {
        const bool upper_ok = scenario == ScenarioKind::BetaVsT ? b < 0.5 : b < 1.0;
        require(b > 0.0 && upper_ok, "sweep.beta", "beta out of range");
    }
    for (double p : sweep.p) require(p >= 0.0 && p <= 1.0, "sweep.p", "every p must lie in [0,1]");
    for (int t : sweep.t) require(t >= 1, "sweep.t", "every t must be >= 1");
    for (int n : sweep.n) require(n >= 0, "sweep.n", "every n must be >= 0");

    switch (scenario) {
        case ScenarioKind::BetaVsT:
            require(!sweep.alpha.empty(), "sweep.alpha", "BetaVsT needs at least one alpha");
            require(!sweep.beta.empty(), "sweep.beta", "BetaVsT needs at least one beta");
            break;
        case ScenarioKind::SchedulingDemo:
            require(!sweep.p.empty(), "sweep.p", "SchedulingDemo needs at least one p");
            break;
        case ScenarioKind::BetaVsP:
            require(!sweep.t.empty(), "sweep.t", "BetaVsP needs at least one t");
            require(!sweep.beta.empty(), "sweep.beta", "BetaVsP needs at least one beta");
            break;
        case ScenarioKind::SecureRatio:
            require(!sweep.n.empty(), "sweep.n", "SecureRatio needs at least one n");
            break;
        default:
            break;
    }
}

ScenarioConfig parse_config(std::string_view text) {
    std::map<std::string, Entry, std::less<>> entries;
    std::string section;
    int line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        const std::string line = trim(std::string_view(raw).substr(0, hash));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("", line_no, "malformed section header '" + line + "'");
            section = trim(std::string_view(line).substr(1, line.size() - 2));
            if (section.empty()) throw ConfigError("", line_no, "empty section name");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("", line_no, "expected 'key = value', got '" + line + "'");
        const std::string key = trim(std::string_view(line).substr(0, eq));
        if (key.empty()) throw ConfigError("", line_no, "missing key before '='");
        const std::string full = section.empty() ? key : section + "." + key;
        if (entries.contains(full)) throw ConfigError(full, line_no, "duplicate key");
        entries.emplace(full, Entry{trim(std::string_view(line).substr(eq + 1)), line_no});
    }

    const auto scenario_it = entries.find("scenario");
    if (scenario_it == entries.end()) throw ConfigError("scenario", 0, "missing required key");
    std::optional<ScenarioKind> kind;
    for (const auto& info : kCatalog)
        if (info.name == scenario_it->second.value) kind = info.kind;
    if (!kind)
        throw ConfigError("scenario", scenario_it->second.line,
                          "unknown scenario '" + scenario_it->second.value + "'");

    ScenarioConfig config = default_config(*kind);
    const auto& table = setters();
    for (const auto& [key, entry] : entries) {
        if (key == "scenario") continue;
        const auto it = table.find(key);
        if (it == table.end()) throw ConfigError(key, entry.line, "unknown key");
        it->second(config, Reader{key, entry});
    }
    // The walk starts one spacing out unless told otherwise.
    if (!entries.contains("walk.d_min") && entries.contains("walk.d_spacing") && *kind != ScenarioKind::BetaVsP)
        config.walk.d_min = config.walk.d_spacing;
    if (!entries.contains("network.clusters") &&
        (entries.contains("network.width") || entries.contains("network.height")))
        config.network.clusters = default_clusters(config.network.region);

    try {
        config.validate();
    } catch (const ConfigError& e) {
        const auto it = entries.find(e.field());
        if (it != entries.end() && e.line() == 0) throw ConfigError(e.field(), it->second.line, e.what());
        throw;
    }
    return config;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in{path};
    if (!in) throw IoError("cannot read config file '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error reading config file '" + path.string() + "'");
    return parse_config(buf.str());
}

std::string to_config_text(const ScenarioConfig& c) {
    std::ostringstream out;
    out << "scenario = " << to_string(c.scenario) << '\n'
        << "seed = " << c.seed << '\n'
        << "trials = " << c.trials << '\n'
        << "output = " << c.output << '\n';

    out << "\n[channel]\n"
        << "p0_db = " << fmt_double(c.channel.p0_db) << '\n'
        << "alpha = " << fmt_double(c.channel.alpha) << '\n'
        << "noise_power = " << fmt_double(c.channel.noise_power) << '\n'
        << "path_loss = " << name_of(kPathLoss, c.channel.path_loss) << '\n'
        << "fading = " << name_of(kFading, c.channel.fading) << '\n'
        << "fading_mode = " << name_of(kFadingMode, c.channel.fading_mode) << '\n';

    out << "\n[walk]\n"
        << "t = " << c.walk.t << '\n'
        << "d_spacing = " << fmt_double(c.walk.d_spacing) << '\n'
        << "d_min = " << fmt_double(c.walk.d_min) << '\n'
        << "d_max = " << fmt_double(c.walk.d_max) << '\n'
        << "m = " << c.walk.m << '\n'
        << "direction = " << name_of(kDirection, c.walk.direction) << '\n';

    out << "\n[tx]\n"
        << "kind = " << name_of(kTxKind, c.tx.kind) << '\n'
        << "p = " << fmt_double(c.tx.p) << '\n'
        << "p_max_db = " << fmt_double(c.tx.p_max_db) << '\n'
        << "p_min_db = " << fmt_double(c.tx.p_min_db) << '\n'
        << "delta_db = " << fmt_double(c.tx.delta_db) << '\n'
        << "compare_db = " << fmt_double(c.compare_db) << '\n';

    out << "\n[network]\n"
        << "kind = " << name_of(kDeployment, c.network.kind) << '\n'
        << "n = " << c.network.n << '\n'
        << "width = " << fmt_double(c.network.region.width) << '\n'
        << "height = " << fmt_double(c.network.region.height) << '\n'
        << "d_link = " << fmt_double(c.network.d_link) << '\n'
        << "comm_radius = " << fmt_double(c.network.comm_radius) << '\n'
        << "source = " << fmt_double(c.network.source.x) << ' ' << fmt_double(c.network.source.y) << '\n'
        << "base_station = " << fmt_double(c.network.base_station.x) << ' '
        << fmt_double(c.network.base_station.y) << '\n'
        << "clusters = ";
    for (std::size_t i = 0; i < c.network.clusters.size(); ++i) {
        const auto& cl = c.network.clusters[i];
        out << (i ? "; " : "") << fmt_double(cl.center.x) << ' ' << fmt_double(cl.center.y) << ' '
            << fmt_double(cl.spread) << ' ' << fmt_double(cl.weight);
    }
    out << '\n';

    out << "\n[routing]\n"
        << "p_max = " << fmt_double(c.routing.p_max) << '\n'
        << "candidates = " << name_of(kCandidates, c.routing.candidates) << '\n';

    out << "\n[test]\n"
        << "beta = " << fmt_double(c.test.beta) << '\n'
        << "method = " << name_of(kMethod, c.test.method) << '\n';

    out << "\n[sweep]\n"
        << "alpha = " << join(c.sweep.alpha) << '\n'
        << "beta = " << join(c.sweep.beta) << '\n'
        << "p = " << join(c.sweep.p) << '\n'
        << "t = " << join(c.sweep.t) << '\n'
        << "n = " << join(c.sweep.n) << '\n';
    return out.str();
}

std::uint64_t config_hash(const ScenarioConfig& config) {
    ScenarioConfig keyed = config;
    keyed.output = ".";
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : to_config_text(keyed)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace covert
