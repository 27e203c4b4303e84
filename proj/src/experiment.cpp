#include "hypercast/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <thread>

#include "json.hpp"

#include "hypercast/csv.hpp"
#include "hypercast/embed.hpp"
#include "hypercast/metrics.hpp"
#include "hypercast/mincut.hpp"
#include "hypercast/network.hpp"
#include "hypercast/rates.hpp"
#include "hypercast/rlnc.hpp"
#include "hypercast/rng.hpp"
#include "hypercast/version.hpp"

namespace hypercast {

namespace {

constexpr std::string_view kScenarioNames[] = {
    "lattice-mincut", "disk-convergence", "relcost-sweep", "rlnc-validate", "chernoff-check",
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(trim(s.substr(start)));
            return parts;
        }
        parts.push_back(trim(s.substr(start, pos - start)));
        start = pos + 1;
    }
}

[[noreturn]] void fail_line(int line, const std::string& message) {
    throw ConfigError("line " + std::to_string(line) + ": " + message);
}

template <class Number>
Number parse_number(int line, std::string_view key, std::string_view value) {
    Number out{};
    const char* first = value.data();
    const char* last = value.data() + value.size();
    const auto [end, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || end != last)
        fail_line(line, "value for '" + std::string(key) + "' is not a valid number: '" +
                            std::string(value) + "'");
    return out;
}

bool parse_bool(int line, std::string_view key, std::string_view value) {
    if (value == "true") return true;
    if (value == "false") return false;
    fail_line(line, "value for '" + std::string(key) + "' must be true or false");
}

bool is_lattice_scenario(Scenario scenario) {
    return scenario == Scenario::lattice_mincut || scenario == Scenario::rlnc_validate;
}

double resolved_prefactor(const ExperimentConfig& config) {
    return config.K > 0.0 ? config.K : default_density_prefactor();
}

// ---- row computation -------------------------------------------------------

// One row of a min-cut style scenario; optional fields stay blank in the CSV.
struct MinCutRow {
    int n = 0;
    double L = 0.0;
    std::int64_t boosted = 0;
    std::int64_t max_degree = 0;
    std::int64_t total = 0;
    std::int64_t c_min = 0;
    std::optional<double> cost, floor_cost, relative_cost;
    std::uint64_t seed = 0;
    bool connected = true;
    bool estimate = false;
    // lattice-mincut
    int s_id = -1, t_id = -1;
    std::int64_t cut_st = 0;
    // disk-convergence
    double r = 0.0;
    std::int64_t m_min = 0;
    std::optional<std::int64_t> lattice_bound;
    double ratio = 0.0;
};

void fill_costs(MinCutRow& row, const Network& net, const std::vector<Hyperarc>& arcs,
                const RateAssignment& rates) {
    row.n = net.size();
    row.L = net.L;
    row.boosted = rates.boosted_rate;
    row.total = total_rate(rates);
    for (const Hyperarc& arc : arcs)
        row.max_degree = std::max(row.max_degree, static_cast<std::int64_t>(arc.targets.size()));
    if (row.c_min > 0) {
        const CostReport report = cost_report(net, arcs, rates, row.c_min);
        row.cost = report.cost;
        row.floor_cost = report.floor_cost;
        row.relative_cost = report.relative_cost;
    } else if (row.max_degree > 0) {
        row.floor_cost = static_cast<double>(row.n) / static_cast<double>(row.max_degree);
    }
}

BroadcastMinCut broadcast_value(const Network& net, const RateAssignment& rates,
                                int dest_sample, std::uint64_t seed) {
    if (dest_sample > 0)
        return min_cut_broadcast_sampled(net, rates, net.source_id, dest_sample, seed);
    return min_cut_broadcast(net, rates, net.source_id);
}

MinCutRow lattice_mincut_row(const ExperimentConfig& config, double L_value,
                             std::uint64_t seed, int dest_sample) {
    Network net = generate_lattice(static_cast<int>(L_value), config.rho, config.W);
    const int n = net.size();
    Rng rng(seed);
    const int s = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    int t = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - 1)));
    if (t >= s) ++t;
    net.source_id = s;

    const RateAssignment rates = assign_rates(net);
    const auto arcs = build_hyperarcs(net);
    MinCutRow row;
    row.seed = seed;
    row.s_id = s;
    row.t_id = t;
    row.cut_st = min_cut_st(net, rates, s, t).value;
    const BroadcastMinCut broadcast = broadcast_value(net, rates, dest_sample, seed);
    row.c_min = broadcast.value;
    row.estimate = broadcast.estimate;
    fill_costs(row, net, arcs, rates);
    return row;
}

MinCutRow disk_row(const ExperimentConfig& config, double L, std::uint64_t seed,
                   int dest_sample, bool with_embedding) {
    const int n = disk_node_count(L, config.theta, resolved_prefactor(config), config.rho);
    Network net = generate_random_disk(n, L, config.rho, config.W, seed);
    const RateAssignment rates = assign_rates(net);
    const auto arcs = build_hyperarcs(net);

    MinCutRow row;
    row.seed = seed;
    row.connected = is_connected(net);
    const BroadcastMinCut broadcast = broadcast_value(net, rates, dest_sample, seed);
    row.c_min = broadcast.value;
    row.estimate = broadcast.estimate;
    fill_costs(row, net, arcs, rates);
    row.ratio = static_cast<double>(row.c_min) / static_cast<double>(rates.boosted_rate);
    if (with_embedding) {
        row.r = effective_r(config, L);
        row.m_min = occupancy(net, row.r).min_occupancy;
        try {
            row.lattice_bound = embedded_lattice_bound(net, rates, row.r);
        } catch (const std::invalid_argument&) {
            // preconditions unmet for this geometry: no certificate
        }
    }
    return row;
}

struct ChernoffRow {
    double L = 0.0, r = 0.0, mu = 0.0, delta = 0.0;
    double exponent = 0.0, bound = 0.0, threshold = 0.0;
    std::int64_t m_min = 0;
    bool below = false;
    std::uint64_t seed = 0;
};

ChernoffRow chernoff_row(const ExperimentConfig& config, double L, std::uint64_t seed) {
    ChernoffRow row;
    row.L = L;
    row.seed = seed;
    row.r = effective_r(config, L);
    row.delta = effective_delta(config, L);
    const int n = disk_node_count(L, config.theta, resolved_prefactor(config), config.rho);
    const Network net = generate_random_disk(n, L, config.rho, config.W, seed);
    row.mu = static_cast<double>(n) / (L * L);
    const OccupancyTailBound tail = min_occupancy_tail_bound(L, row.r, row.mu, row.delta);
    row.exponent = tail.exponent;
    row.bound = tail.value;
    row.m_min = occupancy(net, row.r).min_occupancy;
    row.threshold = (1.0 - row.delta) * row.mu * row.r * row.r;
    row.below = static_cast<double>(row.m_min) <= row.threshold;
    return row;
}

struct RlncRow {
    std::uint64_t seed = 0;
    int L = 0;
    SimReport report;
    std::string trace_name;  // empty when tracing is off
    std::string trace_csv;
};

RlncRow rlnc_row(const ExperimentConfig& config, double L_value, std::uint64_t seed) {
    RlncRow row;
    row.seed = seed;
    row.L = static_cast<int>(L_value);
    const Network net = generate_lattice(row.L, config.rho, config.W);
    const RateAssignment rates = assign_rates(net);
    SimOptions options;
    options.max_rounds = config.max_rounds;
    options.trace_ranks = config.trace_ranks;
    row.report = run_broadcast(net, rates, config.generation_size, seed, options);
    if (config.trace_ranks) {
        row.trace_name =
            "ranktrace_L" + std::to_string(row.L) + "_seed" + std::to_string(seed) + ".csv";
        CsvWriter trace({"round", "node", "rank"});
        for (std::size_t round = 0; round < row.report.rank_trace.size(); ++round)
            for (std::size_t v = 0; v < row.report.rank_trace[round].size(); ++v) {
                trace.field(static_cast<std::int64_t>(round + 1))
                    .field(static_cast<std::int64_t>(v))
                    .field(row.report.rank_trace[round][v]);
                trace.end_row();
            }
        row.trace_csv = trace.text();
    }
    return row;
}

template <class Row, class Fn>
std::vector<Row> compute_rows(int jobs, int count, Fn&& fn) {
    std::vector<Row> rows(static_cast<std::size_t>(count));
    if (count == 0) return rows;
    const int workers = std::clamp(jobs, 1, count);
    if (workers == 1) {
        for (int i = 0; i < count; ++i) rows[static_cast<std::size_t>(i)] = fn(i);
        return rows;
    }
    std::atomic<int> cursor{0};
    std::mutex error_lock;
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const int i = cursor.fetch_add(1);
                if (i >= count) return;
                try {
                    rows[static_cast<std::size_t>(i)] = fn(i);
                } catch (...) {
                    const std::lock_guard<std::mutex> hold(error_lock);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (std::thread& worker : pool) worker.join();
    if (first_error) std::rethrow_exception(first_error);
    return rows;
}

// ---- CSV assembly ----------------------------------------------------------

const std::vector<std::string> kReportColumns = {
    "N", "L", "rho", "W", "M", "mMax", "totalRate", "cMin", "eCost", "eBound", "eRelCost", "seed",
};

std::vector<std::string> with_extras(std::initializer_list<std::string> extras) {
    std::vector<std::string> columns = kReportColumns;
    columns.insert(columns.end(), extras);
    return columns;
}

void report_fields(CsvWriter& csv, const MinCutRow& row, const ExperimentConfig& config) {
    csv.field(row.n).field(row.L).field(config.rho).field(config.W);
    csv.field(row.boosted).field(row.max_degree).field(row.total).field(row.c_min);
    row.cost ? csv.field(*row.cost) : csv.blank_field();
    row.floor_cost ? csv.field(*row.floor_cost) : csv.blank_field();
    row.relative_cost ? csv.field(*row.relative_cost) : csv.blank_field();
    csv.field(row.seed);
}

}  // namespace

std::string_view scenario_name(Scenario scenario) {
    return kScenarioNames[static_cast<std::size_t>(scenario)];
}

double default_density_prefactor() { return std::numbers::pi; }

int disk_node_count(double L, double theta, double K, double rho) {
    const double nodes =
        K * std::pow(L, theta) * L * L / (std::numbers::pi * rho * rho);
    const auto n = std::llround(nodes);
    if (n < 2) throw std::invalid_argument("disk_node_count: parameters give fewer than 2 nodes");
    if (n > 50'000'000) throw std::invalid_argument("disk_node_count: node count over 5e7");
    return static_cast<int>(n);
}

double effective_r(const ExperimentConfig& config, double L) {
    if (config.r > 0.0) return config.r;
    const double scale = std::pow(L, -config.theta / 8.0);
    return std::min({scale, config.rho / 4.0, (config.W - config.rho) / 2.0});
}

double effective_delta(const ExperimentConfig& config, double L) {
    if (config.delta > 0.0) return config.delta;
    const double scale = std::pow(L, -config.theta / 8.0);
    return scale < 1.0 ? scale : 0.5;
}

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig config;
    bool have_scenario = false;
    std::map<std::string, int> seen;  // key -> first line

    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', start), text.size());
        const std::string_view line = trim(std::string_view(text).substr(start, eol - start));
        ++line_no;
        start = eol + 1;
        if (line.empty() || line.front() == '#') continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            fail_line(line_no, "expected 'key = value', got '" + std::string(line) + "'");
        const std::string key{trim(line.substr(0, eq))};
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) fail_line(line_no, "missing key before '='");
        if (value.empty()) fail_line(line_no, "missing value for '" + key + "'");
        if (const auto [it, fresh] = seen.emplace(key, line_no); !fresh)
            fail_line(line_no, "duplicate key '" + key + "' (first set on line " +
                                   std::to_string(it->second) + ")");

        if (key == "scenario") {
            bool known = false;
            for (std::size_t i = 0; i < std::size(kScenarioNames); ++i) {
                if (value == kScenarioNames[i]) {
                    config.scenario = static_cast<Scenario>(i);
                    known = true;
                    break;
                }
            }
            if (!known) fail_line(line_no, "unknown scenario '" + std::string(value) + "'");
            have_scenario = true;
        } else if (key == "L") {
            config.L.clear();
            for (const auto part : split(value, ','))
                config.L.push_back(parse_number<double>(line_no, key, part));
        } else if (key == "rho") {
            config.rho = parse_number<double>(line_no, key, value);
        } else if (key == "W") {
            config.W = parse_number<double>(line_no, key, value);
        } else if (key == "theta") {
            config.theta = parse_number<double>(line_no, key, value);
        } else if (key == "K") {
            config.K = parse_number<double>(line_no, key, value);
        } else if (key == "seeds") {
            config.seeds.clear();
            for (const auto part : split(value, ','))
                config.seeds.push_back(parse_number<std::uint64_t>(line_no, key, part));
        } else if (key == "G") {
            config.generation_size = parse_number<int>(line_no, key, value);
        } else if (key == "maxRounds") {
            config.max_rounds = parse_number<int>(line_no, key, value);
        } else if (key == "destSampling") {
            config.dest_sample = value == "all" ? 0 : parse_number<int>(line_no, key, value);
        } else if (key == "r") {
            config.r = parse_number<double>(line_no, key, value);
        } else if (key == "delta") {
            config.delta = parse_number<double>(line_no, key, value);
        } else if (key == "traceRanks") {
            config.trace_ranks = parse_bool(line_no, key, value);
        } else if (key == "outputPath") {
            config.output_path = std::string(value);
        } else {
            fail_line(line_no, "unknown key '" + key + "'");
        }
    }

    if (!have_scenario) throw ConfigError("missing required key 'scenario'");
    if (!(config.rho > 0.0)) throw ConfigError("rho must be positive");
    if (!(config.W > config.rho)) throw ConfigError("W must exceed rho");
    if (!(config.theta > 0.0)) throw ConfigError("theta must be positive");
    if (config.K < 0.0) throw ConfigError("K must be positive (or 0 for the default)");
    if (config.L.empty()) throw ConfigError("L must list at least one size");
    if (config.seeds.empty()) throw ConfigError("seeds must list at least one seed");
    if (config.generation_size < 1) throw ConfigError("G must be >= 1");
    if (config.max_rounds < 1) throw ConfigError("maxRounds must be >= 1");
    if (config.dest_sample < 0) throw ConfigError("destSampling must be 'all' or a positive count");
    if (config.r < 0.0) throw ConfigError("r must be positive (or 0 for auto)");
    if (config.delta < 0.0 || config.delta >= 1.0)
        throw ConfigError("delta must lie in (0,1) (or 0 for auto)");
    for (const double L : config.L) {
        if (!(L > 0.0)) throw ConfigError("L values must be positive");
        if (is_lattice_scenario(config.scenario)) {
            if (L != std::floor(L) || L < 2.0)
                throw ConfigError("lattice scenarios require integer L >= 2");
            if (!(L > 2.0 * config.W))
                throw ConfigError("lattice scenarios require L > 2W (nonempty interior)");
        }
    }
    if (config.scenario == Scenario::relcost_sweep && config.theta >= 1.0)
        config.warnings.push_back(
            "theta = " + format_double(config.theta) +
            " lies outside (0,1); the relative-cost trend is not guaranteed to converge");
    return config;
}

RunResult run_experiment(const ExperimentConfig& config, const RunOptions& options) {
    ExperimentConfig effective = config;
    if (options.seed_override) {
        if (options.seed_override->empty())
            throw ConfigError("seed override must list at least one seed");
        effective.seeds = *options.seed_override;
    }
    if (options.dest_sample_override >= 0) effective.dest_sample = options.dest_sample_override;

    const std::filesystem::path out_dir =
        options.out_override.empty() ? std::filesystem::path(config.output_path)
                                     : std::filesystem::path(options.out_override);
    std::filesystem::create_directories(out_dir);

    const int per_l = static_cast<int>(effective.seeds.size());
    const int row_count = static_cast<int>(effective.L.size()) * per_l;
    auto l_of = [&](int i) { return effective.L[static_cast<std::size_t>(i / per_l)]; };
    auto seed_of = [&](int i) { return effective.seeds[static_cast<std::size_t>(i % per_l)]; };

    RunResult result;
    result.out_dir = out_dir.string();
    result.warnings = effective.warnings;

    const std::string csv_name = std::string(scenario_name(effective.scenario)) + ".csv";
    std::vector<std::pair<std::string, std::string>> extra_files;  // name -> content
    std::string csv_text;

    switch (effective.scenario) {
        case Scenario::lattice_mincut: {
            const auto rows = compute_rows<MinCutRow>(options.jobs, row_count, [&](int i) {
                return lattice_mincut_row(effective, l_of(i), seed_of(i), effective.dest_sample);
            });
            CsvWriter csv(with_extras({"sId", "tId", "cutST", "estimate"}));
            for (const MinCutRow& row : rows) {
                report_fields(csv, row, effective);
                csv.field(row.s_id).field(row.t_id).field(row.cut_st).field(row.estimate);
                csv.end_row();
            }
            csv_text = csv.text();
            break;
        }
        case Scenario::disk_convergence: {
            const auto rows = compute_rows<MinCutRow>(options.jobs, row_count, [&](int i) {
                return disk_row(effective, l_of(i), seed_of(i), effective.dest_sample, true);
            });
            CsvWriter csv(with_extras({"theta", "K", "r", "mMin", "latticeBound", "cMinOverM",
                                       "connected", "estimate"}));
            for (const MinCutRow& row : rows) {
                report_fields(csv, row, effective);
                csv.field(effective.theta).field(resolved_prefactor(effective)).field(row.r);
                csv.field(row.m_min);
                row.lattice_bound ? csv.field(*row.lattice_bound) : csv.blank_field();
                csv.field(row.ratio).field(row.connected).field(row.estimate);
                csv.end_row();
            }
            csv_text = csv.text();
            break;
        }
        case Scenario::relcost_sweep: {
            const auto rows = compute_rows<MinCutRow>(options.jobs, row_count, [&](int i) {
                return disk_row(effective, l_of(i), seed_of(i), effective.dest_sample, false);
            });
            CsvWriter csv(with_extras({"theta", "K", "connected", "estimate"}));
            for (const MinCutRow& row : rows) {
                report_fields(csv, row, effective);
                csv.field(effective.theta).field(resolved_prefactor(effective));
                csv.field(row.connected).field(row.estimate);
                csv.end_row();
            }
            csv_text = csv.text();
            break;
        }
        case Scenario::rlnc_validate: {
            const auto rows = compute_rows<RlncRow>(options.jobs, row_count, [&](int i) {
                return rlnc_row(effective, l_of(i), seed_of(i));
            });
            CsvWriter csv({"seed", "G", "rounds", "transmissions", "receptions", "innovative",
                           "innovationRatio", "decodedAll", "L"});
            for (const RlncRow& row : rows) {
                csv.field(row.seed).field(row.report.generation_size).field(row.report.rounds);
                csv.field(row.report.transmissions).field(row.report.receptions);
                csv.field(row.report.innovative).field(row.report.innovation_ratio);
                csv.field(row.report.decoded_all).field(row.L);
                csv.end_row();
                if (!row.trace_name.empty()) extra_files.emplace_back(row.trace_name, row.trace_csv);
            }
            csv_text = csv.text();
            break;
        }
        case Scenario::chernoff_check: {
            const auto rows = compute_rows<ChernoffRow>(options.jobs, row_count, [&](int i) {
                return chernoff_row(effective, l_of(i), seed_of(i));
            });
            CsvWriter csv({"L", "r", "mu", "delta", "exponent", "bound", "mMin", "threshold",
                           "below", "seed"});
            for (const ChernoffRow& row : rows) {
                csv.field(row.L).field(row.r).field(row.mu).field(row.delta);
                csv.field(row.exponent).field(row.bound).field(row.m_min).field(row.threshold);
                csv.field(row.below).field(row.seed);
                csv.end_row();
            }
            csv_text = csv.text();
            break;
        }
    }

    // manifest: everything needed to reproduce the run bit for bit
    nlohmann::ordered_json manifest;
    manifest["version"] = std::string(kVersion);
    manifest["rngAlgorithm"] = std::string(kRngAlgorithm);
    manifest["scenario"] = std::string(scenario_name(effective.scenario));
    nlohmann::ordered_json cfg;
    cfg["L"] = effective.L;
    cfg["rho"] = effective.rho;
    cfg["W"] = effective.W;
    cfg["theta"] = effective.theta;
    cfg["K"] = effective.K;
    cfg["seeds"] = effective.seeds;
    cfg["G"] = effective.generation_size;
    cfg["maxRounds"] = effective.max_rounds;
    cfg["destSampling"] = effective.dest_sample;
    cfg["r"] = effective.r;
    cfg["delta"] = effective.delta;
    cfg["traceRanks"] = effective.trace_ranks;
    cfg["outputPath"] = config.output_path;
    manifest["config"] = std::move(cfg);
    manifest["resolved"]["K"] = resolved_prefactor(effective);
    manifest["outputs"] = nlohmann::ordered_json::array();
    manifest["outputs"].push_back(csv_name);
    for (const auto& [name, content] : extra_files) manifest["outputs"].push_back(name);
    manifest["warnings"] = effective.warnings;

    auto write_text = [&](const std::string& name, const std::string& content) {
        const std::filesystem::path path = out_dir / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
        result.files.push_back(path.string());
    };
    write_text(csv_name, csv_text);
    for (const auto& [name, content] : extra_files) write_text(name, content);
    write_text("manifest.json", manifest.dump(2) + "\n");
    return result;
}

}  // namespace hypercast
